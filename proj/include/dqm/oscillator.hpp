#pragma once

// Lattice harmonic oscillator built on the SU(2) ladder matrices.

#include "dqm/tridiagonal.hpp"

#include <vector>

namespace dqm {

struct OscillatorConfig {
    int twice_j;
    double beta;
    double mass;
    double omega;
    double hbar = 1.0;

    /// Throws std::domain_error on twice_j < 1, beta outside (0, pi) or non-positive constants.
    void validate() const;
};

/// Hermitian representative sqrt(hbar/2M omega)(A + A_dag); the leading i is a phase and dropped.
TridiagonalOperator position_matrix(const OscillatorConfig& config);

/// Antisymmetric sqrt(M hbar omega/2)(A - A_dag).
TridiagonalOperator momentum_matrix(const OscillatorConfig& config);

struct Dispersion {
    double dx;
    double dp;
};

/// From the anticommutator spectrum: dx^2 = (hbar/2M omega)(2n+1-n^2/j), dp^2 likewise.
Dispersion dispersion(const OscillatorConfig& config, int n);

/// Same quantities from <n|X^2|n> and <n|P P^T|n> as explicit matrix products.
Dispersion dispersion_from_matrices(const OscillatorConfig& config, int n);

/// (hbar/2)(2n+1-n^2/j).
double uncertainty_product(const OscillatorConfig& config, int n);

/// E_n = hbar omega (n + 1/2), n = 0..2j (m = j - n).
std::vector<double> spectrum(const OscillatorConfig& config);

/// Lattice spacing sqrt(hbar/(M omega)) of the position variable.
double grid_spacing(const OscillatorConfig& config);

}  // namespace dqm
