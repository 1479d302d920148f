#pragma once

// Wigner d-functions through the Kravchuk correspondence, and SU(2) ladder
// matrices in the degree basis. Half-integers are passed doubled (twice_m).

#include "dqm/discrete_bases.hpp"
#include "dqm/tridiagonal.hpp"

#include <utility>
#include <vector>

namespace dqm {

class AngularParams {
public:
    /// Throws std::domain_error unless twice_j >= 1 and 0 < beta < pi.
    AngularParams(int twice_j, double beta);

    [[nodiscard]] int twice_j() const noexcept { return twice_j_; }
    [[nodiscard]] double j() const noexcept { return 0.5 * twice_j_; }
    [[nodiscard]] double beta() const noexcept { return beta_; }
    /// p = sin^2(beta/2), N = 2j.
    [[nodiscard]] KravchukParams kravchuk() const;

private:
    int twice_j_;
    double beta_;
};

/// d^j_{m m'}(beta) = (-1)^{m-m'} K_{j-m}(j-m') with p = sin^2(beta/2).
double wigner_d(const AngularParams& params, int twice_m, int twice_mp);

/// Full (2j+1)x(2j+1) matrix; row index j-m, column index j-m'.
Eigen::MatrixXd wigner_matrix(const AngularParams& params);

/// |d_{mm'} - (-1)^{m-m'} d_{m'm}|.
double wigner_symmetry_residual(const AngularParams& params, int twice_m, int twice_mp);

enum class DerivativeIdentity { eq11, eq12, eq12a };

/// Residual of a first-order beta identity with d/dbeta taken by central differences.
double wigner_derivative_residual(const AngularParams& params, int twice_m, int twice_mp,
                                  double delta, DerivativeIdentity which);

enum class DifferenceIdentity { eq3a, eq4a, eq5a, eq6a };

/// Residual of a three-point identity in m' (3a, 5a, 6a) or m (4a).
/// Shifted entries outside |m| <= j count as zero.
double wigner_difference_residual(const AngularParams& params, int twice_m, int twice_mp,
                                  DifferenceIdentity which);

/// (A, A_dag): A lowers n with sqrt((2j-n+1)n/(2j)); A_dag is its transpose.
std::pair<TridiagonalOperator, TridiagonalOperator> su2_ladder_matrices(int twice_j);

/// Diagonal of A A_dag - A_dag A; equals 1 - n/j.
std::vector<double> su2_commutator_spectrum(int twice_j);

/// Diagonal of A A_dag + A_dag A; equals 2n + 1 - n^2/j.
std::vector<double> su2_anticommutator_spectrum(int twice_j);

}  // namespace dqm
