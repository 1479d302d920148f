#pragma once

// Continuum-limit harness: discrete functions and ladder images against
// Hermite and Laguerre functions at the realized lattice abscissae.

#include <span>
#include <string>
#include <vector>

namespace dqm {

struct LimitError {
    double sup_error = 0.0;
    int probes_used = 0;
    int skipped_probes = 0;  ///< probes whose lattice point fell off the grid
};

/// sup |(2Npq)^{1/4} K_n(x) - psi_n(s_exact)|, x = round(Np + sqrt(2Npq) s).
LimitError kravchuk_to_hermite_error(int n, int N, double p, std::span<const double> s_probes);

enum class LadderDirection { raise, lower };

/// Rescaled symmetric-form ladder image (2Npq)^{1/4}/sqrt(Npq) L K_n against
/// sqrt(n+1) psi_{n+1} (raise) or sqrt(n) psi_{n-1} (lower).
LimitError ladder_limit_error(int n, int N, double p, std::span<const double> s_probes,
                              LadderDirection which);

/// sup |M_n(x) - psi_n^alpha(h x)| with gamma = alpha+1, mu = 1-h, x = round(s/h).
LimitError meixner_to_laguerre_error(double alpha, int n, double h,
                                     std::span<const double> s_probes);

enum class Study { kravchuk_hermite, ladder, meixner_laguerre, anticommutator };

std::string to_string(Study study);

struct SweepSpec {
    Study study = Study::kravchuk_hermite;
    int n = 0;
    double p = 0.5;
    double alpha = 0.0;
    LadderDirection direction = LadderDirection::raise;
    /// N values (kravchuk_hermite, ladder), h values (meixner_laguerre) or 2j values (anticommutator).
    std::vector<double> resolutions;
    /// Empty selects default_probes(study).
    std::vector<double> probes;
};

struct ConvergenceReport {
    Study study;
    int n;
    std::vector<double> resolutions;
    std::vector<double> errors;          ///< NaN where evaluation failed
    std::vector<double> observed_rates;  ///< NaN where undefined
    std::vector<std::string> failures;   ///< empty string where evaluation succeeded

    [[nodiscard]] bool complete() const;
    [[nodiscard]] bool strictly_decreasing() const;
};

/// [-2, 2] (81 points) for the Hermite studies, [0.5, 6] (56 points) for Laguerre.
std::vector<double> default_probes(Study study);

/// Throws std::invalid_argument for fewer than 3 or non strictly monotone resolutions.
/// Resolutions are evaluated concurrently and assembled in input order.
ConvergenceReport convergence_sweep(const SweepSpec& spec);

}  // namespace dqm
