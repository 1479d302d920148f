#pragma once

// Normalized Kravchuk functions on x = 0..N and normalized Meixner functions
// on x = 0, 1, 2, ... (truncated), built by three-term recurrence in the degree.

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace dqm {

/// Lattice size N and probability p of the oscillator model; q = 1 - p is derived.
class KravchukParams {
public:
    /// Throws std::domain_error unless N >= 1 and 0 < p < 1.
    KravchukParams(int N, double p);

    [[nodiscard]] int N() const noexcept { return N_; }
    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double q() const noexcept { return 1.0 - p_; }

private:
    int N_;
    double p_;
};

/// Meixner parameters gamma > 0, 0 < mu < 1.
class MeixnerParams {
public:
    MeixnerParams(double gamma, double mu);

    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    [[nodiscard]] double mu() const noexcept { return mu_; }

private:
    double gamma_;
    double mu_;
};

enum class Family { Kravchuk, Meixner };

/// One normalized basis function sampled on its grid x = 0..grid_limit.
struct BasisRow {
    Family family;
    int degree;
    std::vector<double> values;
    int grid_limit;
};

// ---- Kravchuk ---------------------------------------------------------------

/// Binomial weight rho(x) = C(N,x) p^x q^(N-x).
double kravchuk_weight(const KravchukParams& params, int x);

double kravchuk_function(const KravchukParams& params, int n, int x);

/// K_0..K_{n_max}(x) at one lattice point.
std::vector<double> kravchuk_column(const KravchukParams& params, int x, int n_max);

/// Columns at x-1, x, x+1 (1 <= x <= N-1) with consistently rounded seeds, for
/// difference operators whose terms cancel to high order.
std::array<std::vector<double>, 3> kravchuk_stencil(const KravchukParams& params, int x, int n_max);

/// (n_max+1) x (N+1) matrix, row n holds K_n over the grid.
Eigen::MatrixXd kravchuk_rows(const KravchukParams& params, int n_max);

BasisRow kravchuk_row(const KravchukParams& params, int n);

Eigen::MatrixXd kravchuk_gram(const KravchukParams& params, int n_max);

// ---- Meixner ----------------------------------------------------------------

struct MeixnerWeight {
    double rho1;          ///< mu^x Gamma(x+gamma+1) / (Gamma(x+1) Gamma(gamma))
    double inner_weight;  ///< 1 / (mu (x + gamma))
};

MeixnerWeight meixner_weight(const MeixnerParams& params, int x);

double meixner_function(const MeixnerParams& params, int n, int x);

/// M_0..M_{n_max}(x) at one lattice point.
std::vector<double> meixner_column(const MeixnerParams& params, int x, int n_max);

/// Smallest grid cutoff X for degrees 0..n_max such that the analytic
/// geometric tail bound of sum_{x>X} M_n(x)^2 / (mu (x+gamma)) is below tol
/// and |M_n(X)| < tol.
int meixner_cutoff(const MeixnerParams& params, int n_max, double tol);

/// (n_max+1) x (grid_limit+1) matrix of M_n(x).
Eigen::MatrixXd meixner_rows(const MeixnerParams& params, int n_max, int grid_limit);

BasisRow meixner_row(const MeixnerParams& params, int n, double tol = 1e-14);

Eigen::MatrixXd meixner_gram(const MeixnerParams& params, int n_max, double tol);

/// <x>_n under the weighted inner product, closed form (n(1+mu) + mu gamma) / (1 - mu).
double meixner_mean_x(const MeixnerParams& params, int n);

/// Same expectation by direct truncated summation.
double meixner_mean_x_sum(const MeixnerParams& params, int n, double tol = 1e-16);

}  // namespace dqm
