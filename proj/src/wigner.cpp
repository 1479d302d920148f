#include "dqm/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dqm {

namespace {

void check_index(const AngularParams& params, int twice_m)
{
    const int tj = params.twice_j();
    if (twice_m < -tj || twice_m > tj)
        throw std::domain_error("Wigner index outside -j..j");
    if (((tj - twice_m) % 2) != 0)
        throw std::domain_error("Wigner index not in the half-integer class of j");
}

// Entry with zero outside the index range; used for shifted terms.
double d_or_zero(const AngularParams& params, int twice_m, int twice_mp)
{
    const int tj = params.twice_j();
    if (twice_m < -tj || twice_m > tj || twice_mp < -tj || twice_mp > tj)
        return 0.0;
    return wigner_d(params, twice_m, twice_mp);
}

// sqrt((j -+ m)(j +- m + 1)) with doubled m.
double raise_coef(int twice_j, int twice_m)
{
    return 0.5 * std::sqrt(static_cast<double>(twice_j - twice_m) * (twice_j + twice_m + 2));
}

double lower_coef(int twice_j, int twice_m)
{
    return 0.5 * std::sqrt(static_cast<double>(twice_j + twice_m) * (twice_j - twice_m + 2));
}

}  // namespace

AngularParams::AngularParams(int twice_j, double beta) : twice_j_(twice_j), beta_(beta)
{
    if (twice_j < 1)
        throw std::domain_error("AngularParams: twice_j must be >= 1");
    if (!(beta > 0.0 && beta < std::numbers::pi))
        throw std::domain_error("AngularParams: beta must lie in (0, pi)");
}

KravchukParams AngularParams::kravchuk() const
{
    const double s = std::sin(0.5 * beta_);
    return {twice_j_, s * s};
}

double wigner_d(const AngularParams& params, int twice_m, int twice_mp)
{
    check_index(params, twice_m);
    check_index(params, twice_mp);
    const int tj = params.twice_j();
    const int n = (tj - twice_m) / 2;
    const int x = (tj - twice_mp) / 2;
    const double k = kravchuk_function(params.kravchuk(), n, x);
    return ((n + x) % 2 == 0) ? k : -k;  // (-1)^{m-m'} = (-1)^{x-n}
}

Eigen::MatrixXd wigner_matrix(const AngularParams& params)
{
    const int tj = params.twice_j();
    const Eigen::MatrixXd k = kravchuk_rows(params.kravchuk(), tj);
    Eigen::MatrixXd d(tj + 1, tj + 1);
    for (int n = 0; n <= tj; ++n)
        for (int x = 0; x <= tj; ++x)
            d(n, x) = ((n + x) % 2 == 0) ? k(n, x) : -k(n, x);
    return d;
}

double wigner_symmetry_residual(const AngularParams& params, int twice_m, int twice_mp)
{
    const double a = wigner_d(params, twice_m, twice_mp);
    const double b = wigner_d(params, twice_mp, twice_m);
    const bool odd = (((twice_m - twice_mp) / 2) % 2) != 0;
    return std::abs(a - (odd ? -b : b));
}

double wigner_derivative_residual(const AngularParams& params, int twice_m, int twice_mp,
                                  double delta, DerivativeIdentity which)
{
    check_index(params, twice_m);
    check_index(params, twice_mp);
    const double beta = params.beta();
    if (!(delta > 0.0) || !(beta - delta > 0.0) || !(beta + delta < std::numbers::pi))
        throw std::domain_error("wigner_derivative_residual: beta +- delta leaves (0, pi)");
    const int tj = params.twice_j();
    const AngularParams up(tj, beta + delta);
    const AngularParams down(tj, beta - delta);
    const double deriv =
        (wigner_d(up, twice_m, twice_mp) - wigner_d(down, twice_m, twice_mp)) / (2.0 * delta);
    const double d = wigner_d(params, twice_m, twice_mp);
    const double m = 0.5 * twice_m;
    const double mp = 0.5 * twice_mp;
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    switch (which) {
    case DerivativeIdentity::eq11:
        return std::abs(deriv + (mp - m * cb) / sb * d -
                        raise_coef(tj, twice_m) * d_or_zero(params, twice_m + 2, twice_mp));
    case DerivativeIdentity::eq12:
        return std::abs(-deriv + (mp - m * cb) / sb * d -
                        lower_coef(tj, twice_m) * d_or_zero(params, twice_m - 2, twice_mp));
    case DerivativeIdentity::eq12a:
        return std::abs(deriv - (m - mp * cb) / sb * d -
                        lower_coef(tj, twice_mp) * d_or_zero(params, twice_m, twice_mp - 2));
    }
    throw std::invalid_argument("wigner_derivative_residual: unknown identity");
}

double wigner_difference_residual(const AngularParams& params, int twice_m, int twice_mp,
                                  DifferenceIdentity which)
{
    check_index(params, twice_m);
    check_index(params, twice_mp);
    const int tj = params.twice_j();
    const double m = 0.5 * twice_m;
    const double mp = 0.5 * twice_mp;
    const double half_sb = 0.5 * std::sin(params.beta());
    const double cb = std::cos(params.beta());
    const double sh = std::sin(0.5 * params.beta());
    const double d = wigner_d(params, twice_m, twice_mp);
    auto at = [&](int dm, int dmp) { return d_or_zero(params, twice_m + dm, twice_mp + dmp); };
    switch (which) {
    case DifferenceIdentity::eq3a:
        return std::abs(half_sb * lower_coef(tj, twice_mp) * at(0, -2) +
                        half_sb * raise_coef(tj, twice_mp) * at(0, 2) + (m - mp * cb) * d);
    case DifferenceIdentity::eq4a:
        return std::abs(half_sb * lower_coef(tj, twice_m) * at(-2, 0) +
                        half_sb * raise_coef(tj, twice_m) * at(2, 0) - (mp - m * cb) * d);
    case DifferenceIdentity::eq5a:
        return std::abs(sh * sh * (m + mp) * d + half_sb * raise_coef(tj, twice_mp) * at(0, 2) -
                        half_sb * lower_coef(tj, twice_m) * at(-2, 0));
    case DifferenceIdentity::eq6a:
        return std::abs(sh * sh * (m + mp) * d + half_sb * lower_coef(tj, twice_mp) * at(0, -2) -
                        half_sb * raise_coef(tj, twice_m) * at(2, 0));
    }
    throw std::invalid_argument("wigner_difference_residual: unknown identity");
}

std::pair<TridiagonalOperator, TridiagonalOperator> su2_ladder_matrices(int twice_j)
{
    if (twice_j < 1)
        throw std::domain_error("su2_ladder_matrices: twice_j must be >= 1");
    const double tj = twice_j;
    std::vector<double> off(static_cast<std::size_t>(twice_j));
    // A(n-1, n) = sqrt((2j-n+1) n / 2j) for n = 1..2j.
    for (int n = 1; n <= twice_j; ++n)
        off[static_cast<std::size_t>(n) - 1] = std::sqrt((tj - n + 1.0) * n / tj);
    const std::vector<double> zeros(off.size(), 0.0);
    const std::vector<double> diag(static_cast<std::size_t>(twice_j) + 1, 0.0);
    TridiagonalOperator a(zeros, diag, off, BasisLabel::degree_n);
    TridiagonalOperator a_dag = a.transpose();
    return {std::move(a), std::move(a_dag)};
}

std::vector<double> su2_commutator_spectrum(int twice_j)
{
    const auto [a, a_dag] = su2_ladder_matrices(twice_j);
    auto x = product_diagonal(a, a_dag);
    const auto y = product_diagonal(a_dag, a);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] -= y[i];
    return x;
}

std::vector<double> su2_anticommutator_spectrum(int twice_j)
{
    const auto [a, a_dag] = su2_ladder_matrices(twice_j);
    auto x = product_diagonal(a, a_dag);
    const auto y = product_diagonal(a_dag, a);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] += y[i];
    return x;
}

}  // namespace dqm
