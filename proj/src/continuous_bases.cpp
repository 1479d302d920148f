#include "dqm/continuous_bases.hpp"

#include "dqm/numkit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dqm {

namespace {

void check_degree(int n)
{
    if (n < 0)
        throw std::domain_error("degree must be non-negative");
}

void check_laguerre_args(double alpha, double s)
{
    if (!(alpha > -1.0))
        throw std::domain_error("Laguerre: alpha must exceed -1");
    if (!(s > 0.0))
        throw std::domain_error("Laguerre: s must be positive");
}

// d_n^{-1} s^{(alpha+1)/2} e^{-s/2}
double laguerre_prefactor(double alpha, int n, double s)
{
    return std::exp(0.5 * (numkit::ln_gamma(n + 1.0) - numkit::ln_gamma(n + alpha + 1.0)) +
                    0.5 * (alpha + 1.0) * std::log(s) - 0.5 * s);
}

}  // namespace

std::vector<double> hermite_functions(int n_max, double s)
{
    check_degree(n_max);
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    out[0] = std::exp(-0.25 * std::log(std::numbers::pi) - 0.5 * s * s);
    if (n_max >= 1)
        out[1] = std::numbers::sqrt2 * s * out[0];
    for (int n = 1; n < n_max; ++n) {
        const auto k = static_cast<std::size_t>(n);
        out[k + 1] = (2.0 * s * out[k] - std::sqrt(2.0 * n) * out[k - 1]) / std::sqrt(2.0 * (n + 1));
    }
    return out;
}

double hermite_function(int n, double s)
{
    return hermite_functions(n, s).back();
}

double hermite_recurrence_residual(int n, double s)
{
    check_degree(n);
    const auto psi = hermite_functions(n + 1, s);
    const auto k = static_cast<std::size_t>(n);
    const double below = n > 0 ? std::sqrt(2.0 * n) * psi[k - 1] : 0.0;
    return std::sqrt(2.0 * (n + 1)) * psi[k + 1] + below - 2.0 * s * psi[k];
}

double laguerre_polynomial(double alpha, int n, double s)
{
    if (n < 0)
        return 0.0;
    double prev = 1.0;
    if (n == 0)
        return prev;
    double cur = 1.0 + alpha - s;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - s) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double laguerre_function(double alpha, int n, double s)
{
    check_degree(n);
    check_laguerre_args(alpha, s);
    return laguerre_prefactor(alpha, n, s) * laguerre_polynomial(alpha, n, s);
}

Jet laguerre_jet(double alpha, int n, double s)
{
    check_degree(n);
    check_laguerre_args(alpha, s);
    const double pre = laguerre_prefactor(alpha, n, s);
    const double a = 0.5 * (alpha + 1.0);
    const double g = a / s - 0.5;  // P'/P
    const double p0 = pre;
    const double p1 = pre * g;
    const double p2 = pre * (g * g - a / (s * s));
    const double l0 = laguerre_polynomial(alpha, n, s);
    const double l1 = -laguerre_polynomial(alpha + 1.0, n - 1, s);
    const double l2 = laguerre_polynomial(alpha + 2.0, n - 2, s);
    return {p0 * l0, p1 * l0 + p0 * l1, p2 * l0 + 2.0 * p1 * l1 + p0 * l2};
}

double laguerre_function_derivative(double alpha, int n, double s)
{
    return laguerre_jet(alpha, n, s).d1;
}

double laguerre_sl_residual(double alpha, int n, double s, double lambda_shift)
{
    const Jet psi = laguerre_jet(alpha, n, s);
    const double lambda = n + 0.5 * (alpha + 1.0) + lambda_shift;
    return psi.d2 + (lambda / s - 0.25 - (alpha * alpha - 1.0) / (4.0 * s * s)) * psi.value;
}

double laguerre_recurrence_residual(double alpha, int n, double s)
{
    check_degree(n);
    const double up = laguerre_function(alpha, n + 1, s);
    const double here = laguerre_function(alpha, n, s);
    const double down = n > 0 ? laguerre_function(alpha, n - 1, s) : 0.0;
    return -std::sqrt((n + alpha + 1.0) * (n + 1.0)) * up - std::sqrt((n + alpha) * n) * down +
           (2.0 * n + alpha + 1.0 - s) * here;
}

}  // namespace dqm
