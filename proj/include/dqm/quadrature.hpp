#pragma once

#include <functional>

namespace dqm::quad {

struct QuadratureResult {
    double value;
    double error_estimate;
    int panels;
};

/// Adaptive composite 20-point Gauss-Legendre on [a, b]. A panel is accepted
/// when it agrees with the sum over its two halves to within abs_tol scaled by
/// the panel's share of the interval.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-13, int max_depth = 40);

/// Integral over [0, infinity) of an integrand decaying at least like C s^k e^{-s}:
/// integrates [0, s_max] with s_max chosen so the analytic tail bound
/// C s_max^k e^{-s_max} (k+1) is below tail_tol.
QuadratureResult integrate_half_line(const std::function<double(double)>& f, double decay_power,
                                     double tail_tol = 1e-15, double abs_tol = 1e-13);

}  // namespace dqm::quad
