#pragma once

// Continuum reference functions: normalized Hermite functions psi_n(s) and
// generalized Laguerre functions psi_n^alpha(s) = d_n^{-1} sqrt(s^{alpha+1} e^{-s}) L_n^alpha(s),
// d_n^2 = Gamma(n+alpha+1)/n!, orthonormal under the measure ds/s.

#include <vector>

namespace dqm {

double hermite_function(int n, double s);

/// psi_0(s) .. psi_{n_max}(s).
std::vector<double> hermite_functions(int n_max, double s);

/// Value and first two derivatives of a function at one abscissa.
struct Jet {
    double value;
    double d1;
    double d2;
};

/// Unnormalized generalized Laguerre polynomial L_n^alpha(s); zero for n < 0.
double laguerre_polynomial(double alpha, int n, double s);

double laguerre_function(double alpha, int n, double s);
double laguerre_function_derivative(double alpha, int n, double s);

/// psi, psi', psi'' from the product form and L' = -L_{n-1}^{alpha+1}, L'' = L_{n-2}^{alpha+2}.
Jet laguerre_jet(double alpha, int n, double s);

/// psi'' + [lambda/s - 1/4 - (alpha^2 - 1)/(4 s^2)] psi with lambda = n + (alpha+1)/2 + lambda_shift.
double laguerre_sl_residual(double alpha, int n, double s, double lambda_shift = 0.0);

/// Left side of the three-term relation in n:
/// -sqrt((n+alpha+1)(n+1)) psi_{n+1} - sqrt((n+alpha)n) psi_{n-1} + (2n+alpha+1-s) psi_n.
double laguerre_recurrence_residual(double alpha, int n, double s);

/// Left side of sqrt(2(n+1)) psi_{n+1} + sqrt(2n) psi_{n-1} - 2 s psi_n.
double hermite_recurrence_residual(int n, double s);

}  // namespace dqm
