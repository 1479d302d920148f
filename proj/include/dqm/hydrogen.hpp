#pragma once

// Hydrogen radial problem in atomic units and its Meixner lattice model.

#include "dqm/discrete_bases.hpp"

namespace dqm {

struct HydrogenConfig {
    int Z = 1;
};

class RadialQuantum {
public:
    /// Throws std::domain_error unless nu >= 1 and 0 <= l <= nu-1.
    RadialQuantum(int nu, int l);

    [[nodiscard]] int nu() const noexcept { return nu_; }
    [[nodiscard]] int l() const noexcept { return l_; }
    [[nodiscard]] double alpha() const noexcept { return 2.0 * l_ + 1.0; }
    [[nodiscard]] int n() const noexcept { return nu_ - l_ - 1; }
    [[nodiscard]] double gamma() const noexcept { return 2.0 * l_ + 2.0; }

private:
    int nu_;
    int l_;
};

/// -Z^2 / (2 nu^2).
double energy(const HydrogenConfig& config, int nu);

/// Normalized so that the integral of psi^2 / rho over (0, inf) is 1.
double radial_function(const RadialQuantum& q, double rho);

/// u'' + [nu/rho - 1/4 - l(l+1)/rho^2] u for u = radial_function.
double radial_equation_residual(const RadialQuantum& q, double rho);

struct SlMapping {
    double alpha;
    double lambda;
};

/// alpha = 2l+1, lambda = nu. Throws std::logic_error if l(l+1) != (alpha^2-1)/4.
SlMapping sl_mapping(const RadialQuantum& q);

/// MeixnerParams{gamma = 2l+2, mu = 1-h}.
MeixnerParams discrete_radial_model(int l, double h);

/// h * <x>_n under the Meixner inner product; tends to 2n+2l+2 as h -> 0.
double discrete_radial_mean(int l, int n, double h);

}  // namespace dqm
