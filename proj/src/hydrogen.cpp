#include "dqm/hydrogen.hpp"

#include "dqm/continuous_bases.hpp"

#include <stdexcept>
#include <string>

namespace dqm {

RadialQuantum::RadialQuantum(int nu, int l) : nu_(nu), l_(l)
{
    if (nu < 1)
        throw std::domain_error("hydrogen: nu must be >= 1");
    if (l < 0 || l > nu - 1)
        throw std::domain_error("hydrogen: l must satisfy 0 <= l <= nu-1 (degeneracy l = 0..nu-1), got nu=" +
                                std::to_string(nu) + ", l=" + std::to_string(l));
}

double energy(const HydrogenConfig& config, int nu)
{
    if (nu < 1)
        throw std::domain_error("hydrogen: nu must be >= 1");
    if (config.Z < 1)
        throw std::domain_error("hydrogen: Z must be a positive integer");
    const double z = config.Z;
    return -z * z / (2.0 * static_cast<double>(nu) * nu);
}

double radial_function(const RadialQuantum& q, double rho)
{
    if (!(rho > 0.0))
        throw std::domain_error("hydrogen: rho must be positive");
    return laguerre_function(q.alpha(), q.n(), rho);
}

double radial_equation_residual(const RadialQuantum& q, double rho)
{
    if (!(rho > 0.0))
        throw std::domain_error("hydrogen: rho must be positive");
    const Jet u = laguerre_jet(q.alpha(), q.n(), rho);
    const double l = q.l();
    return u.d2 + (q.nu() / rho - 0.25 - l * (l + 1.0) / (rho * rho)) * u.value;
}

SlMapping sl_mapping(const RadialQuantum& q)
{
    const long long l = q.l();
    const long long a = 2 * l + 1;
    if (4 * l * (l + 1) != a * a - 1)
        throw std::logic_error("sl_mapping: l(l+1) != (alpha^2-1)/4");
    return {static_cast<double>(a), q.n() + 0.5 * (static_cast<double>(a) + 1.0)};
}

MeixnerParams discrete_radial_model(int l, double h)
{
    if (l < 0)
        throw std::domain_error("hydrogen: l must be non-negative");
    if (!(h > 0.0 && h < 1.0))
        throw std::domain_error("hydrogen: h must lie in (0, 1)");
    return {2.0 * l + 2.0, 1.0 - h};
}

double discrete_radial_mean(int l, int n, double h)
{
    return h * meixner_mean_x(discrete_radial_model(l, h), n);
}

}  // namespace dqm
