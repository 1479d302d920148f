#include "dqm/oscillator.hpp"

#include "dqm/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dqm {

namespace {

void check_level(const OscillatorConfig& config, int n)
{
    if (n < 0 || n > config.twice_j)
        throw std::domain_error("oscillator: level n outside 0..2j");
}

double anticommutator_entry(const OscillatorConfig& config, int n)
{
    return su2_anticommutator_spectrum(config.twice_j)[static_cast<std::size_t>(n)];
}

}  // namespace

void OscillatorConfig::validate() const
{
    if (twice_j < 1)
        throw std::domain_error("oscillator: twice_j must be >= 1");
    if (!(beta > 0.0 && beta < std::numbers::pi))
        throw std::domain_error("oscillator: beta must lie in (0, pi)");
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0))
        throw std::domain_error("oscillator: mass, omega and hbar must be positive");
}

TridiagonalOperator position_matrix(const OscillatorConfig& config)
{
    config.validate();
    const auto [a, a_dag] = su2_ladder_matrices(config.twice_j);
    return (a + a_dag).scaled(std::sqrt(config.hbar / (2.0 * config.mass * config.omega)));
}

TridiagonalOperator momentum_matrix(const OscillatorConfig& config)
{
    config.validate();
    const auto [a, a_dag] = su2_ladder_matrices(config.twice_j);
    return (a - a_dag).scaled(std::sqrt(config.mass * config.hbar * config.omega / 2.0));
}

Dispersion dispersion(const OscillatorConfig& config, int n)
{
    config.validate();
    check_level(config, n);
    const double s = anticommutator_entry(config, n);
    return {std::sqrt(config.hbar / (2.0 * config.mass * config.omega) * s),
            std::sqrt(config.mass * config.hbar * config.omega / 2.0 * s)};
}

Dispersion dispersion_from_matrices(const OscillatorConfig& config, int n)
{
    check_level(config, n);
    const auto x = position_matrix(config);
    const auto p = momentum_matrix(config);
    const auto i = static_cast<std::size_t>(n);
    const double x2 = product_diagonal(x, x)[i];
    const double p2 = product_diagonal(p, p.transpose())[i];
    return {std::sqrt(x2), std::sqrt(p2)};
}

double uncertainty_product(const OscillatorConfig& config, int n)
{
    config.validate();
    check_level(config, n);
    return 0.5 * config.hbar * anticommutator_entry(config, n);
}

std::vector<double> spectrum(const OscillatorConfig& config)
{
    config.validate();
    std::vector<double> e(static_cast<std::size_t>(config.twice_j) + 1);
    for (int n = 0; n <= config.twice_j; ++n)
        e[static_cast<std::size_t>(n)] = config.hbar * config.omega * (n + 0.5);
    return e;
}

double grid_spacing(const OscillatorConfig& config)
{
    config.validate();
    return std::sqrt(config.hbar / (config.mass * config.omega));
}

}  // namespace dqm
