#include "dqm/quadrature.hpp"

#include "dqm/numkit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dqm::quad {

namespace {

constexpr int kOrder = 20;

struct GaussLegendre {
    std::array<double, kOrder> nodes{};
    std::array<double, kOrder> weights{};

    GaussLegendre()
    {
        for (int i = 0; i < kOrder; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= kOrder; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16)
                    break;
            }
            nodes[static_cast<std::size_t>(i)] = x;
            weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre& rule()
{
    static const GaussLegendre gl;
    return gl;
}

double panel(const std::function<double(double)>& f, double a, double b)
{
    const auto& gl = rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    numkit::Accumulator acc;
    for (int i = 0; i < kOrder; ++i)
        acc += gl.weights[static_cast<std::size_t>(i)] *
               f(mid + half * gl.nodes[static_cast<std::size_t>(i)]);
    return half * acc.value();
}

struct Adaptive {
    const std::function<double(double)>& f;
    double tol_density;
    int max_depth;
    numkit::Accumulator value;
    double error = 0.0;
    int panels = 0;

    void run(double a, double b, double whole, int depth)
    {
        const double m = 0.5 * (a + b);
        const double left = panel(f, a, m);
        const double right = panel(f, m, b);
        const double diff = std::abs(left + right - whole);
        if (diff <= tol_density * (b - a) || depth >= max_depth) {
            value += left + right;
            error += diff;
            panels += 2;
            return;
        }
        run(a, m, left, depth + 1);
        run(m, b, right, depth + 1);
    }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_depth)
{
    if (!(b > a))
        throw std::domain_error("integrate: requires b > a");
    constexpr int kInitialPanels = 16;
    Adaptive ad{f, abs_tol / (b - a), max_depth, {}, 0.0, 0};
    const double width = (b - a) / kInitialPanels;
    for (int i = 0; i < kInitialPanels; ++i) {
        const double lo = a + i * width;
        const double hi = (i + 1 == kInitialPanels) ? b : lo + width;
        ad.run(lo, hi, panel(f, lo, hi), 0);
    }
    return {ad.value.value(), ad.error, ad.panels};
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f, double decay_power,
                                     double tail_tol, double abs_tol)
{
    // For S >= 2m, Gamma(m+1, S) <= 2 S^m e^{-S}.
    const double m = std::max(decay_power, 0.0);
    double upper = std::max(2.0 * m, 8.0);
    while (std::log(2.0) + m * std::log(upper) - upper > std::log(tail_tol))
        upper *= 1.25;
    auto result = integrate(f, 0.0, upper, abs_tol);
    result.error_estimate += tail_tol;
    return result;
}

}  // namespace dqm::quad
