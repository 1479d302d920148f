#include "dqm/continuous_bases.hpp"
#include "dqm/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace dqm;

TEST_CASE("Hermite function values")
{
    const double pi14 = std::pow(std::numbers::pi, -0.25);
    CHECK(hermite_function(0, 0.0) == doctest::Approx(pi14).epsilon(1e-12));
    CHECK(hermite_function(1, 0.0) == 0.0);
    CHECK(hermite_function(2, 0.0) == doctest::Approx(-pi14 / std::sqrt(2.0)).epsilon(1e-10));
    // 40-digit reference values.
    CHECK(hermite_function(1, 0.5) == doctest::Approx(0.46871701988925172646).epsilon(1e-13));
    CHECK(hermite_function(5, 1.3) == doctest::Approx(-0.39939146281375073457).epsilon(1e-13));
    CHECK(hermite_function(30, 2.5) == doctest::Approx(-0.27662955450847443396).epsilon(1e-12));
    CHECK(hermite_function(12, -3.7) == doctest::Approx(-0.25288164651013977829).epsilon(1e-12));
    const auto all = hermite_functions(12, -3.7);
    CHECK(all.size() == 13);
    CHECK(all[12] == doctest::Approx(hermite_function(12, -3.7)).epsilon(1e-15));
}

TEST_CASE("Hermite normalization and recurrence")
{
    for (int n : {0, 3, 10}) {
        const auto q = quad::integrate([n](double s) { return std::pow(hermite_function(n, s), 2); }, -12.0, 12.0);
        CHECK(q.value == doctest::Approx(1.0).epsilon(1e-8));
    }
    for (int n = 1; n <= 30; ++n)
        for (double s = -8.0; s <= 8.0; s += 0.5)
            CHECK(std::abs(hermite_recurrence_residual(n, s)) <= 1e-11);
}

TEST_CASE("Laguerre function values")
{
    CHECK(laguerre_function(0.0, 0, 1.0) == doctest::Approx(std::sqrt(std::exp(-1.0))).epsilon(1e-12));
    CHECK(laguerre_function(0.0, 0, 2.0) == doctest::Approx(0.52026009502288889636).epsilon(1e-14));
    CHECK(laguerre_function(1.0, 0, 1.0) == doctest::Approx(0.6065306597126334236).epsilon(1e-14));
    CHECK(laguerre_function(1.0, 3, 2.5) == doctest::Approx(-0.39543630816640821139).epsilon(1e-13));
    CHECK(laguerre_function(2.5, 4, 7.0) == doctest::Approx(0.22348268213627978091).epsilon(1e-13));
    CHECK(laguerre_function(3.0, 20, 35.0) == doctest::Approx(-0.39114670188188954892).epsilon(1e-11));
    CHECK(std::abs(laguerre_function(2.0, 1, 1e-8)) < 1e-10);
    CHECK(laguerre_polynomial(1.0, -1, 2.0) == 0.0);
    CHECK_THROWS_AS(laguerre_function(0.0, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(laguerre_function(0.0, 0, -1.0), std::domain_error);
    CHECK_THROWS_AS(laguerre_function(-1.0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(laguerre_function(0.0, -1, 1.0), std::domain_error);
}

TEST_CASE("Laguerre orthonormality under ds/s")
{
    for (double alpha : {0.0, 1.0, 2.5}) {
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; b <= 3; ++b) {
                const auto q = quad::integrate_half_line(
                    [&](double s) { return laguerre_function(alpha, a, s) * laguerre_function(alpha, b, s) / s; },
                    alpha + a + b);
                CHECK(q.value == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-8).scale(1.0));
            }
        }
    }
}

TEST_CASE("Laguerre derivatives")
{
    CHECK(std::abs(laguerre_function_derivative(0.0, 0, 1.0)) <= 1e-12);
    const double d = laguerre_function_derivative(0.0, 0, 2.0);
    CHECK(d < 0.0);
    CHECK(d == doctest::Approx(-0.13006502375572222409).epsilon(1e-13));
    for (double delta : {1e-5, 1e-6}) {
        const double fd = (laguerre_function(0.0, 0, 2.0 + delta) - laguerre_function(0.0, 0, 2.0 - delta)) / (2 * delta);
        CHECK(std::abs(fd - d) <= 1e-8);
    }
    const Jet j = laguerre_jet(1.0, 3, 2.5);
    CHECK(j.value == doctest::Approx(-0.39543630816640821139).epsilon(1e-13));
    CHECK(j.d1 == doctest::Approx(0.35290825238247374337).epsilon(1e-12));
    CHECK(j.d2 == doctest::Approx(0.53383901602465108537).epsilon(1e-12));
    for (double alpha : {0.0, 1.5, 3.0})
        for (int n : {0, 2, 5})
            for (double s : {0.5, 1.0, 5.0}) {
                const double h = 1e-5;
                const double fd = (laguerre_function(alpha, n, s + h) - laguerre_function(alpha, n, s - h)) / (2 * h);
                CHECK(std::abs(fd - laguerre_function_derivative(alpha, n, s)) <= 1e-7);
            }
}

TEST_CASE("Laguerre recurrence and differential equation")
{
    CHECK(std::abs(laguerre_sl_residual(1.0, 0, 1.0)) <= 1e-9);
    for (double s : {0.5, 1.0, 2.0, 4.0})
        CHECK(std::abs(laguerre_sl_residual(3.0, 2, s)) <= 1e-8);
    // Linearity in lambda: shifting it by 0.1 leaves 0.1 psi / s.
    for (double s : {0.7, 3.0}) {
        const double shifted = laguerre_sl_residual(2.0, 3, s, 0.1) - laguerre_sl_residual(2.0, 3, s);
        CHECK(shifted == doctest::Approx(0.1 * laguerre_function(2.0, 3, s) / s).epsilon(1e-9));
    }
    for (double alpha : {0.0, 1.0, 2.0, 3.0})
        for (int n = 0; n <= 20; ++n)
            for (double s = 0.25; s <= 40.0; s += 0.25) {
                if (n >= 1)
                    CHECK(std::abs(laguerre_recurrence_residual(alpha, n, s)) <= 1e-10);
                CHECK(std::abs(laguerre_sl_residual(alpha, n, s)) <= 1e-8);
            }
    CHECK_THROWS_AS(laguerre_sl_residual(1.0, 0, 0.0), std::domain_error);
}
