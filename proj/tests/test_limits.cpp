#include "dqm/continuous_bases.hpp"
#include "dqm/discrete_bases.hpp"
#include "dqm/limits.hpp"
#include "dqm/wigner.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace dqm;

namespace {

SweepSpec spec(Study study, int n, std::vector<double> res)
{
    SweepSpec s;
    s.study = study;
    s.n = n;
    s.resolutions = std::move(res);
    return s;
}

}  // namespace

TEST_CASE("default probes")
{
    const auto h = default_probes(Study::kravchuk_hermite);
    CHECK(h.size() == 81);
    CHECK(h.front() == -2.0);
    CHECK(h.back() == doctest::Approx(2.0));
    const auto l = default_probes(Study::meixner_laguerre);
    CHECK(l.size() == 56);
    CHECK(l.front() == 0.5);
    CHECK(l.back() == doctest::Approx(6.0));
    CHECK(to_string(Study::meixner_laguerre) == "meixner-laguerre");
}

TEST_CASE("Kravchuk to Hermite")
{
    const auto probes = default_probes(Study::kravchuk_hermite);
    const auto e = kravchuk_to_hermite_error(0, 4096, 0.5, probes);
    CHECK(e.sup_error <= 2e-3);
    CHECK(e.probes_used == 81);
    CHECK(e.skipped_probes == 0);
    for (int n = 0; n <= 3; ++n) {
        const double a = kravchuk_to_hermite_error(n, 256, 0.5, probes).sup_error;
        const double b = kravchuk_to_hermite_error(n, 1024, 0.5, probes).sup_error;
        CHECK(b < a);
    }
    // Peak value: (2Npq)^{1/4} K_0(N/2) tends to psi_0(0).
    const int N = 4096;
    const double peak = std::pow(2.0 * N * 0.25, 0.25) * kravchuk_function(KravchukParams(N, 0.5), 0, N / 2);
    CHECK(std::abs(peak - hermite_function(0, 0.0)) <= 1.0 / N);
    // Probes outside the lattice are skipped and counted.
    const std::vector<double> wide{-100.0, 0.0, 100.0};
    const auto w = kravchuk_to_hermite_error(0, 64, 0.5, wide);
    CHECK(w.skipped_probes == 2);
    CHECK(w.probes_used == 1);
}

TEST_CASE("rescaled Kravchuk rows have unit norm")
{
    const int N = 4096;
    const KravchukParams kp(N, 0.5);
    const double scale = std::sqrt(2.0 * N * 0.25);
    for (int n = 0; n <= 3; ++n) {
        const auto row = kravchuk_row(kp, n);
        double sum = 0.0;
        for (double v : row.values)
            sum += std::pow(std::pow(scale, 0.5) * v, 2) / scale;
        CHECK(std::abs(sum - 1.0) <= 1e-3);
    }
}

TEST_CASE("ladder limits")
{
    const auto probes = default_probes(Study::ladder);
    CHECK(ladder_limit_error(0, 4096, 0.5, probes, LadderDirection::raise).sup_error <= 5e-3);
    for (int N : {256, 1024, 4096})
        CHECK(ladder_limit_error(0, N, 0.5, probes, LadderDirection::lower).sup_error <= 1e-12);
    for (int n = 0; n <= 3; ++n) {
        const double a = ladder_limit_error(n, 256, 0.5, probes, LadderDirection::raise).sup_error;
        const double b = ladder_limit_error(n, 1024, 0.5, probes, LadderDirection::raise).sup_error;
        CHECK(b < a);
        if (n >= 1) {
            const double c = ladder_limit_error(n, 256, 0.5, probes, LadderDirection::lower).sup_error;
            const double d = ladder_limit_error(n, 1024, 0.5, probes, LadderDirection::lower).sup_error;
            CHECK(d < c);
        }
    }
}

TEST_CASE("Meixner to Laguerre")
{
    const auto probes = default_probes(Study::meixner_laguerre);
    CHECK(meixner_to_laguerre_error(0.0, 0, 1e-3, probes).sup_error <= 1e-2);
    for (double alpha : {0.0, 1.0})
        for (int n = 0; n <= 3; ++n) {
            const double a = meixner_to_laguerre_error(alpha, n, 4e-3, probes).sup_error;
            const double b = meixner_to_laguerre_error(alpha, n, 1e-3, probes).sup_error;
            CHECK(b < a);
        }
    const std::vector<double> at2{2.0};
    const auto one = meixner_to_laguerre_error(1.0, 0, 1e-3, at2);
    const double psi = laguerre_function(1.0, 0, 2.0);
    CHECK(psi > 0.0);
    CHECK(one.sup_error <= 0.02 * psi);
}

TEST_CASE("convergence sweeps")
{
    const auto k = convergence_sweep(spec(Study::kravchuk_hermite, 0, {256, 1024, 4096}));
    CHECK(k.complete());
    CHECK(k.strictly_decreasing());
    REQUIRE(k.errors.size() == 3);
    REQUIRE(k.observed_rates.size() == 2);
    for (double r : k.observed_rates)
        CHECK(r > 0.0);

    const auto m = convergence_sweep(spec(Study::meixner_laguerre, 0, {1e-1, 1e-2, 1e-3}));
    CHECK(m.complete());
    CHECK(m.strictly_decreasing());
    for (double r : m.observed_rates)
        CHECK(r > 0.0);

    for (int n = 0; n <= 3; ++n) {
        CHECK(convergence_sweep(spec(Study::kravchuk_hermite, n, {256, 1024, 4096})).strictly_decreasing());
        CHECK(convergence_sweep(spec(Study::ladder, n, {256, 1024, 4096})).strictly_decreasing());
        for (double alpha : {0.0, 1.0}) {
            auto s = spec(Study::meixner_laguerre, n, {1e-1, 1e-2, 1e-3});
            s.alpha = alpha;
            CHECK(convergence_sweep(s).strictly_decreasing());
        }
    }

    const auto a = convergence_sweep(spec(Study::anticommutator, 2, {100, 1000, 10000}));
    CHECK(a.strictly_decreasing());
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(a.errors[i] == doctest::Approx(4.0 / (0.5 * a.resolutions[i])).epsilon(1e-9));

    CHECK_THROWS_AS(convergence_sweep(spec(Study::kravchuk_hermite, 0, {256, 1024})), std::invalid_argument);
    CHECK_THROWS_AS(convergence_sweep(spec(Study::kravchuk_hermite, 0, {256, 256, 256})), std::invalid_argument);
    CHECK_THROWS_AS(convergence_sweep(spec(Study::kravchuk_hermite, 0, {1024, 256, 4096})), std::invalid_argument);
}

TEST_CASE("failed evaluations yield a partial report")
{
    // N = 2 cannot host the degree-5 function; that resolution fails, the rest are evaluated.
    const auto r = convergence_sweep(spec(Study::kravchuk_hermite, 5, {2, 256, 1024}));
    CHECK_FALSE(r.complete());
    CHECK(std::isnan(r.errors[0]));
    CHECK_FALSE(r.failures[0].empty());
    CHECK(std::isfinite(r.errors[1]));
    CHECK(r.failures[1].empty());
    CHECK_FALSE(r.strictly_decreasing());
}
