#include "dqm/wigner.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

using namespace dqm;

namespace {

constexpr double pi = std::numbers::pi;

// Explicit spin-1/2 and spin-1 matrices, rows m and columns m' descending.
double closed_form(int twice_j, int twice_m, int twice_mp, double b)
{
    const double c = std::cos(b / 2), s = std::sin(b / 2);
    if (twice_j == 1) {
        if (twice_m == twice_mp)
            return c;
        return twice_m > twice_mp ? -s : s;
    }
    const int m = twice_m / 2, mp = twice_mp / 2;
    const double cb = std::cos(b), sb = std::sin(b), r2 = std::sqrt(2.0);
    const double table[3][3] = {{(1 + cb) / 2, -sb / r2, (1 - cb) / 2},
                                {sb / r2, cb, -sb / r2},
                                {(1 - cb) / 2, sb / r2, (1 + cb) / 2}};
    return table[1 - m][1 - mp];
}

// Sum formula for general j.
double wigner_sum(int twice_j, int twice_m, int twice_mp, double b)
{
    // The textbook sum is written for d_{m' m}; swap to index rows by m.
    std::swap(twice_m, twice_mp);
    const int jm = (twice_j + twice_m) / 2, j_m = (twice_j - twice_m) / 2;
    const int jmp = (twice_j + twice_mp) / 2, j_mp = (twice_j - twice_mp) / 2;
    const double pref = 0.5 * (std::lgamma(jm + 1.0) + std::lgamma(j_m + 1.0) + std::lgamma(jmp + 1.0) +
                               std::lgamma(j_mp + 1.0));
    const int mmp = (twice_mp - twice_m) / 2;
    double sum = 0.0;
    for (int k = 0; k <= twice_j; ++k) {
        if (jm - k < 0 || j_mp - k < 0 || k + mmp < 0)
            continue;
        const double lg = pref - std::lgamma(jm - k + 1.0) - std::lgamma(k + 1.0) - std::lgamma(j_mp - k + 1.0) -
                          std::lgamma(k + mmp + 1.0);
        const double c = std::pow(std::cos(b / 2), twice_j - 2 * k - mmp);
        const double s = std::pow(std::sin(b / 2), 2 * k + mmp);
        sum += (((k + mmp) % 2 == 0) ? 1.0 : -1.0) * std::exp(lg) * c * s;
    }
    return sum;
}

}  // namespace

TEST_CASE("angular parameter validation")
{
    CHECK_THROWS_AS(AngularParams(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(AngularParams(2, 0.0), std::domain_error);
    CHECK_THROWS_AS(AngularParams(2, pi), std::domain_error);
    const AngularParams ap(3, 1.2);
    CHECK(ap.kravchuk().N() == 3);
    CHECK(ap.kravchuk().p() == doctest::Approx(std::pow(std::sin(0.6), 2)));
}

TEST_CASE("d-function values")
{
    CHECK(wigner_d(AngularParams(1, pi / 3), 1, 1) == doctest::Approx(0.86602540378443864676).epsilon(1e-12));
    CHECK(wigner_d(AngularParams(2, pi / 2), 2, 0) == doctest::Approx(-0.7071067811865475244).epsilon(1e-12));
    CHECK(wigner_d(AngularParams(3, 1.0), 1, -3) == doctest::Approx(0.34937428943921923551).epsilon(1e-12));
    CHECK(wigner_d(AngularParams(5, 2.9), -3, 1) == doctest::Approx(-0.32369072644763294984).epsilon(1e-12));
    CHECK(wigner_d(AngularParams(4, 0.3), 0, 0) == doctest::Approx(0.86900171118225872293).epsilon(1e-12));
    CHECK(wigner_d(AngularParams(10, 1.7), 4, -6) == doctest::Approx(0.05748059024471430948).epsilon(1e-11));
    const AngularParams tiny(4, 1e-6);
    for (int tm = -4; tm <= 4; tm += 2)
        for (int tmp = -4; tmp <= 4; tmp += 2)
            CHECK(std::abs(wigner_d(tiny, tm, tmp) - (tm == tmp ? 1.0 : 0.0)) <= 1e-5);
    CHECK_THROWS_AS(wigner_d(AngularParams(2, 1.0), 1, 0), std::domain_error);
    CHECK_THROWS_AS(wigner_d(AngularParams(2, 1.0), 4, 0), std::domain_error);
}

TEST_CASE("correspondence against closed forms")
{
    for (int tj = 1; tj <= 5; ++tj)
        for (double b : {0.3, 1.0, 2.0, 2.9}) {
            const AngularParams ap(tj, b);
            for (int tm = -tj; tm <= tj; tm += 2)
                for (int tmp = -tj; tmp <= tj; tmp += 2) {
                    const double d = wigner_d(ap, tm, tmp);
                    CHECK(std::abs(d - wigner_sum(tj, tm, tmp, b)) <= 1e-11);
                    if (tj <= 2)
                        CHECK(std::abs(d - closed_form(tj, tm, tmp, b)) <= 1e-12);
                }
        }
}

TEST_CASE("symmetry and unitarity")
{
    for (int tj = 1; tj <= 8; ++tj)
        for (double b : {0.3, 1.2, 2.8}) {
            const AngularParams ap(tj, b);
            for (int tm = -tj; tm <= tj; tm += 2)
                for (int tmp = -tj; tmp <= tj; tmp += 2)
                    CHECK(wigner_symmetry_residual(ap, tm, tmp) <= 1e-12);
        }
    CHECK(wigner_symmetry_residual(AngularParams(3, 0.7), 1, 1) == 0.0);
    for (int tj = 1; tj <= 10; ++tj) {
        const Eigen::MatrixXd d = wigner_matrix(AngularParams(tj, 1.3));
        CHECK(d.rows() == tj + 1);
        CHECK((d * d.transpose() - Eigen::MatrixXd::Identity(tj + 1, tj + 1)).cwiseAbs().maxCoeff() <= 1e-11);
    }
}

TEST_CASE("derivative identities")
{
    const AngularParams ap(2, 1.0);
    CHECK(wigner_derivative_residual(ap, 0, 0, 1e-4, DerivativeIdentity::eq11) <= 1e-7);
    const double r1 = wigner_derivative_residual(ap, 2, 0, 1e-3, DerivativeIdentity::eq11);
    const double r2 = wigner_derivative_residual(ap, 2, 0, 5e-4, DerivativeIdentity::eq11);
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.125));
    for (auto which : {DerivativeIdentity::eq11, DerivativeIdentity::eq12, DerivativeIdentity::eq12a})
        for (int tj : {1, 3, 4})
            for (int tm = -tj; tm <= tj; tm += 2)
                for (int tmp = -tj; tmp <= tj; tmp += 2)
                    CHECK(wigner_derivative_residual(AngularParams(tj, 1.1), tm, tmp, 1e-4, which) <= 1e-7);
    CHECK_THROWS_AS(wigner_derivative_residual(AngularParams(2, 0.1), 0, 0, 0.2, DerivativeIdentity::eq11),
                    std::domain_error);
}

TEST_CASE("three-point identities")
{
    for (auto which : {DifferenceIdentity::eq3a, DifferenceIdentity::eq4a, DifferenceIdentity::eq5a,
                       DifferenceIdentity::eq6a})
        for (int tj : {1, 2, 3, 6})
            for (double b : {0.4, 1.1, 2.6}) {
                const AngularParams ap(tj, b);
                for (int tm = -tj; tm <= tj; tm += 2)
                    for (int tmp = -tj; tmp <= tj; tmp += 2)
                        CHECK(wigner_difference_residual(ap, tm, tmp, which) <= 1e-11);
            }
    CHECK(wigner_difference_residual(AngularParams(3, 1.1), 3, -1, DifferenceIdentity::eq4a) <= 1e-11);
}

TEST_CASE("SU(2) ladder matrices")
{
    const auto [a_half, ad_half] = su2_ladder_matrices(1);
    CHECK(ad_half.at(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
    const auto [a, ad] = su2_ladder_matrices(4);
    CHECK(a.dim() == 5);
    CHECK(a.basis() == BasisLabel::degree_n);
    const auto prod = product_diagonal(ad, a);
    const double expected[] = {0.0, 1.0, 1.5, 1.5, 1.0};
    for (int n = 0; n < 5; ++n)
        CHECK(prod[static_cast<std::size_t>(n)] == doctest::Approx(expected[n]).epsilon(1e-14));
    const Eigen::MatrixXd dense = a.to_dense();
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c)
            if (std::abs(r - c) > 1)
                CHECK(dense(r, c) == 0.0);
}

TEST_CASE("SU(2) spectra")
{
    const auto c4 = su2_commutator_spectrum(4);
    const double ce[] = {1.0, 0.5, 0.0, -0.5, -1.0};
    for (int n = 0; n < 5; ++n)
        CHECK(std::abs(c4[static_cast<std::size_t>(n)] - ce[n]) <= 1e-13);
    const auto c1 = su2_commutator_spectrum(1);
    CHECK(std::abs(c1[0] - 1.0) <= 1e-13);
    CHECK(std::abs(c1[1] + 1.0) <= 1e-13);
    CHECK(std::abs(su2_anticommutator_spectrum(4)[1] - 2.5) <= 1e-13);
    for (int tj = 1; tj <= 200; ++tj) {
        const auto c = su2_commutator_spectrum(tj);
        const auto a = su2_anticommutator_spectrum(tj);
        const double j = 0.5 * tj;
        double trace = 0.0;
        for (int n = 0; n <= tj; ++n) {
            trace += c[static_cast<std::size_t>(n)];
            CHECK(std::abs(c[static_cast<std::size_t>(n)] - (1.0 - n / j)) <= 1e-13);
            CHECK(std::abs(a[static_cast<std::size_t>(n)] - (2.0 * n + 1.0 - n * n / j)) <= 1e-13 * (1.0 + 2.0 * n));
        }
        CHECK(std::abs(trace) <= 1e-12);
        CHECK(a[0] == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("SU(2) anticommutator at large j")
{
    const auto a = su2_anticommutator_spectrum(20000);
    for (int n = 0; n <= 5; ++n) {
        const double gap = (2.0 * n + 1.0) - a[static_cast<std::size_t>(n)];
        // The gap is exactly n^2/j; it stays below 1e-3 only for n <= 3 at j = 1e4.
        CHECK(gap == doctest::Approx(n * n / 1e4).epsilon(1e-9).scale(1e-12));
        if (n <= 3)
            CHECK(std::abs(gap) <= 1e-3);
    }
}
