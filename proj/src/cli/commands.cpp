#include "dqm/cli/commands.hpp"

#include "dqm/continuous_bases.hpp"
#include "dqm/discrete_bases.hpp"
#include "dqm/hydrogen.hpp"
#include "dqm/ladder.hpp"
#include "dqm/numkit.hpp"
#include "dqm/limits.hpp"
#include "dqm/oscillator.hpp"
#include "dqm/quadrature.hpp"
#include "dqm/wigner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

namespace dqm::cli {

namespace {

using nlohmann::json;
using Vec = std::vector<double>;

std::string fmt(double v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string tag(const std::string& base, const std::string& point)
{
    return base + "[" + point + "]";
}

double max_abs(const Eigen::MatrixXd& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Vec& a, const Vec& b, std::size_t limit)
{
    double r = 0.0;
    for (std::size_t i = 0; i < limit && i < a.size() && i < b.size(); ++i)
        r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

Vec row_vec(const Eigen::MatrixXd& rows, int n)
{
    Vec v(static_cast<std::size_t>(rows.cols()));
    for (Eigen::Index x = 0; x < rows.cols(); ++x)
        v[static_cast<std::size_t>(x)] = rows(n, x);
    return v;
}

Vec scaled(Vec v, double f)
{
    for (double& e : v) e *= f;
    return v;
}

double dot(const Vec& a, const Vec& b, const Vec* w = nullptr)
{
    numkit::Accumulator acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i] * (w ? (*w)[i] : 1.0);
    return acc.value();
}

Vec random_vec(std::mt19937_64& rng, std::size_t dim)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec v(dim);
    for (double& e : v) e = u(rng);
    return v;
}

// ---- kravchuk suite ---------------------------------------------------------

void verify_kravchuk(ReportEnvelope& r, const Tolerances& tol)
{
    std::mt19937_64 rng(20240601);
    for (int N : {8, 16, 32, 64}) {
        for (double p : {0.2, 0.5, 0.8}) {
            const KravchukParams kp(N, p);
            const std::string pt = "N=" + std::to_string(N) + ",p=" + fmt(p);
            const Eigen::MatrixXd rows = kravchuk_rows(kp, N);
            r.add_check(tag("kravchuk.orthonormality", pt),
                        max_abs(kravchuk_gram(kp, N) - Eigen::MatrixXd::Identity(N + 1, N + 1)),
                        tol(1e-11));

            double kernel = 0.0, raise = 0.0, lower = 0.0, duality = 0.0;
            for (int n = 0; n <= N; ++n) {
                const Vec k = row_vec(rows, n);
                const auto sz = k.size();
                kernel = std::max(kernel, max_abs_diff(kravchuk_hamiltonian(kp, n).apply(k), Vec(sz, 0.0), sz));
                for (auto form : {LadderForm::original, LadderForm::symmetric}) {
                    if (n < N)
                        raise = std::max(raise, max_abs_diff(kravchuk_raise(kp, n, form).apply(k),
                                                             scaled(row_vec(rows, n + 1), kravchuk_raise_coefficient(kp, n)), sz));
                    const Vec below = n > 0 ? row_vec(rows, n - 1) : Vec(sz, 0.0);
                    lower = std::max(lower, max_abs_diff(kravchuk_lower(kp, n, form).apply(k),
                                                         scaled(below, kravchuk_lower_coefficient(kp, n)), sz));
                }
                for (int x = 0; x <= N; ++x) {
                    const double sign = ((n + x) % 2 == 0) ? 1.0 : -1.0;
                    duality = std::max(duality, std::abs(rows(n, x) - sign * rows(x, n)));
                }
            }
            r.add_check(tag("kravchuk.kernel", pt), kernel, tol(1e-11));
            r.add_check(tag("kravchuk.raise", pt), raise, tol(1e-10));
            r.add_check(tag("kravchuk.lower", pt), lower, tol(1e-10));
            r.add_check(tag("kravchuk.duality", pt), duality, tol(1e-11));

            // Degree-basis commutator L+L- - L-L+ = pq(2n - N).
            double comm = 0.0;
            for (int n = 0; n <= N; ++n) {
                const double a = n > 0 ? kravchuk_raise_coefficient(kp, n - 1) * kravchuk_lower_coefficient(kp, n) : 0.0;
                const double b = n < N ? kravchuk_lower_coefficient(kp, n + 1) * kravchuk_raise_coefficient(kp, n) : 0.0;
                comm = std::max(comm, std::abs((a - b) - p * kp.q() * (2.0 * n - N)));
            }
            r.add_check(tag("kravchuk.commutator", pt), comm, tol(1e-12));

            double adjoint = 0.0;
            std::uniform_int_distribution<int> pick(0, N - 1);
            for (int t = 0; t < 100; ++t) {
                const int n = pick(rng);
                const Vec u = random_vec(rng, static_cast<std::size_t>(N) + 1);
                const Vec v = random_vec(rng, static_cast<std::size_t>(N) + 1);
                adjoint = std::max(adjoint, std::abs(dot(kravchuk_raise(kp, n, LadderForm::original).apply(u), v) -
                                                     dot(u, kravchuk_lower(kp, n, LadderForm::original).apply(v))));
            }
            r.add_check(tag("kravchuk.adjointness", pt), adjoint, tol(1e-10));

            if (N <= 16) {
                double fact = 0.0;
                for (int n = 1; n <= N - 1; ++n)
                    for (auto side : {FactorizationSide::plus_minus, FactorizationSide::minus_plus})
                        fact = std::max(fact, kravchuk_factorization_residual(kp, n, side));
                r.add_check(tag("kravchuk.factorization", pt), fact, tol(1e-12));
            }
            if (N == 8) {
                double rod = 0.0;
                for (int n = 0; n <= N; ++n)
                    rod = std::max(rod, max_abs_diff(kravchuk_rodrigues_product(kp, n).values, row_vec(rows, n),
                                                     static_cast<std::size_t>(N) + 1));
                r.add_check(tag("kravchuk.rodrigues", pt), rod, tol(1e-9));
            }
        }
    }
}

// ---- meixner suite ----------------------------------------------------------

void verify_meixner(ReportEnvelope& r, const Tolerances& tol)
{
    std::mt19937_64 rng(20240602);
    constexpr int n_max = 8;
    for (double g : {1.0, 2.0, 4.0}) {
        for (double mu : {0.3, 0.5, 0.9}) {
            const MeixnerParams mp(g, mu);
            const std::string pt = "gamma=" + fmt(g) + ",mu=" + fmt(mu);
            r.add_check(tag("meixner.orthonormality", pt),
                        max_abs(meixner_gram(mp, n_max, 1e-15) - Eigen::MatrixXd::Identity(n_max + 1, n_max + 1)),
                        tol(1e-10));

            const int dim = meixner_operator_dim(mp, n_max + 1);
            const auto window = static_cast<std::size_t>(dim - kMeixnerGuardBand);
            const Eigen::MatrixXd rows = meixner_rows(mp, n_max + 1, dim - 1);
            double kernel = 0.0, raise = 0.0, lower = 0.0;
            for (int n = 0; n <= n_max; ++n) {
                const Vec m = row_vec(rows, n);
                kernel = std::max(kernel, max_abs_diff(meixner_hamiltonian(mp, n, dim).apply(m), Vec(m.size(), 0.0), window));
                for (auto form : {LadderForm::original, LadderForm::symmetric}) {
                    raise = std::max(raise, max_abs_diff(meixner_raise(mp, n, dim, form).apply(m),
                                                         scaled(row_vec(rows, n + 1), meixner_raise_coefficient(mp, n)), window));
                    const Vec below = n > 0 ? row_vec(rows, n - 1) : Vec(m.size(), 0.0);
                    lower = std::max(lower, max_abs_diff(meixner_lower(mp, n, dim, form).apply(m),
                                                         scaled(below, meixner_lower_coefficient(mp, n)), window));
                }
            }
            r.add_check(tag("meixner.kernel", pt), kernel, tol(1e-10));
            r.add_check(tag("meixner.raise", pt), raise, tol(1e-10));
            r.add_check(tag("meixner.lower", pt), lower, tol(1e-10));

            double comm = 0.0, comm_res = 0.0;
            for (int n = 0; n <= 4; ++n) {
                const auto c = meixner_commutator_eigenvalue(mp, n);
                comm = std::max(comm, std::abs(c.value + mu * (2.0 * n + g)));
                comm_res = std::max(comm_res, c.residual);
            }
            r.add_check(tag("meixner.commutator_value", pt), comm, tol(1e-10));
            r.add_check(tag("meixner.commutator_residual", pt), comm_res, tol(1e-10));

            double anti = 0.0, expansion = 0.0, half = 0.0;
            for (int n = 1; n <= 3; ++n) {
                const auto a = meixner_anticommutator(mp, n);
                anti = std::max(anti, a.composition_residual);
                expansion = std::max(expansion, a.quarter_shift_expansion_residual);
                half = std::max(half, a.half_shift_expansion_residual);
            }
            r.add_check(tag("meixner.anticommutator", pt), anti, tol(1e-10));
            r.add_check(tag("meixner.anticommutator_expansion", pt), expansion, tol(1e-9));
            // The expansion with the 1/2 shift coefficient is reported only.
            r.add_check(tag("meixner.anticommutator_half_shift_expansion", pt), half,
                        std::numeric_limits<double>::quiet_NaN(), true);

            Vec w(static_cast<std::size_t>(dim));
            for (int x = 0; x < dim; ++x)
                w[static_cast<std::size_t>(x)] = 1.0 / (mu * (x + g));
            double adjoint = 0.0;
            std::uniform_int_distribution<int> pick(0, n_max);
            for (int t = 0; t < 100; ++t) {
                const int n = pick(rng);
                const Vec u = random_vec(rng, static_cast<std::size_t>(dim));
                const Vec v = random_vec(rng, static_cast<std::size_t>(dim));
                adjoint = std::max(adjoint, std::abs(dot(meixner_raise(mp, n, dim, LadderForm::original).apply(u), v, &w) -
                                                     dot(u, meixner_lower(mp, n, dim, LadderForm::original).apply(v), &w)));
            }
            r.add_check(tag("meixner.adjointness", pt), adjoint, tol(1e-10));

            double mean = 0.0;
            for (int n = 0; n <= 3; ++n) {
                const double closed = meixner_mean_x(mp, n);
                mean = std::max(mean, std::abs(meixner_mean_x_sum(mp, n) - closed) / closed);
            }
            r.add_check(tag("meixner.mean_x", pt), mean, tol(1e-10));
        }
    }
}

// ---- continuous suite -------------------------------------------------------

void verify_laguerre(ReportEnvelope& r, const Tolerances& tol)
{
    const Vec sl_points{0.5, 1.0, 2.0, 8.0};
    for (double alpha : {0.0, 1.0, 2.0, 3.0}) {
        const std::string pt = "alpha=" + fmt(alpha);
        double rec = 0.0, sl = 0.0;
        for (int n = 0; n <= 20; ++n) {
            for (int i = 1; i <= 80; ++i) {
                const double s = 0.5 * i;
                if (n >= 1)
                    rec = std::max(rec, std::abs(laguerre_recurrence_residual(alpha, n, s)));
                sl = std::max(sl, std::abs(laguerre_sl_residual(alpha, n, s)));
            }
        }
        r.add_check(tag("laguerre.recurrence", pt), rec, tol(1e-10));
        r.add_check(tag("laguerre.differential_equation", pt), sl, tol(1e-8));

        double raise = 0.0, lower = 0.0, fact = 0.0;
        for (int n = 0; n <= 5; ++n) {
            for (double s : sl_points) {
                raise = std::max(raise, std::abs(laguerre_raise(alpha, n, s) +
                                                 std::sqrt((n + 1.0) * (n + alpha + 1.0)) * laguerre_function(alpha, n + 1, s)));
                const double below = n > 0 ? laguerre_function(alpha, n - 1, s) : 0.0;
                lower = std::max(lower, std::abs(laguerre_lower(alpha, n, s) + std::sqrt(n * (n + alpha)) * below));
                if (n <= 3)
                    for (auto side : {FactorizationSide::plus_minus, FactorizationSide::minus_plus})
                        fact = std::max(fact, std::abs(laguerre_factorization_residual(alpha, n, s, side)));
            }
        }
        r.add_check(tag("laguerre.raise", pt), raise, tol(1e-9));
        r.add_check(tag("laguerre.lower", pt), lower, tol(1e-9));
        r.add_check(tag("laguerre.factorization", pt), fact, tol(1e-8));

        double ortho = 0.0;
        for (int a = 0; a <= 3; ++a) {
            for (int b = a; b <= 3; ++b) {
                const auto q = quad::integrate_half_line(
                    [&](double s) { return laguerre_function(alpha, a, s) * laguerre_function(alpha, b, s) / s; },
                    alpha + a + b);
                ortho = std::max(ortho, std::abs(q.value - (a == b ? 1.0 : 0.0)));
            }
        }
        r.add_check(tag("laguerre.orthonormality", pt), ortho, tol(1e-10));
    }

    double herm = 0.0;
    for (int n = 1; n <= 30; ++n)
        for (int i = -32; i <= 32; ++i)
            herm = std::max(herm, std::abs(hermite_recurrence_residual(n, 0.25 * i)));
    r.add_check("hermite.recurrence", herm, tol(1e-11));
}

// ---- angular suites ---------------------------------------------------------

double factorial(int k)
{
    return std::tgamma(k + 1.0);
}

// Explicit finite sum for d^j_{m m'} (doubled indices).
double wigner_closed_form(int tj, int tm, int tmp, double beta)
{
    const int jpm = (tj + tm) / 2, jmm = (tj - tm) / 2, jpmp = (tj + tmp) / 2, jmmp = (tj - tmp) / 2;
    const int dm = (tm - tmp) / 2;  // m - m'
    const double c = std::cos(0.5 * beta), s = std::sin(0.5 * beta);
    double sum = 0.0;
    for (int k = 0; k <= tj; ++k) {
        const int a = jpmp - k, b = k, d = dm + k, e = jmm - k;
        if (a < 0 || d < 0 || e < 0)
            continue;
        const double sign = ((dm + k) % 2 == 0) ? 1.0 : -1.0;
        sum += sign / (factorial(a) * factorial(b) * factorial(d) * factorial(e)) *
               std::pow(c, tj - dm - 2 * k) * std::pow(s, dm + 2 * k);
    }
    return std::sqrt(factorial(jpm) * factorial(jmm) * factorial(jpmp) * factorial(jmmp)) * sum;
}

void verify_wigner(ReportEnvelope& r, const Tolerances& tol)
{
    for (int tj = 1; tj <= 5; ++tj) {
        for (double beta : {0.3, 1.0, 2.0, 2.9}) {
            const AngularParams ap(tj, beta);
            const std::string pt = "twice_j=" + std::to_string(tj) + ",beta=" + fmt(beta);
            double closed = 0.0, sym = 0.0, diff = 0.0, deriv = 0.0, ratio_dev = 0.0;
            for (int tm = -tj; tm <= tj; tm += 2) {
                for (int tmp = -tj; tmp <= tj; tmp += 2) {
                    closed = std::max(closed, std::abs(wigner_d(ap, tm, tmp) - wigner_closed_form(tj, tm, tmp, beta)));
                    sym = std::max(sym, wigner_symmetry_residual(ap, tm, tmp));
                    for (auto w : {DifferenceIdentity::eq3a, DifferenceIdentity::eq4a, DifferenceIdentity::eq5a,
                                   DifferenceIdentity::eq6a})
                        diff = std::max(diff, wigner_difference_residual(ap, tm, tmp, w));
                    for (auto w : {DerivativeIdentity::eq11, DerivativeIdentity::eq12, DerivativeIdentity::eq12a}) {
                        const double r1 = wigner_derivative_residual(ap, tm, tmp, 1e-3, w);
                        const double r2 = wigner_derivative_residual(ap, tm, tmp, 5e-4, w);
                        deriv = std::max(deriv, wigner_derivative_residual(ap, tm, tmp, 1e-4, w));
                        if (r1 > 1e-9)
                            ratio_dev = std::max(ratio_dev, std::abs(r1 / r2 - 4.0));
                    }
                }
            }
            const Eigen::MatrixXd d = wigner_matrix(ap);
            r.add_check(tag("wigner.correspondence", pt), closed, tol(1e-11));
            r.add_check(tag("wigner.symmetry", pt), sym, tol(1e-12));
            r.add_check(tag("wigner.unitarity", pt), max_abs(d * d.transpose() - Eigen::MatrixXd::Identity(tj + 1, tj + 1)),
                        tol(1e-11));
            r.add_check(tag("wigner.difference_identities", pt), diff, tol(1e-11));
            r.add_check(tag("wigner.derivative_identities", pt), deriv, tol(1e-7));
            r.add_check(tag("wigner.derivative_step_ratio", pt), ratio_dev, 0.5);
        }
    }
}

void su2_point(ReportEnvelope& r, const Tolerances& tol, int tj)
{
    const auto comm = su2_commutator_spectrum(tj);
    const auto anti = su2_anticommutator_spectrum(tj);
    const double j = 0.5 * tj;
    double ec = 0.0, ea = 0.0;
    for (int n = 0; n <= tj; ++n) {
        ec = std::max(ec, std::abs(comm[static_cast<std::size_t>(n)] - (1.0 - n / j)));
        ea = std::max(ea, std::abs(anti[static_cast<std::size_t>(n)] - (2.0 * n + 1.0 - n * n / j)));
    }
    const std::string pt = "twice_j=" + std::to_string(tj);
    r.add_check(tag("su2.commutator", pt), ec, tol(1e-13));
    r.add_check(tag("su2.anticommutator", pt), ea, tol(1e-13));
}

void verify_su2(ReportEnvelope& r, const Tolerances& tol, std::optional<int> twice_j)
{
    if (twice_j) {
        su2_point(r, tol, *twice_j);
        return;
    }
    double ec = 0.0, ea = 0.0;
    for (int tj = 1; tj <= 200; ++tj) {
        ReportEnvelope tmp;
        su2_point(tmp, tol, tj);
        ec = std::max(ec, tmp.checks[0].value);
        ea = std::max(ea, tmp.checks[1].value);
    }
    r.add_check("su2.commutator[twice_j=1..200]", ec, tol(1e-13));
    r.add_check("su2.anticommutator[twice_j=1..200]", ea, tol(1e-13));
    // At j = 10^4 the gap to 2n+1 is exactly n^2/j (2.5e-3 at n = 5): the closed form is
    // asserted and the raw gap reported.
    const auto big = su2_anticommutator_spectrum(20000);
    double gap = 0.0, form = 0.0;
    for (int n = 0; n <= 5; ++n) {
        const double g = (2.0 * n + 1.0) - big[static_cast<std::size_t>(n)];
        gap = std::max(gap, std::abs(g));
        form = std::max(form, std::abs(g - n * n / 1e4));
    }
    r.add_check("su2.anticommutator_limit_closed_form[j=10000,n<=5]", form, tol(1e-12));
    r.add_check("su2.anticommutator_limit_gap[j=10000,n<=5]", gap, std::numeric_limits<double>::quiet_NaN(), true);
}

// ---- argument helpers -------------------------------------------------------

std::pair<int, int> parse_int_range(const std::string& text, const char* what)
{
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size())
                throw UsageError("");
            return {v, v};
        }
        const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        const int a = std::stoi(lo, &used);
        if (used != lo.size())
            throw UsageError("");
        const int b = std::stoi(hi, &used);
        if (used != hi.size())
            throw UsageError("");
        if (b < a)
            throw UsageError(std::string(what) + " range is empty: " + text);
        return {a, b};
    } catch (const UsageError& e) {
        if (std::string(e.what()).empty())
            throw UsageError(std::string("malformed ") + what + " range: " + text);
        throw;
    } catch (const std::logic_error&) {
        throw UsageError(std::string("malformed ") + what + " range: " + text);
    }
}

std::pair<double, double> parse_real_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("malformed s range: " + text);
    try {
        const double a = std::stod(text.substr(0, dots));
        const double b = std::stod(text.substr(dots + 2));
        if (!(b >= a))
            throw UsageError("s range is empty: " + text);
        return {a, b};
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const UsageError*>(&e))
            throw;
        throw UsageError("malformed s range: " + text);
    }
}

// ---- tabulate ---------------------------------------------------------------

struct TabulateArgs {
    std::string family;
    int N = 8;
    double p = 0.5;
    double gamma = 1.0;
    double mu = 0.5;
    double alpha = 0.0;
    std::string n_range = "0..3";
    std::string x_range;
    int twice_j = 1;
    double beta = 1.0;
    std::string s_range = "-4..4";
    int points = 41;
};

ReportEnvelope cmd_tabulate(const TabulateArgs& a, const Tolerances& tol)
{
    ReportEnvelope r;
    r.command = "tabulate";
    r.parameters["family"] = a.family;
    const auto f = a.family;
    if (f == "wigner") {
        const AngularParams ap(a.twice_j, a.beta);
        r.parameters["twice_j"] = a.twice_j;
        r.parameters["beta"] = a.beta;
        r.columns = {"twice_m", "twice_mp", "value"};
        const Eigen::MatrixXd d = wigner_matrix(ap);
        for (int n = 0; n <= a.twice_j; ++n)
            for (int x = 0; x <= a.twice_j; ++x)
                r.rows.push_back({{"twice_m", a.twice_j - 2 * n}, {"twice_mp", a.twice_j - 2 * x}, {"value", d(n, x)}});
        r.add_check("unitarity", max_abs(d * d.transpose() - Eigen::MatrixXd::Identity(a.twice_j + 1, a.twice_j + 1)),
                    tol(1e-11));
        r.finalize();
        return r;
    }

    const auto [n_lo, n_hi] = parse_int_range(a.n_range, "n");
    if (n_lo < 0)
        throw UsageError("n range must be non-negative");
    r.parameters["n"] = a.n_range;

    if (f == "kravchuk" || f == "meixner") {
        r.columns = {"n", "x", "value"};
        Eigen::MatrixXd rows;
        Vec weight;
        int x_lo = 0, x_hi = 0;
        bool full_grid = a.x_range.empty();
        if (f == "kravchuk") {
            const KravchukParams kp(a.N, a.p);
            if (n_hi > a.N)
                throw UsageError("n range exceeds N");
            r.parameters["N"] = a.N;
            r.parameters["p"] = a.p;
            x_hi = a.N;
            if (!full_grid) {
                std::tie(x_lo, x_hi) = parse_int_range(a.x_range, "x");
                if (x_lo < 0 || x_hi > a.N)
                    throw UsageError("x range outside 0..N");
                full_grid = x_lo == 0 && x_hi == a.N;
            }
            rows = kravchuk_rows(kp, n_hi);
            weight.assign(static_cast<std::size_t>(a.N) + 1, 1.0);
        } else {
            const MeixnerParams mp(a.gamma, a.mu);
            r.parameters["gamma"] = a.gamma;
            r.parameters["mu"] = a.mu;
            x_hi = meixner_cutoff(mp, n_hi, 1e-15);
            if (!full_grid) {
                std::tie(x_lo, x_hi) = parse_int_range(a.x_range, "x");
                if (x_lo < 0)
                    throw UsageError("x range must be non-negative");
            }
            rows = meixner_rows(mp, n_hi, x_hi);
            for (int x = 0; x <= x_hi; ++x)
                weight.push_back(1.0 / (a.mu * (x + a.gamma)));
        }
        r.parameters["x"] = std::to_string(x_lo) + ".." + std::to_string(x_hi);
        for (int n = n_lo; n <= n_hi; ++n)
            for (int x = x_lo; x <= x_hi; ++x)
                r.rows.push_back({{"n", n}, {"x", x}, {"value", rows(n, x)}});
        if (full_grid) {
            double err = 0.0;
            for (int n = n_lo; n <= n_hi; ++n)
                for (int k = n_lo; k <= n_hi; ++k)
                    err = std::max(err, std::abs(dot(row_vec(rows, n), row_vec(rows, k), &weight) - (n == k ? 1.0 : 0.0)));
            r.add_check("orthonormality", err, tol(f == "kravchuk" ? 1e-11 : 1e-10));
        }
        r.finalize();
        return r;
    }

    if (f == "hermite" || f == "laguerre") {
        auto [s_lo, s_hi] = parse_real_range(a.s_range);
        if (a.points < 1)
            throw UsageError("points must be >= 1");
        if (f == "laguerre") {
            if (a.s_range == TabulateArgs{}.s_range)
                std::tie(s_lo, s_hi) = std::pair{0.5, 20.0};
            if (!(s_lo > 0.0))
                throw UsageError("laguerre tabulation needs s > 0");
            r.parameters["alpha"] = a.alpha;
        }
        r.parameters["s"] = format_double(s_lo) + ".." + format_double(s_hi);
        r.parameters["points"] = a.points;
        r.columns = {"n", "s", "value"};
        for (int n = n_lo; n <= n_hi; ++n) {
            for (int i = 0; i < a.points; ++i) {
                const double s = a.points == 1 ? s_lo : s_lo + (s_hi - s_lo) * i / (a.points - 1);
                const double v = f == "hermite" ? hermite_function(n, s) : laguerre_function(a.alpha, n, s);
                r.rows.push_back({{"n", n}, {"s", s}, {"value", v}});
            }
        }
        r.finalize();
        return r;
    }
    throw UsageError("unknown family: " + f);
}

// ---- converge ---------------------------------------------------------------

struct ConvergeArgs {
    std::string study;
    int n = 0;
    double p = 0.5;
    double alpha = 0.0;
    std::string which = "raise";
    std::vector<double> N;
    std::vector<double> h;
    std::vector<double> twice_j;
};

ReportEnvelope cmd_converge(const ConvergeArgs& a)
{
    SweepSpec spec;
    spec.n = a.n;
    spec.p = a.p;
    spec.alpha = a.alpha;
    ReportEnvelope r;
    r.command = "converge";
    r.parameters["study"] = a.study;
    r.parameters["n"] = a.n;
    const std::vector<double>* res = nullptr;
    if (a.study == "kravchuk-hermite" || a.study == "ladder") {
        spec.study = a.study == "ladder" ? Study::ladder : Study::kravchuk_hermite;
        res = &a.N;
        r.parameters["p"] = a.p;
        if (spec.study == Study::ladder) {
            if (a.which != "raise" && a.which != "lower")
                throw UsageError("--which must be raise or lower");
            spec.direction = a.which == "raise" ? LadderDirection::raise : LadderDirection::lower;
            r.parameters["which"] = a.which;
        }
    } else if (a.study == "meixner-laguerre") {
        spec.study = Study::meixner_laguerre;
        res = &a.h;
        r.parameters["alpha"] = a.alpha;
    } else if (a.study == "anticommutator") {
        spec.study = Study::anticommutator;
        res = &a.twice_j;
    } else {
        throw UsageError("unknown study: " + a.study);
    }
    if (res->size() < 3)
        throw UsageError("converge needs at least 3 resolutions");
    spec.resolutions = *res;
    r.parameters["resolutions"] = spec.resolutions;

    ConvergenceReport rep;
    try {
        rep = convergence_sweep(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    r.columns = {"resolution", "error", "observed_rate", "failure"};
    for (std::size_t i = 0; i < rep.errors.size(); ++i) {
        json row{{"resolution", rep.resolutions[i]}, {"error", rep.errors[i]}, {"failure", rep.failures[i]}};
        row["observed_rate"] = i == 0 ? json(nullptr) : json(rep.observed_rates[i - 1]);
        r.rows.push_back(row);
    }
    // Sweeps that are exact to roundoff (lower ladder at n = 0, anticommutator at n = 0)
    // cannot decrease; they pass when every error is at roundoff level.
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i + 1 < rep.errors.size(); ++i)
        worst_ratio = std::max(worst_ratio, rep.errors[i + 1] / rep.errors[i]);
    const bool at_roundoff = rep.complete() && std::all_of(rep.errors.begin(), rep.errors.end(),
                                                           [](double e) { return e <= 1e-12; });
    const bool pass = rep.strictly_decreasing() || at_roundoff;
    r.add_check("errors_decreasing", at_roundoff && !rep.strictly_decreasing() ? 0.0 : worst_ratio, 1.0, pass);
    r.add_check("evaluations_complete", rep.complete() ? 0.0 : 1.0, 0.0);
    r.finalize();
    return r;
}

// ---- oscillator and hydrogen ------------------------------------------------

ReportEnvelope cmd_oscillator(const OscillatorConfig& cfg, std::optional<int> level, const Tolerances& tol)
{
    cfg.validate();
    ReportEnvelope r;
    r.command = "oscillator";
    r.parameters = {{"twice_j", cfg.twice_j}, {"beta", cfg.beta}, {"mass", cfg.mass},
                    {"omega", cfg.omega}, {"hbar", cfg.hbar}, {"grid_spacing", grid_spacing(cfg)}};
    int lo = 0, hi = cfg.twice_j;
    if (level) {
        if (*level < 0 || *level > cfg.twice_j)
            throw std::domain_error("oscillator: level n outside 0..2j");
        lo = hi = *level;
        r.parameters["n"] = *level;
    }
    r.columns = {"n", "twice_m", "energy", "dx", "dp", "uncertainty"};
    const auto levels = spectrum(cfg);
    double agree = 0.0, floor_gap = 0.0;
    for (int n = lo; n <= hi; ++n) {
        const auto d = dispersion(cfg, n);
        const auto m = dispersion_from_matrices(cfg, n);
        const double u = uncertainty_product(cfg, n);
        agree = std::max({agree, std::abs(d.dx * d.dx - m.dx * m.dx), std::abs(d.dp * d.dp - m.dp * m.dp),
                          std::abs(u - m.dx * m.dp)});
        floor_gap = std::max(floor_gap, 0.5 * cfg.hbar - u);
        r.rows.push_back({{"n", n}, {"twice_m", cfg.twice_j - 2 * n}, {"energy", levels[static_cast<std::size_t>(n)]},
                          {"dx", d.dx}, {"dp", d.dp}, {"uncertainty", u}});
    }
    double spacing = 0.0;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        spacing = std::max(spacing, std::abs(levels[i + 1] - levels[i] - cfg.hbar * cfg.omega));
    r.add_check("dispersion_two_ways", agree, tol(1e-12));
    r.add_check("uncertainty_floor", floor_gap, tol(1e-12) * cfg.hbar);
    r.add_check("level_spacing", spacing, tol(1e-12));
    r.finalize();
    return r;
}

struct HydrogenArgs {
    int Z = 1;
    int nu = 1;
    int l = 0;
    double h = 1e-3;
    int samples = 20;
};

ReportEnvelope cmd_hydrogen(const HydrogenArgs& a, const Tolerances& tol)
{
    const HydrogenConfig cfg{a.Z};
    const RadialQuantum q(a.nu, a.l);
    if (!(a.h > 0.0 && a.h < 1.0))
        throw std::domain_error("hydrogen: h must lie in (0, 1)");
    ReportEnvelope r;
    r.command = "hydrogen";
    r.parameters = {{"Z", a.Z}, {"nu", a.nu}, {"l", a.l}, {"h", a.h}};
    const auto map = sl_mapping(q);
    const double mean = discrete_radial_mean(a.l, q.n(), a.h);
    const double limit = 2.0 * q.n() + 2.0 * a.l + 2.0;
    r.columns = {"quantity", "rho", "value"};
    r.rows.push_back({{"quantity", "energy"}, {"value", energy(cfg, a.nu)}});
    r.rows.push_back({{"quantity", "alpha"}, {"value", map.alpha}});
    r.rows.push_back({{"quantity", "lambda"}, {"value", map.lambda}});
    r.rows.push_back({{"quantity", "mean_s_discrete"}, {"value", mean}});
    r.rows.push_back({{"quantity", "mean_s_continuum"}, {"value", limit}});
    double residual = 0.0;
    const double rho_max = 4.0 * (a.nu + a.l + 2.0);
    for (int i = 1; i <= a.samples; ++i) {
        const double rho = rho_max * i / a.samples;
        r.rows.push_back({{"quantity", "psi"}, {"rho", rho}, {"value", radial_function(q, rho)}});
        residual = std::max(residual, std::abs(radial_equation_residual(q, rho)));
    }
    const auto norm = quad::integrate_half_line(
        [&](double rho) {
            const double v = radial_function(q, rho);
            return v * v / rho;
        },
        2.0 * a.l + 1.0 + 2.0 * q.n());
    r.add_check("radial_equation", residual, tol(1e-8));
    r.add_check("normalization", std::abs(norm.value - 1.0), tol(1e-8));
    r.finalize();
    return r;
}

void emit(const ReportEnvelope& r, const std::string& format, const std::string& out_path, std::ostream& out)
{
    const std::string text = format == "csv" ? to_csv(r) : to_json(r);
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open output file: " + out_path);
    f << text;
}

}  // namespace

ReportEnvelope cmd_verify(const std::string& suite, const Tolerances& tol, std::optional<int> twice_j)
{
    static const std::vector<std::string> known{"kravchuk", "meixner", "laguerre", "wigner", "su2", "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw UsageError("unknown suite: " + suite);
    if (twice_j && *twice_j < 1)
        throw UsageError("--twice-j must be >= 1");
    ReportEnvelope r;
    r.command = "verify";
    r.parameters["suite"] = suite;
    if (twice_j)
        r.parameters["twice_j"] = *twice_j;
    const bool all = suite == "all";
    if (all || suite == "kravchuk") verify_kravchuk(r, tol);
    if (all || suite == "meixner") verify_meixner(r, tol);
    if (all || suite == "laguerre") verify_laguerre(r, tol);
    if (all || suite == "wigner") verify_wigner(r, tol);
    if (all || suite == "su2") verify_su2(r, tol, twice_j);
    r.finalize();
    return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Discrete quantum models: tabulation, identity checks and continuum limits", "dqm"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    std::string format = "json", out_path, profile = "default";
    std::optional<double> tolerance;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "Write output to this path instead of stdout");
    app.add_option("--tolerance-profile", profile, "Tolerance profile")->check(CLI::IsMember({"default", "strict"}));
    app.add_flag_callback("--strict", [&] { profile = "strict"; }, "Shorthand for --tolerance-profile strict");
    app.add_option("--tolerance", tolerance, "Override every check tolerance");

    TabulateArgs tab;
    auto* t = app.add_subcommand("tabulate", "Tabulate basis functions or d-matrices")->fallthrough();
    t->add_option("family", tab.family, "kravchuk, meixner, hermite, laguerre or wigner")->required();
    t->add_option("--N", tab.N);
    t->add_option("--p", tab.p);
    t->add_option("--gamma", tab.gamma);
    t->add_option("--mu", tab.mu);
    t->add_option("--alpha", tab.alpha);
    t->add_option("--n", tab.n_range, "Degree range a..b");
    t->add_option("--x", tab.x_range, "Grid range a..b");
    t->add_option("--twice-j", tab.twice_j);
    t->add_option("--beta", tab.beta);
    t->add_option("--s", tab.s_range, "Abscissa range lo..hi");
    t->add_option("--points", tab.points);

    std::string suite;
    std::optional<int> su2_j;
    auto* v = app.add_subcommand("verify", "Run identity check suites")->fallthrough();
    v->add_option("suite", suite, "kravchuk, meixner, laguerre, wigner, su2 or all")->required();
    v->add_option("--twice-j", su2_j, "Restrict the su2 suite to one 2j");

    ConvergeArgs conv;
    auto* c = app.add_subcommand("converge", "Continuum-limit convergence study")->fallthrough();
    c->add_option("study", conv.study, "kravchuk-hermite, ladder, meixner-laguerre or anticommutator")->required();
    c->add_option("--n", conv.n);
    c->add_option("--p", conv.p);
    c->add_option("--alpha", conv.alpha);
    c->add_option("--which", conv.which, "raise or lower (ladder study)");
    c->add_option("--N", conv.N, "Lattice sizes")->delimiter(',');
    c->add_option("--h", conv.h, "Lattice steps")->delimiter(',');
    c->add_option("--twice-j", conv.twice_j, "Values of 2j")->delimiter(',');

    OscillatorConfig osc{4, 1.0, 1.0, 1.0, 1.0};
    std::optional<int> osc_n;
    auto* o = app.add_subcommand("oscillator", "Lattice oscillator observables")->fallthrough();
    o->add_option("--twice-j", osc.twice_j);
    o->add_option("--n", osc_n);
    o->add_option("--mass", osc.mass);
    o->add_option("--omega", osc.omega);
    o->add_option("--hbar", osc.hbar);
    o->add_option("--beta", osc.beta);

    HydrogenArgs hyd;
    auto* h = app.add_subcommand("hydrogen", "Hydrogen radial model")->fallthrough();
    h->add_option("--Z", hyd.Z);
    h->add_option("--nu", hyd.nu);
    h->add_option("--l", hyd.l);
    h->add_option("--h", hyd.h);
    h->add_option("--samples", hyd.samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Tolerances tol{profile == "strict" ? 0.1 : 1.0, tolerance};
        ReportEnvelope r;
        if (t->parsed())
            r = cmd_tabulate(tab, tol);
        else if (v->parsed())
            r = cmd_verify(suite, tol, su2_j);
        else if (c->parsed())
            r = cmd_converge(conv);
        else if (o->parsed())
            r = cmd_oscillator(osc, osc_n, tol);
        else
            r = cmd_hydrogen(hyd, tol);
        r.parameters["tolerance_profile"] = profile;
        if (tolerance)
            r.parameters["tolerance"] = *tolerance;
        emit(r, format, out_path, out);
        return r.exit_status;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "domain error: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace dqm::cli
