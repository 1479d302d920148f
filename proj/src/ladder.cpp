#include "dqm/ladder.hpp"

#include "dqm/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dqm {

namespace {

using Vec = std::vector<double>;

double max_abs(const Eigen::MatrixXd& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// ---- Kravchuk pieces --------------------------------------------------------

struct KravchukShifts {
    Vec up;    // U(x) = sqrt(pq(N-x)(x+1)), coefficient of K(x+1); length N
    Vec down;  // V(x) = sqrt(pq(N-x+1)x), coefficient of K(x-1), stored for x = 1..N
};

KravchukShifts kravchuk_shifts(const KravchukParams& params)
{
    const int N = params.N();
    const double pq = params.p() * params.q();
    KravchukShifts s;
    s.up.resize(static_cast<std::size_t>(N));
    s.down.resize(static_cast<std::size_t>(N));
    for (int x = 0; x < N; ++x) {
        s.up[static_cast<std::size_t>(x)] = std::sqrt(pq * (N - x) * (x + 1.0));
        s.down[static_cast<std::size_t>(x)] = std::sqrt(pq * (N - x) * (x + 1.0));  // V(x+1)
    }
    return s;
}

void check_degree_range(const KravchukParams& params, int n)
{
    if (n < 0 || n > params.N())
        throw std::domain_error("Kravchuk operator: degree outside 0..N");
}

Vec kravchuk_ladder_diag(const KravchukParams& params, int n)
{
    const int N = params.N();
    Vec d(static_cast<std::size_t>(N) + 1);
    for (int x = 0; x <= N; ++x)
        d[static_cast<std::size_t>(x)] = params.p() * (x + n - N);
    return d;
}

Vec kravchuk_symmetric_diag(const KravchukParams& params, int n)
{
    const int N = params.N();
    const double p = params.p();
    const double q = params.q();
    Vec d(static_cast<std::size_t>(N) + 1);
    for (int x = 0; x <= N; ++x)
        d[static_cast<std::size_t>(x)] = 0.5 * ((x - N * p) + n * (p - q));
    return d;
}

Vec scaled(Vec v, double f)
{
    for (double& e : v) e *= f;
    return v;
}

// Unchecked builders; n may sit one step outside 0..N inside identities.
TridiagonalOperator raise_unchecked(const KravchukParams& params, int n, LadderForm form)
{
    const auto s = kravchuk_shifts(params);
    if (form == LadderForm::original)
        return {s.down, kravchuk_ladder_diag(params, n), Vec(s.up.size(), 0.0), BasisLabel::grid_x};
    return {scaled(s.down, 0.5), kravchuk_symmetric_diag(params, n), scaled(s.up, -0.5),
            BasisLabel::grid_x};
}

TridiagonalOperator lower_unchecked(const KravchukParams& params, int n, LadderForm form)
{
    const auto s = kravchuk_shifts(params);
    if (form == LadderForm::original)
        return {Vec(s.down.size(), 0.0), kravchuk_ladder_diag(params, n), s.up, BasisLabel::grid_x};
    return {scaled(s.down, -0.5), kravchuk_symmetric_diag(params, n), scaled(s.up, 0.5),
            BasisLabel::grid_x};
}

TridiagonalOperator hamiltonian_unchecked(const KravchukParams& params, int n)
{
    const int N = params.N();
    const auto s = kravchuk_shifts(params);
    Vec d(static_cast<std::size_t>(N) + 1);
    for (int x = 0; x <= N; ++x)
        d[static_cast<std::size_t>(x)] = x * (params.p() - params.q()) - N * params.p() + n;
    return {s.down, std::move(d), s.up, BasisLabel::grid_x};
}

}  // namespace

TridiagonalOperator kravchuk_hamiltonian(const KravchukParams& params, int n)
{
    check_degree_range(params, n);
    return hamiltonian_unchecked(params, n);
}

TridiagonalOperator kravchuk_raise(const KravchukParams& params, int n, LadderForm form)
{
    check_degree_range(params, n);
    if (n == params.N())
        throw std::out_of_range("kravchuk_raise: no degree above N");
    return raise_unchecked(params, n, form);
}

TridiagonalOperator kravchuk_lower(const KravchukParams& params, int n, LadderForm form)
{
    check_degree_range(params, n);
    return lower_unchecked(params, n, form);
}

double kravchuk_raise_coefficient(const KravchukParams& params, int n)
{
    return std::sqrt(params.p() * params.q() * (params.N() - n) * (n + 1.0));
}

double kravchuk_lower_coefficient(const KravchukParams& params, int n)
{
    return std::sqrt(params.p() * params.q() * (params.N() - n + 1.0) * n);
}

double kravchuk_factorization_residual(const KravchukParams& params, int n, FactorizationSide side)
{
    const int N = params.N();
    if (n < 1 || n > N - 1)
        throw std::domain_error("kravchuk_factorization_residual: requires 1 <= n <= N-1");
    const double pq = params.p() * params.q();
    const auto H = hamiltonian_unchecked(params, n);
    const bool pm = side == FactorizationSide::plus_minus;
    const Eigen::MatrixXd product =
        pm ? compose(raise_unchecked(params, n - 1, LadderForm::original),
                     lower_unchecked(params, n, LadderForm::original))
           : compose(lower_unchecked(params, n + 1, LadderForm::original),
                     raise_unchecked(params, n, LadderForm::original));
    const double scalar = pm ? pq * (N - n + 1.0) * n : pq * (N - n) * (n + 1.0);
    const int shift = pm ? -1 : 1;
    Vec left(static_cast<std::size_t>(N) + 1);
    for (int x = 0; x <= N; ++x)
        left[static_cast<std::size_t>(x)] = params.p() * (x + n + shift - N);
    const Eigen::MatrixXd rhs =
        scalar * Eigen::MatrixXd::Identity(N + 1, N + 1) + left_diagonal(left, H).to_dense();
    return max_abs(product - rhs);
}

BasisRow kravchuk_rodrigues_product(const KravchukParams& params, int n)
{
    check_degree_range(params, n);
    const int N = params.N();
    Vec v = kravchuk_row(params, 0).values;
    for (int k = 0; k < n; ++k)
        v = raise_unchecked(params, k, LadderForm::original).apply(v);
    const double log_c = -0.5 * (numkit::ln_binomial(N, n) + 2.0 * numkit::ln_gamma(n + 1.0) +
                                 n * std::log(params.p() * params.q()));
    const double c = std::exp(log_c);
    for (double& e : v) e *= c;
    return {Family::Kravchuk, n, std::move(v), N};
}

// ---- Meixner ----------------------------------------------------------------

namespace {

struct MeixnerShifts {
    Vec up;    // U(x) = sqrt(mu (x+g)^2 (x+1) / (x+g+1)), x = 0..dim-2
    Vec down;  // V(x+1) = sqrt(mu (x+1+g)(x+1)), x = 0..dim-2
};

MeixnerShifts meixner_shifts(const MeixnerParams& params, int dim)
{
    if (dim < 2)
        throw std::domain_error("Meixner operator: dimension must be >= 2");
    const double g = params.gamma();
    const double mu = params.mu();
    MeixnerShifts s;
    s.up.resize(static_cast<std::size_t>(dim) - 1);
    s.down.resize(static_cast<std::size_t>(dim) - 1);
    for (int x = 0; x + 1 < dim; ++x) {
        s.up[static_cast<std::size_t>(x)] = std::sqrt(mu * (x + g) * (x + g) * (x + 1.0) / (x + g + 1.0));
        s.down[static_cast<std::size_t>(x)] = std::sqrt(mu * (x + 1.0 + g) * (x + 1.0));
    }
    return s;
}

Vec meixner_ladder_diag(const MeixnerParams& params, int n, int dim)
{
    Vec d(static_cast<std::size_t>(dim));
    for (int x = 0; x < dim; ++x)
        d[static_cast<std::size_t>(x)] = -params.mu() * (x + params.gamma() + n);
    return d;
}

Vec meixner_symmetric_diag(const MeixnerParams& params, int n, int dim)
{
    const double g = params.gamma();
    const double mu = params.mu();
    Vec d(static_cast<std::size_t>(dim));
    for (int x = 0; x < dim; ++x)
        d[static_cast<std::size_t>(x)] = -0.5 * (mu * g + (mu + 1.0) * n + (mu - 1.0) * x);
    return d;
}

TridiagonalOperator meixner_raise_any(const MeixnerParams& params, int n, int dim, LadderForm form)
{
    const auto s = meixner_shifts(params, dim);
    if (form == LadderForm::original)
        return {s.down, meixner_ladder_diag(params, n, dim), Vec(s.up.size(), 0.0),
                BasisLabel::grid_x};
    return {scaled(s.down, 0.5), meixner_symmetric_diag(params, n, dim), scaled(s.up, -0.5),
            BasisLabel::grid_x};
}

TridiagonalOperator meixner_lower_any(const MeixnerParams& params, int n, int dim, LadderForm form)
{
    const auto s = meixner_shifts(params, dim);
    if (form == LadderForm::original)
        return {Vec(s.down.size(), 0.0), meixner_ladder_diag(params, n, dim), s.up,
                BasisLabel::grid_x};
    return {scaled(s.down, -0.5), meixner_symmetric_diag(params, n, dim), scaled(s.up, 0.5),
            BasisLabel::grid_x};
}

void check_meixner_degree(int n)
{
    if (n < 0)
        throw std::domain_error("Meixner operator: degree must be non-negative");
}

struct MeixnerWindow {
    int cutoff;  // last grid point inside the truncation window
    int dim;     // cutoff + 1 + guard band
    Eigen::MatrixXd rows;
    Vec weight;
};

MeixnerWindow meixner_window(const MeixnerParams& params, int n_max)
{
    MeixnerWindow w;
    w.dim = meixner_operator_dim(params, n_max);
    w.cutoff = w.dim - 1 - kMeixnerGuardBand;
    w.rows = meixner_rows(params, n_max, w.dim - 1);
    w.weight.resize(static_cast<std::size_t>(w.dim));
    for (int x = 0; x < w.dim; ++x)
        w.weight[static_cast<std::size_t>(x)] = 1.0 / (params.mu() * (x + params.gamma()));
    return w;
}

Vec row_of(const Eigen::MatrixXd& rows, int n)
{
    Vec v(static_cast<std::size_t>(rows.cols()));
    for (Eigen::Index x = 0; x < rows.cols(); ++x)
        v[static_cast<std::size_t>(x)] = rows(n, x);
    return v;
}

ScalarAction project(const Vec& image, const Vec& basis, const Vec& weight, int cutoff)
{
    numkit::Accumulator num;
    numkit::Accumulator den;
    for (int x = 0; x <= cutoff; ++x) {
        const auto i = static_cast<std::size_t>(x);
        num += image[i] * basis[i] * weight[i];
        den += basis[i] * basis[i] * weight[i];
    }
    const double c = num.value() / den.value();
    double res = 0.0;
    for (int x = 0; x <= cutoff; ++x) {
        const auto i = static_cast<std::size_t>(x);
        res = std::max(res, std::abs(image[i] - c * basis[i]));
    }
    return {c, res};
}

}  // namespace

int meixner_operator_dim(const MeixnerParams& params, int n_max, double tol)
{
    return meixner_cutoff(params, n_max, tol) + 1 + kMeixnerGuardBand;
}

TridiagonalOperator meixner_hamiltonian(const MeixnerParams& params, int n, int dim)
{
    check_meixner_degree(n);
    const auto s = meixner_shifts(params, dim);
    const double g = params.gamma();
    const double mu = params.mu();
    Vec d(static_cast<std::size_t>(dim));
    for (int x = 0; x < dim; ++x)
        d[static_cast<std::size_t>(x)] = -(mu * (x + g) + x - n * (1.0 - mu));
    return {s.down, std::move(d), s.up, BasisLabel::grid_x};
}

TridiagonalOperator meixner_raise(const MeixnerParams& params, int n, int dim, LadderForm form)
{
    check_meixner_degree(n);
    return meixner_raise_any(params, n, dim, form);
}

TridiagonalOperator meixner_lower(const MeixnerParams& params, int n, int dim, LadderForm form)
{
    check_meixner_degree(n);
    return meixner_lower_any(params, n, dim, form);
}

double meixner_raise_coefficient(const MeixnerParams& params, int n)
{
    return -std::sqrt(params.mu() * (n + params.gamma()) * (n + 1.0));
}

double meixner_lower_coefficient(const MeixnerParams& params, int n)
{
    return -std::sqrt(params.mu() * (n + params.gamma() - 1.0) * n);
}

ScalarAction meixner_commutator_eigenvalue(const MeixnerParams& params, int n)
{
    check_meixner_degree(n);
    const auto w = meixner_window(params, n + 1);
    const Vec m = row_of(w.rows, n);
    const auto form = LadderForm::original;
    const Vec a = meixner_raise_any(params, n - 1, w.dim, form)
                      .apply(meixner_lower_any(params, n, w.dim, form).apply(m));
    const Vec b = meixner_lower_any(params, n + 1, w.dim, form)
                      .apply(meixner_raise_any(params, n, w.dim, form).apply(m));
    Vec diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        diff[i] = a[i] - b[i];
    return project(diff, m, w.weight, w.cutoff);
}

namespace {

enum class ShiftTerm { half, quarter };

// Expanded anticommutator: D_n^2 - (mu/4){...} + c (mu+1) {U E+ - V E-},
// with c = 1/4 from composing the operators; c = 1/2 is evaluated for comparison.
Eigen::MatrixXd meixner_expanded_anticommutator(const MeixnerParams& params, int n, int dim,
                                                ShiftTerm term)
{
    const double g = params.gamma();
    const double mu = params.mu();
    const double c = term == ShiftTerm::half ? 0.5 : 0.25;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int x = 0; x < dim; ++x) {
        const double d = 0.5 * (mu * g + (mu + 1.0) * n + (mu - 1.0) * x);
        m(x, x) += d * d;
        // -(mu/4) { ... (E+)^2 - (x+g-1)x - (x+g)(x+1) + ... (E-)^2 }
        m(x, x) += 0.25 * mu * ((x + g - 1.0) * x + (x + g) * (x + 1.0));
        if (x + 2 < dim)
            m(x, x + 2) -= 0.25 * mu *
                           std::sqrt((x + g) * (x + g) * (x + 1.0) * (x + g + 1.0) * (x + 2.0) /
                                     (x + g + 2.0));
        if (x >= 2)
            m(x, x - 2) -= 0.25 * mu * std::sqrt((x + g) * x * (x + g - 1.0) * (x - 1.0));
        if (x + 1 < dim)
            m(x, x + 1) += c * (mu + 1.0) * std::sqrt(mu * (x + g) * (x + 1.0) * (x + g) / (x + g + 1.0));
        if (x >= 1)
            m(x, x - 1) -= c * (mu + 1.0) * std::sqrt(mu * (x + g) * x);
    }
    return m;
}

}  // namespace

AnticommutatorReport meixner_anticommutator(const MeixnerParams& params, int n)
{
    if (n < 1)
        throw std::domain_error("meixner_anticommutator: requires n >= 1");
    const double g = params.gamma();
    const double mu = params.mu();
    const auto w = meixner_window(params, n + 1);
    const auto form = LadderForm::symmetric;
    const Eigen::MatrixXd comp =
        0.5 * (compose(meixner_raise_any(params, n - 1, w.dim, form),
                       meixner_lower_any(params, n, w.dim, form)) +
               compose(meixner_lower_any(params, n + 1, w.dim, form),
                       meixner_raise_any(params, n, w.dim, form)));
    const Vec m = row_of(w.rows, n);
    const Eigen::Map<const Eigen::VectorXd> mv(m.data(), static_cast<Eigen::Index>(m.size()));
    const Eigen::VectorXd image = comp * mv;
    const Eigen::VectorXd half =
        meixner_expanded_anticommutator(params, n, w.dim, ShiftTerm::half) * mv;
    const Eigen::MatrixXd quarter =
        meixner_expanded_anticommutator(params, n, w.dim, ShiftTerm::quarter);

    AnticommutatorReport r{};
    r.compositional_value = 0.5 * (mu * n * (n + g - 1.0) + mu * (n + 1.0) * (n + g));
    const auto window = static_cast<Eigen::Index>(w.cutoff) + 1;
    r.composition_residual =
        (image.head(window) - r.compositional_value * mv.head(window)).cwiseAbs().maxCoeff();
    r.half_shift_expansion_residual = (half.head(window) - image.head(window)).cwiseAbs().maxCoeff();
    // Rows whose +-2 neighbours are inside the materialized grid.
    const Eigen::Index interior = w.dim - 2;
    r.quarter_shift_expansion_residual =
        (quarter.topRows(interior) - comp.topRows(interior)).cwiseAbs().maxCoeff();
    return r;
}

double meixner_anticommutator_residual(const MeixnerParams& params, int n)
{
    return meixner_anticommutator(params, n).half_shift_expansion_residual;
}

// ---- Laguerre ---------------------------------------------------------------

namespace {

struct ValueSlope {
    double value;
    double slope;
};

// Image of L+(n) (sign = -1 on the derivative term) or L-(n) (sign = +1) and its derivative.
ValueSlope laguerre_ladder_image(double alpha, int n, double s, const Jet& f, double sign)
{
    const double a = 2.0 * n + alpha + 1.0 - s;
    return {-0.5 * a * f.value + sign * s * f.d1,
            0.5 * f.value - 0.5 * a * f.d1 + sign * (f.d1 + s * f.d2)};
}

double laguerre_ladder_apply(double alpha, int n, double s, const ValueSlope& g, double sign)
{
    const double a = 2.0 * n + alpha + 1.0 - s;
    return -0.5 * a * g.value + sign * s * g.slope;
}

void check_positive(double s)
{
    if (!(s > 0.0))
        throw std::domain_error("Laguerre operator: s must be positive");
}

}  // namespace

double laguerre_raise(double alpha, int n, double s)
{
    check_positive(s);
    const Jet f = laguerre_jet(alpha, n, s);
    return laguerre_ladder_image(alpha, n, s, f, -1.0).value;
}

double laguerre_lower(double alpha, int n, double s)
{
    check_positive(s);
    const Jet f = laguerre_jet(alpha, n, s);
    return laguerre_ladder_image(alpha, n, s, f, +1.0).value;
}

double laguerre_factorization_residual_on(double alpha, int n, double s, const Jet& f,
                                          FactorizationSide side)
{
    check_positive(s);
    const double lambda = n + 0.5 * (alpha + 1.0);
    const double sl = f.d2 + (lambda / s - 0.25 - (alpha * alpha - 1.0) / (4.0 * s * s)) * f.value;
    if (side == FactorizationSide::minus_plus) {
        const auto g = laguerre_ladder_image(alpha, n, s, f, -1.0);
        const double lhs = laguerre_ladder_apply(alpha, n + 1, s, g, +1.0);
        return lhs - ((n + 1.0) * (n + alpha + 1.0) * f.value - s * s * sl);
    }
    const auto g = laguerre_ladder_image(alpha, n, s, f, +1.0);
    const double lhs = laguerre_ladder_apply(alpha, n - 1, s, g, -1.0);
    return lhs - (n * (n + alpha) * f.value - s * s * sl);
}

double laguerre_factorization_residual(double alpha, int n, double s, FactorizationSide side)
{
    check_positive(s);
    return laguerre_factorization_residual_on(alpha, n, s, laguerre_jet(alpha, n, s), side);
}

}  // namespace dqm
