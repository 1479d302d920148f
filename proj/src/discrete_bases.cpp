#include "dqm/discrete_bases.hpp"

#include "dqm/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dqm {

using numkit::Accumulator;

KravchukParams::KravchukParams(int N, double p) : N_(N), p_(p)
{
    if (N < 1)
        throw std::domain_error("KravchukParams: N must be >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("KravchukParams: p must lie strictly inside (0, 1)");
}

MeixnerParams::MeixnerParams(double gamma, double mu) : gamma_(gamma), mu_(mu)
{
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("MeixnerParams: gamma must be positive");
    if (!(mu > 0.0 && mu < 1.0))
        throw std::domain_error("MeixnerParams: mu must lie strictly inside (0, 1)");
}

namespace {

// Three-term recurrence with a floating exponent so that seeds far below the
// double range still propagate. Values are emitted as sign * exp(log|f| + scale).
class ScaledRecurrence {
public:
    ScaledRecurrence(double log_seed, double sign) : cur_(sign), log_scale_(log_seed) {}

    [[nodiscard]] double current() const noexcept { return emit(cur_); }
    [[nodiscard]] double raw_current() const noexcept { return cur_; }
    [[nodiscard]] double raw_previous() const noexcept { return prev_; }

    void push(double next) noexcept
    {
        prev_ = cur_;
        cur_ = next;
        if (std::abs(cur_) > kBig) {
            cur_ *= kInvBig;
            prev_ *= kInvBig;
            log_scale_ += kLogBig;
        }
    }

private:
    static constexpr double kBig = 1e200;
    static constexpr double kInvBig = 1e-200;
    static constexpr double kLogBig = 460.51701859880913680;  // ln 1e200

    [[nodiscard]] double emit(double v) const noexcept
    {
        if (v == 0.0)
            return 0.0;
        return std::copysign(numkit::exp_log_weight(std::log(std::abs(v)) + log_scale_), v);
    }

    double prev_ = 0.0;
    double cur_;
    double log_scale_;
};

void check_kravchuk_index(const KravchukParams& params, int value, const char* what)
{
    if (value < 0 || value > params.N())
        throw std::domain_error(std::string("Kravchuk: ") + what + " outside 0..N");
}

// Upper turning point in n of the recurrence at fixed x. Forward recursion is
// stable below it, backward recursion from n = N above it.
int kravchuk_splice_point(const KravchukParams& params, int x)
{
    const double N = params.N();
    const double p = params.p();
    const double q = params.q();
    const double c0 = N * p - x;
    const double b = 2.0 * (q - p) * c0 - 4.0 * p * q * (N - 1.0);
    const double c = c0 * c0 - 4.0 * p * q * N;
    const double disc = b * b - 4.0 * c;
    const double root = disc >= 0.0 ? 0.5 * (-b + std::sqrt(disc)) : -0.5 * b;
    return static_cast<int>(std::clamp(std::floor(root), 0.0, N));
}

}  // namespace

double kravchuk_weight(const KravchukParams& params, int x)
{
    check_kravchuk_index(params, x, "x");
    const int N = params.N();
    return numkit::exp_log_weight(numkit::ln_binomial(N, x) + x * std::log(params.p()) +
                                  (N - x) * std::log(params.q()));
}

namespace {

// Forward seed is ln K_0(x), backward seed is ln |K_N(x)|.
struct KravchukSeeds {
    double forward;
    double backward;
};

KravchukSeeds kravchuk_seeds(const KravchukParams& params, int x)
{
    const int N = params.N();
    const double ln_binom = numkit::ln_binomial(N, x);
    const double lp = std::log(params.p());
    const double lq = std::log(params.q());
    return {0.5 * (ln_binom + x * lp + (N - x) * lq), 0.5 * (ln_binom + x * lq + (N - x) * lp)};
}

std::vector<double> column_from_seeds(const KravchukParams& params, int x, int n_max,
                                      const KravchukSeeds& seeds)
{
    const int N = params.N();
    const double p = params.p();
    const double q = params.q();
    const double pq = p * q;
    auto diag = [&](int n) { return n * (q - p) + N * p - x; };
    auto off = [&](int n) { return std::sqrt(pq * (N - n) * (n + 1.0)); };  // couples n, n+1

    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    const int splice = kravchuk_splice_point(params, x);

    const int forward_end = std::min(n_max, splice);
    ScaledRecurrence fwd(seeds.forward, 1.0);
    out[0] = fwd.current();
    for (int n = 0; n < forward_end; ++n) {
        const double prev = n > 0 ? off(n - 1) * fwd.raw_previous() : 0.0;
        fwd.push(-(diag(n) * fwd.raw_current() + prev) / off(n));
        out[static_cast<std::size_t>(n) + 1] = fwd.current();
    }
    if (n_max <= splice)
        return out;

    const double sign = ((N + x) % 2 == 0) ? 1.0 : -1.0;
    ScaledRecurrence bwd(seeds.backward, sign);
    if (N <= n_max)
        out[static_cast<std::size_t>(N)] = bwd.current();
    for (int n = N; n > splice + 1; --n) {
        const double next = n < N ? off(n) * bwd.raw_previous() : 0.0;
        bwd.push(-(diag(n) * bwd.raw_current() + next) / off(n - 1));
        if (n - 1 <= n_max)
            out[static_cast<std::size_t>(n) - 1] = bwd.current();
    }
    return out;
}

}  // namespace

std::vector<double> kravchuk_column(const KravchukParams& params, int x, int n_max)
{
    check_kravchuk_index(params, x, "x");
    check_kravchuk_index(params, n_max, "degree");
    return column_from_seeds(params, x, n_max, kravchuk_seeds(params, x));
}

std::array<std::vector<double>, 3> kravchuk_stencil(const KravchukParams& params, int x, int n_max)
{
    check_kravchuk_index(params, n_max, "degree");
    const int N = params.N();
    if (x < 1 || x > N - 1)
        throw std::domain_error("Kravchuk: stencil centre outside 1..N-1");
    const double p = params.p();
    const double q = params.q();
    // Neighbour seeds from exact one-step weight ratios, so all three columns share
    // the rounding of the centre seed.
    const KravchukSeeds c = kravchuk_seeds(params, x);
    const double up = (N - x) / (x + 1.0);
    const double down = x / (N - x + 1.0);
    const KravchukSeeds minus{c.forward + 0.5 * std::log(down * q / p),
                              c.backward + 0.5 * std::log(down * p / q)};
    const KravchukSeeds plus{c.forward + 0.5 * std::log(up * p / q),
                             c.backward + 0.5 * std::log(up * q / p)};
    return {column_from_seeds(params, x - 1, n_max, minus), column_from_seeds(params, x, n_max, c),
            column_from_seeds(params, x + 1, n_max, plus)};
}

double kravchuk_function(const KravchukParams& params, int n, int x)
{
    check_kravchuk_index(params, n, "degree");
    return kravchuk_column(params, x, n).back();
}

Eigen::MatrixXd kravchuk_rows(const KravchukParams& params, int n_max)
{
    check_kravchuk_index(params, n_max, "degree");
    const int N = params.N();
    Eigen::MatrixXd rows(n_max + 1, N + 1);
    for (int x = 0; x <= N; ++x) {
        const auto col = kravchuk_column(params, x, n_max);
        for (int n = 0; n <= n_max; ++n)
            rows(n, x) = col[static_cast<std::size_t>(n)];
    }
    return rows;
}

BasisRow kravchuk_row(const KravchukParams& params, int n)
{
    const Eigen::MatrixXd rows = kravchuk_rows(params, n);
    std::vector<double> values(rows.cols());
    for (Eigen::Index x = 0; x < rows.cols(); ++x)
        values[static_cast<std::size_t>(x)] = rows(n, x);
    return {Family::Kravchuk, n, std::move(values), params.N()};
}

namespace {

Eigen::MatrixXd compensated_gram(const Eigen::MatrixXd& rows, const std::vector<double>& weight)
{
    const Eigen::Index n = rows.rows();
    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = a; b < n; ++b) {
            Accumulator acc;
            for (Eigen::Index x = 0; x < rows.cols(); ++x)
                acc += rows(a, x) * rows(b, x) * weight[static_cast<std::size_t>(x)];
            gram(a, b) = gram(b, a) = acc.value();
        }
    }
    return gram;
}

}  // namespace

Eigen::MatrixXd kravchuk_gram(const KravchukParams& params, int n_max)
{
    check_kravchuk_index(params, n_max, "degree");
    return compensated_gram(kravchuk_rows(params, n_max),
                            std::vector<double>(static_cast<std::size_t>(params.N()) + 1, 1.0));
}

// ---- Meixner ----------------------------------------------------------------

namespace {

void check_nonnegative(int value, const char* what)
{
    if (value < 0)
        throw std::domain_error(std::string("Meixner: ") + what + " must be non-negative");
}

double meixner_log_seed(const MeixnerParams& params, int x)
{
    const double g = params.gamma();
    const double mu = params.mu();
    // ln M_0(x)^2 = ln rho1(x) - ln d_0^2 with d_0^2 = 1 / (mu (1-mu)^gamma)
    return 0.5 * ((x + 1.0) * std::log(mu) + g * std::log1p(-mu) + numkit::ln_gamma_shift(x + 1.0, g) -
                  numkit::ln_gamma(g));
}

}  // namespace

MeixnerWeight meixner_weight(const MeixnerParams& params, int x)
{
    check_nonnegative(x, "x");
    const double g = params.gamma();
    const double mu = params.mu();
    const double log_rho1 = x * std::log(mu) + numkit::ln_gamma_shift(x + 1.0, g) -
                            numkit::ln_gamma(g);
    return {numkit::exp_log_weight(log_rho1), 1.0 / (mu * (x + g))};
}

std::vector<double> meixner_column(const MeixnerParams& params, int x, int n_max)
{
    check_nonnegative(x, "x");
    check_nonnegative(n_max, "degree");
    const double g = params.gamma();
    const double mu = params.mu();
    auto diag = [&](int n) { return n * (1.0 + mu) + mu * g - (1.0 - mu) * x; };
    auto off = [&](int n) { return std::sqrt(mu * (n + g) * (n + 1.0)); };  // couples n, n+1

    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    ScaledRecurrence rec(meixner_log_seed(params, x), 1.0);
    out[0] = rec.current();
    for (int n = 0; n < n_max; ++n) {
        const double prev = n > 0 ? off(n - 1) * rec.raw_previous() : 0.0;
        rec.push((diag(n) * rec.raw_current() - prev) / off(n));
        out[static_cast<std::size_t>(n) + 1] = rec.current();
    }
    return out;
}

double meixner_function(const MeixnerParams& params, int n, int x)
{
    check_nonnegative(n, "degree");
    return meixner_column(params, x, n).back();
}

int meixner_cutoff(const MeixnerParams& params, int n_max, double tol)
{
    check_nonnegative(n_max, "degree");
    if (!(tol > 0.0))
        throw std::domain_error("meixner_cutoff: tol must be positive");
    const double g = params.gamma();
    const double mu = params.mu();

    // Gershgorin bound on the largest zero of every polynomial of degree <= n_max.
    double zero_bound = -1.0;
    for (int k = 0; k < n_max; ++k) {
        const double row = k * (1.0 + mu) + mu * g + std::sqrt(mu * (k + 1.0) * (k + g)) +
                           std::sqrt(mu * k * (k + g - 1.0));
        zero_bound = std::max(zero_bound, row / (1.0 - mu));
    }
    const int start = std::max(0, static_cast<int>(std::ceil(zero_bound)) + 1);

    constexpr int kMaxGrid = 50'000'000;
    for (int x = start; x < kMaxGrid; ++x) {
        // Past every zero, term(x+1)/term(x) <= ratio, and ratio is non-increasing in x.
        const double poly = n_max > 0 ? std::pow((x + 1.0 - zero_bound) / (x - zero_bound),
                                                 2.0 * n_max)
                                      : 1.0;
        const double ratio = mu * std::max(1.0, (x + g) / (x + 1.0)) * poly;
        if (ratio >= 1.0)
            continue;
        const auto col = meixner_column(params, x, n_max);
        const double w = 1.0 / (mu * (x + g));
        double term = 0.0;
        double peak = 0.0;
        for (double v : col) {
            term = std::max(term, v * v * w);
            peak = std::max(peak, std::abs(v));
        }
        if (term * ratio / (1.0 - ratio) < tol && peak < tol)
            return x;
    }
    throw std::runtime_error("meixner_cutoff: no cutoff found within grid cap");
}

Eigen::MatrixXd meixner_rows(const MeixnerParams& params, int n_max, int grid_limit)
{
    check_nonnegative(grid_limit, "grid limit");
    Eigen::MatrixXd rows(n_max + 1, grid_limit + 1);
    for (int x = 0; x <= grid_limit; ++x) {
        const auto col = meixner_column(params, x, n_max);
        for (int n = 0; n <= n_max; ++n)
            rows(n, x) = col[static_cast<std::size_t>(n)];
    }
    return rows;
}

BasisRow meixner_row(const MeixnerParams& params, int n, double tol)
{
    check_nonnegative(n, "degree");
    const int limit = meixner_cutoff(params, n, tol);
    const Eigen::MatrixXd rows = meixner_rows(params, n, limit);
    std::vector<double> values(rows.cols());
    for (Eigen::Index x = 0; x < rows.cols(); ++x)
        values[static_cast<std::size_t>(x)] = rows(n, x);
    return {Family::Meixner, n, std::move(values), limit};
}

namespace {

std::vector<double> meixner_inner_weights(const MeixnerParams& params, int grid_limit)
{
    std::vector<double> w(static_cast<std::size_t>(grid_limit) + 1);
    for (int x = 0; x <= grid_limit; ++x)
        w[static_cast<std::size_t>(x)] = 1.0 / (params.mu() * (x + params.gamma()));
    return w;
}

}  // namespace

Eigen::MatrixXd meixner_gram(const MeixnerParams& params, int n_max, double tol)
{
    const int limit = meixner_cutoff(params, n_max, tol);
    return compensated_gram(meixner_rows(params, n_max, limit),
                            meixner_inner_weights(params, limit));
}

double meixner_mean_x(const MeixnerParams& params, int n)
{
    check_nonnegative(n, "degree");
    const double mu = params.mu();
    return (n * (1.0 + mu) + mu * params.gamma()) / (1.0 - mu);
}

double meixner_mean_x_sum(const MeixnerParams& params, int n, double tol)
{
    check_nonnegative(n, "degree");
    const int limit = meixner_cutoff(params, n, tol);
    Accumulator acc;
    for (int x = 0; x <= limit; ++x) {
        const double v = meixner_function(params, n, x);
        acc += x * v * v / (params.mu() * (x + params.gamma()));
    }
    return acc.value();
}

}  // namespace dqm
