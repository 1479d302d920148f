#include "dqm/limits.hpp"

#include "dqm/continuous_bases.hpp"
#include "dqm/discrete_bases.hpp"
#include "dqm/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace dqm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linspace(double a, double b, int count)
{
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        v[static_cast<std::size_t>(i)] = a + (b - a) * i / (count - 1);
    return v;
}

int checked_lattice_size(double r)
{
    if (!(r >= 1.0) || r != std::floor(r) || r > std::numeric_limits<int>::max())
        throw std::invalid_argument("resolution must be a positive integer");
    return static_cast<int>(r);
}

}  // namespace

LimitError kravchuk_to_hermite_error(int n, int N, double p, std::span<const double> s_probes)
{
    const KravchukParams params(N, p);
    if (n < 0 || n > N)
        throw std::domain_error("kravchuk_to_hermite_error: degree outside 0..N");
    const double scale = std::sqrt(2.0 * N * p * params.q());
    const double amp = std::sqrt(scale);
    LimitError e;
    for (const double s : s_probes) {
        const double xr = std::round(N * p + scale * s);
        if (xr < 0.0 || xr > N) {
            ++e.skipped_probes;
            continue;
        }
        const int x = static_cast<int>(xr);
        const double s_exact = (x - N * p) / scale;
        const double k = kravchuk_column(params, x, n)[static_cast<std::size_t>(n)];
        e.sup_error = std::max(e.sup_error, std::abs(amp * k - hermite_function(n, s_exact)));
        ++e.probes_used;
    }
    return e;
}

LimitError ladder_limit_error(int n, int N, double p, std::span<const double> s_probes,
                              LadderDirection which)
{
    const KravchukParams params(N, p);
    const bool raise = which == LadderDirection::raise;
    if (n < 0 || n > N || (raise && n + 1 > N))
        throw std::domain_error("ladder_limit_error: degree out of range");
    const double q = params.q();
    const double pq = p * q;
    const double scale = std::sqrt(2.0 * N * pq);
    const double amp = std::sqrt(scale) / std::sqrt(N * pq);
    const int n_col = raise ? n + 1 : n;
    LimitError e;
    for (const double s : s_probes) {
        const double xr = std::round(N * p + scale * s);
        if (xr < 1.0 || xr > N - 1.0) {
            ++e.skipped_probes;
            continue;
        }
        const int x = static_cast<int>(xr);
        const auto i = static_cast<std::size_t>(n);
        const auto cols = kravchuk_stencil(params, x, n_col);
        const double km = cols[0][i];
        const double k0 = cols[1][i];
        const double kp = cols[2][i];
        const double u = std::sqrt(pq * (N - x) * (x + 1.0));
        const double v = std::sqrt(pq * (N - x + 1.0) * x);
        const double d = 0.5 * ((x - N * p) + n * (p - q));
        const double image =
            raise ? d * k0 - 0.5 * u * kp + 0.5 * v * km : d * k0 + 0.5 * u * kp - 0.5 * v * km;
        const double s_exact = (x - N * p) / scale;
        const double target = raise ? std::sqrt(n + 1.0) * hermite_function(n + 1, s_exact)
                              : n == 0 ? 0.0
                                       : std::sqrt(static_cast<double>(n)) * hermite_function(n - 1, s_exact);
        e.sup_error = std::max(e.sup_error, std::abs(amp * image - target));
        ++e.probes_used;
    }
    return e;
}

LimitError meixner_to_laguerre_error(double alpha, int n, double h, std::span<const double> s_probes)
{
    if (!(h > 0.0 && h < 1.0))
        throw std::domain_error("meixner_to_laguerre_error: h must lie in (0, 1)");
    if (!(alpha > -1.0))
        throw std::domain_error("meixner_to_laguerre_error: alpha must exceed -1");
    if (n < 0)
        throw std::domain_error("meixner_to_laguerre_error: degree must be non-negative");
    const MeixnerParams params(alpha + 1.0, 1.0 - h);
    LimitError e;
    for (const double s : s_probes) {
        const double xr = std::round(s / h);
        if (!(xr >= 1.0) || xr > std::numeric_limits<int>::max()) {
            ++e.skipped_probes;
            continue;
        }
        const int x = static_cast<int>(xr);
        const double m = meixner_column(params, x, n)[static_cast<std::size_t>(n)];
        e.sup_error = std::max(e.sup_error, std::abs(m - laguerre_function(alpha, n, h * x)));
        ++e.probes_used;
    }
    return e;
}

std::string to_string(Study study)
{
    switch (study) {
    case Study::kravchuk_hermite: return "kravchuk-hermite";
    case Study::ladder: return "ladder";
    case Study::meixner_laguerre: return "meixner-laguerre";
    case Study::anticommutator: return "anticommutator";
    }
    return "unknown";
}

std::vector<double> default_probes(Study study)
{
    if (study == Study::meixner_laguerre)
        return linspace(0.5, 6.0, 56);
    return linspace(-2.0, 2.0, 81);
}

bool ConvergenceReport::complete() const
{
    return std::all_of(failures.begin(), failures.end(), [](const std::string& f) { return f.empty(); });
}

bool ConvergenceReport::strictly_decreasing() const
{
    if (!complete())
        return false;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i)
        if (!(errors[i + 1] < errors[i]))
            return false;
    return true;
}

namespace {

double evaluate(const SweepSpec& spec, double resolution, std::span<const double> probes)
{
    switch (spec.study) {
    case Study::kravchuk_hermite:
        return kravchuk_to_hermite_error(spec.n, checked_lattice_size(resolution), spec.p, probes).sup_error;
    case Study::ladder:
        return ladder_limit_error(spec.n, checked_lattice_size(resolution), spec.p, probes,
                                  spec.direction)
            .sup_error;
    case Study::meixner_laguerre:
        return meixner_to_laguerre_error(spec.alpha, spec.n, resolution, probes).sup_error;
    case Study::anticommutator: {
        const int twice_j = checked_lattice_size(resolution);
        if (spec.n < 0 || spec.n > twice_j)
            throw std::domain_error("anticommutator study: n outside 0..2j");
        const double v = su2_anticommutator_spectrum(twice_j)[static_cast<std::size_t>(spec.n)];
        return std::abs(v - (2.0 * spec.n + 1.0));
    }
    }
    throw std::invalid_argument("unknown study");
}

void validate(const SweepSpec& spec)
{
    const auto& r = spec.resolutions;
    if (r.size() < 3)
        throw std::invalid_argument("convergence sweep needs at least 3 resolutions");
    const bool up = r[1] > r[0];
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        if (!std::isfinite(r[i]) || !std::isfinite(r[i + 1]) || (up ? !(r[i + 1] > r[i]) : !(r[i + 1] < r[i])))
            throw std::invalid_argument("convergence sweep resolutions must be strictly monotone");
    }
}

}  // namespace

ConvergenceReport convergence_sweep(const SweepSpec& spec)
{
    validate(spec);
    const std::vector<double> probes = spec.probes.empty() ? default_probes(spec.study) : spec.probes;

    std::vector<std::future<double>> jobs;
    jobs.reserve(spec.resolutions.size());
    for (const double r : spec.resolutions)
        jobs.push_back(std::async(std::launch::async,
                                  [&spec, &probes, r] { return evaluate(spec, r, probes); }));

    ConvergenceReport report{spec.study, spec.n, spec.resolutions, {}, {}, {}};
    for (auto& job : jobs) {
        try {
            report.errors.push_back(job.get());
            report.failures.emplace_back();
        } catch (const std::exception& ex) {
            report.errors.push_back(kNaN);
            report.failures.emplace_back(ex.what());
        }
    }
    for (std::size_t i = 0; i + 1 < report.errors.size(); ++i) {
        const double e0 = report.errors[i];
        const double e1 = report.errors[i + 1];
        const double step = std::abs(std::log(spec.resolutions[i + 1] / spec.resolutions[i]));
        const bool defined = e0 > 0.0 && e1 > 0.0 && std::isfinite(e0) && std::isfinite(e1) && step > 0.0;
        report.observed_rates.push_back(defined ? std::log(e0 / e1) / step : kNaN);
    }
    return report;
}

}  // namespace dqm
