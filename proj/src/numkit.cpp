#include "dqm/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dqm::numkit {

void Accumulator::add(double term) noexcept
{
    const double t = running_sum_ + term;
    if (std::abs(running_sum_) >= std::abs(term))
        compensation_ += (running_sum_ - t) + term;
    else
        compensation_ += (term - t) + running_sum_;
    running_sum_ = t;
}

double ln_gamma(double z)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("ln_gamma: argument must be positive and finite");
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(z, &sign);
#else
    return std::lgamma(z);
#endif
}

namespace {

// ln m! - (m ln m - m + ln(2 pi m)/2), the Stirling remainder.
double stirling_remainder(std::int64_t m)
{
    const double x = static_cast<double>(m);
    if (m < 16) {
        return ln_gamma(x + 1.0) -
               (x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x));
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // 1/12m - 1/360m^3 + 1/1260m^5 - 1/1680m^7
    return inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
}

// ln Gamma(z) - ((z - 1/2) ln z - z + ln(2 pi)/2) for z >= 16.
double stirling_remainder_real(double z)
{
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    return inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
}

}  // namespace

double ln_gamma_shift(double b, double d)
{
    const double a = b + d;
    if (!(b > 0.0) || !(a > 0.0) || !std::isfinite(a))
        throw std::domain_error("ln_gamma_shift: arguments must be positive and finite");
    if (d == 0.0)
        return 0.0;
    if (std::min(a, b) < 16.0)
        return ln_gamma(a) - ln_gamma(b);
    Accumulator acc;
    acc += (a - 0.5) * std::log1p(d / b);
    acc += d * (std::log(b) - 1.0);
    acc += stirling_remainder_real(a);
    acc += -stirling_remainder_real(b);
    return acc.value();
}

double ln_binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("ln_binomial: requires 0 <= k <= n");
    // Both orders go through the same k' so C(n,k) and C(n,n-k) agree bit for bit.
    const std::int64_t kk = std::min(k, n - k);
    if (kk == 0)
        return 0.0;
    if (kk <= 32) {
        Accumulator acc;
        for (std::int64_t i = 1; i <= kk; ++i)
            acc += std::log(static_cast<double>(n - kk + i) / static_cast<double>(i));
        return acc.value();
    }
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(kk);
    const double rd = nd - kd;
    Accumulator acc;
    acc += -kd * std::log(kd / nd);
    acc += -rd * std::log1p(-kd / nd);
    acc += 0.5 * std::log(nd / (2.0 * std::numbers::pi * kd * rd));
    acc += stirling_remainder(n);
    acc += -stirling_remainder(kk);
    acc += -stirling_remainder(n - kk);
    return acc.value();
}

double compensated_sum(std::span<const double> terms) noexcept
{
    Accumulator acc;
    for (double t : terms)
        acc.add(t);
    return acc.value();
}

double exp_log_weight(double log_value) noexcept
{
    if (log_value < -745.2)
        return 0.0;
    return std::exp(log_value);
}

}  // namespace dqm::numkit
