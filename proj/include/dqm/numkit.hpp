#pragma once

// Scalar kernels shared by every basis and operator module: log-gamma,
// log-binomial, compensated summation and log-weight exponentiation.

#include <cstdint>
#include <span>

namespace dqm::numkit {

/// Neumaier (improved Kahan-Babuska) running sum.
class Accumulator {
public:
    void add(double term) noexcept;
    Accumulator& operator+=(double term) noexcept {
        add(term);
        return *this;
    }
    [[nodiscard]] double value() const noexcept { return running_sum_ + compensation_; }
    [[nodiscard]] double running_sum() const noexcept { return running_sum_; }
    [[nodiscard]] double compensation() const noexcept { return compensation_; }

private:
    double running_sum_ = 0.0;
    double compensation_ = 0.0;
};

/// ln Gamma(z) for z > 0; throws std::domain_error otherwise.
double ln_gamma(double z);

/// ln Gamma(b + d) - ln Gamma(b) for b > 0, b + d > 0, without cancelling two
/// large log-gamma values when b is large.
double ln_gamma_shift(double b, double d);

/// ln C(n, k); throws std::domain_error when k > n.
double ln_binomial(std::int64_t n, std::int64_t k);

double compensated_sum(std::span<const double> terms) noexcept;

/// exp(log_value) with underflow flushed to +0 rather than a denormal crawl.
double exp_log_weight(double log_value) noexcept;

}  // namespace dqm::numkit
