#pragma once

#include "dqm/cli/report.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace dqm::cli {

/// Thrown for malformed or inconsistent command-line input; maps to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Effective tolerance: override if given, else base scaled by the profile (strict = 0.1).
struct Tolerances {
    double scale = 1.0;
    std::optional<double> override_value;

    [[nodiscard]] double operator()(double base) const
    {
        return override_value ? *override_value : base * scale;
    }
};

/// suite: kravchuk, meixner, laguerre, wigner, su2 or all. twice_j restricts the su2 suite.
ReportEnvelope cmd_verify(const std::string& suite, const Tolerances& tol,
                          std::optional<int> twice_j = std::nullopt);

/// Full command line entry point. Returns 0 (all checks pass), 1 (check failure)
/// or 2 (usage or domain error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dqm::cli
