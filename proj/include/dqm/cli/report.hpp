#pragma once

// Report envelope shared by all CLI commands, with deterministic JSON and CSV output.

#include <json.hpp>

#include <string>
#include <vector>

namespace dqm::cli {

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

struct ReportEnvelope {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<std::string> columns;  ///< CSV column order for rows
    std::vector<nlohmann::json> rows;
    std::vector<Check> checks;
    int exit_status = 0;

    /// Passes when value <= tolerance and value is finite.
    void add_check(const std::string& name, double value, double tolerance);
    void add_check(const std::string& name, double value, double tolerance, bool pass);
    /// exit_status = 0 iff every check passes, else 1.
    void finalize();
    [[nodiscard]] bool all_pass() const;
};

/// Single JSON object, keys sorted, floating values as %.17g, non-finite as null.
std::string to_json(const ReportEnvelope& report);

/// Header plus one line per row (or per check when there are no rows).
std::string to_csv(const ReportEnvelope& report);

/// Inverse of to_json.
ReportEnvelope from_json(const std::string& text);

/// %.17g with a guaranteed '.' decimal separator.
std::string format_double(double value);

}  // namespace dqm::cli
