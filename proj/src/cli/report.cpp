#include "dqm/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dqm::cli {

using nlohmann::json;

void ReportEnvelope::add_check(const std::string& name, double value, double tolerance)
{
    add_check(name, value, tolerance, std::isfinite(value) && value <= tolerance);
}

void ReportEnvelope::add_check(const std::string& name, double value, double tolerance, bool pass)
{
    checks.push_back({name, value, tolerance, pass});
}

bool ReportEnvelope::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

void ReportEnvelope::finalize()
{
    exit_status = all_pass() ? 0 : 1;
}

std::string format_double(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    std::string s(buf);
    for (char& c : s)
        if (c == ',')
            c = '.';
    return s;
}

namespace {

void write(std::ostringstream& os, const json& j)
{
    switch (j.type()) {
    case json::value_t::object: {
        os << '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {  // std::map keeps keys sorted
            if (!first)
                os << ',';
            first = false;
            os << json(it.key()).dump() << ':';
            write(os, it.value());
        }
        os << '}';
        break;
    }
    case json::value_t::array: {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                os << ',';
            write(os, j[i]);
        }
        os << ']';
        break;
    }
    case json::value_t::number_float: {
        const double v = j.get<double>();
        os << (std::isfinite(v) ? format_double(v) : "null");
        break;
    }
    default:
        os << j.dump();
    }
}

json number_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json envelope_json(const ReportEnvelope& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"value", number_or_null(c.value)},
                          {"tolerance", number_or_null(c.tolerance)},
                          {"pass", c.pass}});
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(row);
    return {{"command", r.command},
            {"parameters", r.parameters},
            {"columns", r.columns},
            {"rows", rows},
            {"checks", checks},
            {"exit_status", r.exit_status}};
}

std::string csv_cell(const json& j)
{
    switch (j.type()) {
    case json::value_t::null: return "";
    case json::value_t::number_float: {
        const double v = j.get<double>();
        return std::isfinite(v) ? format_double(v) : "";
    }
    case json::value_t::string: {
        const auto s = j.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"')
                q += '"';
            q += c;
        }
        return q + '"';
    }
    case json::value_t::boolean: return j.get<bool>() ? "true" : "false";
    default: return j.dump();
    }
}

double number_from(const json& j)
{
    return j.is_null() ? std::nan("") : j.get<double>();
}

}  // namespace

std::string to_json(const ReportEnvelope& report)
{
    std::ostringstream os;
    write(os, envelope_json(report));
    os << '\n';
    return os.str();
}

std::string to_csv(const ReportEnvelope& report)
{
    std::ostringstream os;
    if (!report.rows.empty()) {
        for (std::size_t i = 0; i < report.columns.size(); ++i)
            os << (i ? "," : "") << report.columns[i];
        os << '\n';
        for (const auto& row : report.rows) {
            for (std::size_t i = 0; i < report.columns.size(); ++i) {
                const auto it = row.find(report.columns[i]);
                os << (i ? "," : "") << (it == row.end() ? std::string() : csv_cell(*it));
            }
            os << '\n';
        }
        return os.str();
    }
    os << "name,value,tolerance,pass\n";
    for (const auto& c : report.checks)
        os << csv_cell(json(c.name)) << ',' << csv_cell(json(c.value)) << ','
           << csv_cell(json(c.tolerance)) << ',' << (c.pass ? "true" : "false") << '\n';
    return os.str();
}

ReportEnvelope from_json(const std::string& text)
{
    const json j = json::parse(text);
    ReportEnvelope r;
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows"))
        r.rows.push_back(row);
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), number_from(c.at("value")),
                            number_from(c.at("tolerance")), c.at("pass").get<bool>()});
    r.exit_status = j.at("exit_status").get<int>();
    return r;
}

}  // namespace dqm::cli
