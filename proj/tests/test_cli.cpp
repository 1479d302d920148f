#include "dqm/cli/commands.hpp"
#include "dqm/cli/report.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace dqm::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<const char*> args)
{
    args.insert(args.begin(), "dqm");
    std::ostringstream out, err;
    const int code = run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("envelope checks and exit status")
{
    ReportEnvelope r;
    r.command = "test";
    r.add_check("a", 1e-13, 1e-12);
    r.finalize();
    CHECK(r.exit_status == 0);
    CHECK(r.all_pass());
    r.add_check("b", 1.0, 1e-12);
    r.finalize();
    CHECK(r.exit_status == 1);
    ReportEnvelope n;
    n.add_check("nan", std::numeric_limits<double>::quiet_NaN(), 1.0);
    CHECK_FALSE(n.checks[0].pass);
}

TEST_CASE("JSON round trip")
{
    ReportEnvelope r;
    r.command = "tabulate";
    r.parameters = {{"N", 8}, {"p", 0.1}};
    r.columns = {"n", "x", "value"};
    r.rows.push_back({{"n", 0}, {"x", 1}, {"value", 0.1 + 0.2}});
    r.rows.push_back({{"n", 1}, {"x", 2}, {"value", -1.0 / 3.0}});
    r.add_check("orthonormality", 3.3e-16, 1e-11);
    r.finalize();
    const std::string text = to_json(r);
    const ReportEnvelope back = from_json(text);
    CHECK(back.command == r.command);
    CHECK(back.parameters == r.parameters);
    CHECK(back.columns == r.columns);
    REQUIRE(back.rows.size() == 2);
    CHECK(back.rows[0]["value"].get<double>() == 0.1 + 0.2);
    CHECK(back.rows[1]["value"].get<double>() == -1.0 / 3.0);
    REQUIRE(back.checks.size() == 1);
    CHECK(back.checks[0].value == 3.3e-16);
    CHECK(back.checks[0].pass);
    CHECK(back.exit_status == 0);
    CHECK(to_json(back) == text);
    // Keys are emitted in sorted order.
    CHECK(text.find("\"checks\"") < text.find("\"command\""));
    CHECK(text.find("\"command\"") < text.find("\"parameters\""));
}

TEST_CASE("number formatting")
{
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    ReportEnvelope r;
    r.add_check("inf", std::numeric_limits<double>::infinity(), 1.0);
    CHECK(to_json(r).find("null") != std::string::npos);
}

TEST_CASE("CSV output")
{
    ReportEnvelope r;
    r.columns = {"n", "value"};
    r.rows.push_back({{"n", 0}, {"value", 0.25}});
    const std::string csv = to_csv(r);
    CHECK(csv.rfind("n,value\n", 0) == 0);
    CHECK(csv.find("0,0.25\n") != std::string::npos);
    ReportEnvelope c;
    c.add_check("x", 0.5, 1.0);
    CHECK(to_csv(c).find("name") != std::string::npos);
}

TEST_CASE("verify suites")
{
    const auto su2 = cmd_verify("su2", Tolerances{}, 4);
    CHECK(su2.exit_status == 0);
    CHECK_FALSE(su2.checks.empty());
    const auto wig = cmd_verify("wigner", Tolerances{});
    CHECK(wig.exit_status == 0);
    Tolerances tight;
    tight.override_value = 1e-30;
    CHECK(cmd_verify("kravchuk", tight).exit_status == 1);
    CHECK_THROWS_AS(cmd_verify("bogus", Tolerances{}), UsageError);
    CHECK(Tolerances{0.1, std::nullopt}(1e-10) == doctest::Approx(1e-11));
}

TEST_CASE("command line exit codes")
{
    CHECK(invoke({"verify", "su2", "--twice-j", "4"}).code == 0);
    CHECK(invoke({"verify", "kravchuk", "--tolerance", "1e-30"}).code == 1);
    CHECK(invoke({"verify", "bogus"}).code == 2);
    CHECK(invoke({"--format", "xml", "verify", "su2"}).code == 2);
    CHECK(invoke({"tabulate", "kravchuk", "--N", "8", "--n", "3..1"}).code == 2);
    CHECK(invoke({"converge", "meixner-laguerre", "--h", "1e-1,1e-2"}).code == 2);
    CHECK(invoke({"converge", "kravchuk-hermite", "--N", "1024,256,4096"}).code == 2);
    CHECK(invoke({"oscillator", "--twice-j", "4", "--n", "9"}).code == 2);
    const auto bad_l = invoke({"hydrogen", "--nu", "1", "--l", "1"});
    CHECK(bad_l.code == 2);
    CHECK(bad_l.err.find("degeneracy") != std::string::npos);
    CHECK(invoke({}).code == 2);
}

TEST_CASE("command outputs")
{
    const auto tab = invoke({"--format", "json", "tabulate", "kravchuk", "--N", "8", "--p", "0.5", "--n", "0..3"});
    REQUIRE(tab.code == 0);
    const auto env = from_json(tab.out);
    CHECK(env.rows.size() == 36);

    const auto csv = invoke({"--format", "csv", "tabulate", "wigner", "--twice-j", "1", "--beta", "1.0472"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.find("0.8660") != std::string::npos);

    const auto hyd = from_json(invoke({"--format", "json", "hydrogen", "--Z", "1", "--nu", "2", "--l", "0", "--h", "1e-3"}).out);
    bool found = false;
    for (const auto& row : hyd.rows)
        if (row.value("quantity", "") == "energy") {
            CHECK(row["value"].get<double>() == -0.125);
            found = true;
        }
    CHECK(found);

    const auto osc = from_json(invoke({"--format", "json", "oscillator", "--twice-j", "4", "--n", "1"}).out);
    CHECK(osc.exit_status == 0);
    bool unc = false;
    for (const auto& row : osc.rows)
        if (row.contains("uncertainty") && row["n"].get<int>() == 1) {
            CHECK(row["uncertainty"].get<double>() == doctest::Approx(1.25).epsilon(1e-14));
            unc = true;
        }
    CHECK(unc);
}

TEST_CASE("JSON output is byte stable")
{
    const auto a = invoke({"--format", "json", "verify", "wigner"});
    const auto b = invoke({"--format", "json", "verify", "wigner"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
