#include "support.hpp"

#include <dcp/errors.hpp>
#include <dcp/exact.hpp>
#include <dcp/families.hpp>
#include <dcp/graph_io.hpp>
#include <dcp/sweep.hpp>

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace dcp;
using dcp::testing::connected_graphs_up_to;

namespace {
auto lines_of(const std::vector<dcp::testing::Fixture> & fixtures, int diameter = 0) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (auto & f : fixtures)
        if (diameter == 0 || f.graph.diameter() == diameter)
            out.push_back(f.g6);
    return out;
}

// Splits one CSV line, honouring double-quoted fields.
auto csv_fields(const std::string & line) -> std::vector<std::string>
{
    std::vector<std::string> out{""};
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted && c == '"' && i + 1 < line.size() && line[i + 1] == '"')
            out.back() += line[++i];
        else if (c == '"')
            quoted = ! quoted;
        else if (c == ',' && ! quoted)
            out.emplace_back();
        else
            out.back() += c;
    }
    return out;
}

auto find(const SweepRecord & r, const std::string & name) -> const CheckOutcome *
{
    for (auto & c : r.checks)
        if (c.name == name)
            return &c;
    return nullptr;
}
}

TEST_CASE("sweep record for P4")
{
    SweepOptions options;
    options.omegas = {1};
    auto r = sweep_graph(generate(family::Path{4}), "Ch", options);
    CHECK(r.n == 4);
    CHECK(r.d == 3);
    CHECK(r.psi.value == 5);
    CHECK(r.lambda == 15);
    CHECK(r.omega.at(1).value == 2);
    CHECK(r.ratio() == std::pair{15L, 5L});
    REQUIRE(find(r, check::psi_bound));
    CHECK(find(r, check::psi_bound)->result == CheckResult::pass);
    CHECK(find(r, check::conj_ratio)->result == CheckResult::pass);
    CHECK_FALSE(find(r, check::ratio_diam2));
    CHECK_FALSE(find(r, check::omega_diam2 + "[1]"));
}

TEST_CASE("diameter-2 graphs of order <= 6 satisfy the bounds")
{
    SweepOptions options;
    options.omegas = {1};
    auto lines = lines_of(connected_graphs_up_to(6), 2);
    std::vector<SweepRecord> records;
    auto summary = run_sweep(lines, options, [&](const SweepRecord & r) { records.push_back(r); });
    REQUIRE(records.size() == lines.size());
    CHECK(summary.failures == 0);
    CHECK(summary.findings == 0);
    CHECK(summary.unknowns == 0);
    CHECK(summary.exit_code() == 0);
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto & r = records[i];
        CHECK(r.graph_id == lines[i]);
        CHECK(*r.psi.value <= r.n - 1);
        CHECK(*r.lambda >= 3 * *r.psi.value);
        CHECK(*r.omega.at(1).value <= r.n - 2);
    }
}

TEST_CASE("conjecture ratio on every connected graph of order <= 5")
{
    SweepOptions options;
    options.lambda = LambdaMethod::both;
    auto summary = run_sweep(lines_of(connected_graphs_up_to(5)), options, {});
    CHECK(summary.graphs == 1 + 1 + 2 + 6 + 21);
    CHECK(summary.failures == 0);
    CHECK(summary.findings == 0);
    REQUIRE(summary.min_ratio.has_value());
    CHECK(summary.min_ratio->first >= 3 * summary.min_ratio->second);
    // K2 is the tight case
    CHECK(summary.min_ratio == std::pair{3L, 1L});
    CHECK(summary.min_ratio_graph == "A_");
}

TEST_CASE("budget exhaustion is unknown, never pass or fail")
{
    SweepOptions options;
    options.budget = 1;
    options.omegas = {1};
    auto r = sweep_graph(generate(family::Path{5}), "DhC", options);
    CHECK(r.psi.status == ValueStatus::budget_exceeded);
    for (auto & c : r.checks)
        CHECK(c.result == CheckResult::unknown);
    SweepSummary s;
    s.add(r);
    CHECK(s.unknowns == 1);
    CHECK(s.exit_code() == 0);
}

TEST_CASE("failures and findings map to distinct exit codes")
{
    SweepRecord r;
    r.graph_id = "x";
    r.checks.push_back({check::conj_ratio, CheckResult::finding, std::nullopt});
    SweepSummary s;
    s.add(r);
    CHECK(s.exit_code() == 3);
    r.checks.push_back({check::psi_bound, CheckResult::fail, std::nullopt});
    s.add(r);
    CHECK(s.exit_code() == 2);
    CHECK(s.failing_graphs == std::vector<std::string>{"x"});
}

TEST_CASE("records come out in input order whatever the worker count")
{
    auto lines = lines_of(connected_graphs_up_to(5));
    SweepOptions options;
    options.omegas = {1, 2};
    std::vector<std::string> serial, parallel;
    run_sweep(lines, options, [&](const SweepRecord & r) { serial.push_back(csv_line(to_row(r, options))); });
    options.jobs = 4;
    run_sweep(lines, options, [&](const SweepRecord & r) { parallel.push_back(csv_line(to_row(r, options))); });
    CHECK(serial == parallel);
    for (std::size_t i = 0; i < lines.size(); ++i)
        CHECK(serial[i].substr(0, lines[i].size() + 1) == lines[i] + ",");
}

TEST_CASE("CSV and JSON carry the same fields")
{
    SweepOptions options;
    options.omegas = {1};
    options.lambda = LambdaMethod::both;
    auto r = sweep_graph(generate(family::Star{5}), "Ds_", options);
    auto row = to_row(r, options);
    auto j = nlohmann::json::parse(json_record(row));
    auto keys = csv_fields(csv_header(row));
    auto values = csv_fields(csv_line(row));
    REQUIRE(keys.size() == values.size());
    std::size_t fields = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        REQUIRE(j.contains(keys[i]));
        auto & field = j[keys[i]];
        std::string expected = field.is_null() ? "" : field.is_string() ? field.get<std::string>() : field.dump();
        CAPTURE(keys[i]);
        CHECK(expected == values[i]);
        ++fields;
    }
    CHECK(fields == j.size());
    CHECK(j["psi"] == 4);
    CHECK(j["lambda"] == 15);
    CHECK(j["lambda_oracle"] == 15);
    CHECK(j["ratio_num"] == 15);
    CHECK(j["ratio_den"] == 4);
    CHECK(j["witness"] == "0,0,1,1,1");
}

TEST_CASE("bad input lines are reported with their line number")
{
    SweepOptions options;
    CHECK_THROWS_AS(run_sweep({"A_", "A?"}, options, {}), DisconnectedGraphError);
    try {
        (void)run_sweep({"A_", "Bg", "!!"}, options, {});
    }
    catch (const ParseError & e) {
        CHECK(std::string{e.what()}.find("line 3") != std::string::npos);
    }
}

TEST_CASE("check selection and omega checks")
{
    SweepOptions options;
    options.omegas = {1, 2};
    options.checks = {check::omega_diam2};
    auto r = sweep_graph(generate(family::Wheel{6}), "F|eMG", options);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].name == "omega_diam2[1]");
    CHECK(r.checks[1].name == "omega_diam2[2]");
    CHECK(r.omega.at(1).value == 3);
    CHECK(r.omega.at(2).value == 2);

    options.checks = {check::conj_omega_diam3};
    r = sweep_graph(generate(family::Diameter3Construction{7, 1}), "", options);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].result == CheckResult::pass);
}

TEST_CASE("conjecture checks with an omega suffix are findings")
{
    CHECK(check::is_conjecture("conj_omega_diam3[2]"));
    CHECK(check::is_conjecture(check::conj_ratio));
    CHECK_FALSE(check::is_conjecture("omega_diam2[1]"));
}

TEST_CASE("five-cycle with a pendant exceeds the diameter-3 subversion bound")
{
    // values from the brute-force reference oracle
    auto g = parse_graph6("Ehd?");
    CHECK(g.diameter() == 3);
    CHECK(is_solvable(g, testing::config({0, 0, 0, 0, 0, 5}), GoalPredicate::subversion(1)).verdict ==
        Verdict::unsolvable);

    SweepOptions options;
    options.omegas = {1, 2};
    auto r = sweep_graph(g, "Ehd?", options);
    CHECK(r.omega.at(1).value == 6);
    CHECK(r.omega.at(2).value == 2);
    // floor(3 (6 - 2 - 1) / 2 + 1) = 5 < 6
    REQUIRE(find(r, check::conj_omega_diam3 + "[1]"));
    CHECK(find(r, check::conj_omega_diam3 + "[1]")->result == CheckResult::finding);
    CHECK(find(r, check::conj_omega_diam3 + "[2]")->result == CheckResult::pass);
    SweepSummary s;
    s.add(r);
    CHECK(s.failures == 0);
    CHECK(s.exit_code() == 3);
}
