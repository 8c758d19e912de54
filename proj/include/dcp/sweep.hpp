#pragma once

#include <dcp/exact.hpp>
#include <dcp/graph.hpp>
#include <dcp/pebbling.hpp>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace dcp {

enum class LambdaMethod
{
    stacking,
    oracle,
    both
};

/// Named checks a sweep can run. Theorems fail the sweep when violated;
/// conjectures only produce findings.
namespace check {
    inline const std::string psi_bound = "psi_bound";               // theorem: diameter bound on psi
    inline const std::string ratio_diam2 = "ratio_diam2";           // theorem: lambda >= 3 psi at diameter 2
    inline const std::string lambda_match = "lambda_match";         // stacking == brute force (LambdaMethod::both)
    inline const std::string omega_diam2 = "omega_diam2";           // theorem: Omega <= n-1-omega at diameter 2
    inline const std::string conj_ratio = "conj_ratio";             // conjecture: lambda >= 3 psi, n >= 2
    inline const std::string conj_omega_diam3 = "conj_omega_diam3"; // conjecture: diameter-3 subversion bound

    [[nodiscard]] auto all() -> std::set<std::string>;
    [[nodiscard]] auto is_conjecture(const std::string & name) -> bool;
}

struct SweepOptions
{
    LambdaMethod lambda = LambdaMethod::stacking;
    std::vector<int> omegas;
    std::set<std::string> checks = check::all();
    std::size_t budget = default_state_budget;
    unsigned jobs = 1;
    bool timing = false;
};

enum class CheckResult
{
    pass,
    fail,
    finding,
    unknown
};

[[nodiscard]] auto to_string(CheckResult r) -> std::string;

struct CheckOutcome
{
    std::string name;
    CheckResult result = CheckResult::pass;
    /// Unsolvable configuration backing a fail or finding, when one exists.
    std::optional<Configuration> witness;
};

struct QuantityResult
{
    std::optional<long> value;
    ValueStatus status = ValueStatus::exact;
    std::optional<Configuration> witness;
};

struct SweepRecord
{
    std::string graph_id;
    int n = 0;
    int d = 0;
    QuantityResult psi;
    std::optional<long> lambda;
    std::optional<long> lambda_oracle;
    std::map<int, QuantityResult> omega;
    std::vector<CheckOutcome> checks;
    std::optional<double> timing_ms;

    /// lambda / psi with denominator psi, when both are known.
    [[nodiscard]] auto ratio() const -> std::optional<std::pair<long, long>>;
    [[nodiscard]] auto has(CheckResult r) const -> bool;
};

[[nodiscard]] auto sweep_graph(const Graph & g, const std::string & graph_id, const SweepOptions & options)
    -> SweepRecord;

struct SweepSummary
{
    long graphs = 0;
    long failures = 0;
    long findings = 0;
    long unknowns = 0;
    std::optional<std::pair<long, long>> min_ratio;
    std::string min_ratio_graph;
    std::vector<std::string> failing_graphs;
    std::vector<std::string> finding_graphs;

    void add(const SweepRecord & r);
    /// 2 on any theorem failure, else 3 on any finding, else 0.
    [[nodiscard]] auto exit_code() const -> int;
};

/// Sweeps graph6 lines with a worker pool; emit sees records in input order.
auto run_sweep(const std::vector<std::string> & graph6_lines, const SweepOptions & options,
    const std::function<void(const SweepRecord &)> & emit) -> SweepSummary;

/// One flat row per record. CSV and JSON renderings are built from the same rows.
using Field = std::variant<std::monostate, long, double, std::string>;
using Row = std::vector<std::pair<std::string, Field>>;

[[nodiscard]] auto to_row(const SweepRecord & r, const SweepOptions & options) -> Row;
[[nodiscard]] auto csv_header(const Row & row) -> std::string;
[[nodiscard]] auto csv_line(const Row & row) -> std::string;
[[nodiscard]] auto json_record(const Row & row) -> std::string;
[[nodiscard]] auto summary_json(const SweepSummary & s) -> std::string;

}
