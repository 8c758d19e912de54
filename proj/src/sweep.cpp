#include <dcp/errors.hpp>
#include <dcp/families.hpp>
#include <dcp/graph_io.hpp>
#include <dcp/sweep.hpp>

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace dcp {

using std::to_string;

auto check::all() -> std::set<string>
{
    return {psi_bound, ratio_diam2, lambda_match, omega_diam2, conj_ratio, conj_omega_diam3};
}

auto check::is_conjecture(const string & name) -> bool
{
    // per-omega checks carry a "[omega]" suffix
    const string base = name.substr(0, name.find('['));
    return base == conj_ratio || base == conj_omega_diam3;
}

auto to_string(CheckResult r) -> string
{
    switch (r) {
    case CheckResult::pass: return "pass";
    case CheckResult::fail: return "fail";
    case CheckResult::finding: return "finding";
    case CheckResult::unknown: return "unknown";
    }
    return "?";
}

auto SweepRecord::ratio() const -> optional<std::pair<long, long>>
{
    if (! lambda || ! psi.value || psi.status != ValueStatus::exact || *psi.value <= 0)
        return std::nullopt;
    return std::pair{*lambda, *psi.value};
}

auto SweepRecord::has(CheckResult r) const -> bool
{
    for (auto & c : checks)
        if (c.result == r)
            return true;
    return false;
}

namespace {
    auto compute(const Graph & g, const GoalPredicate & goal, const SweepOptions & options) -> QuantityResult
    {
        ValueOptions value_options;
        value_options.budget = options.budget;
        auto report = pebbling_value(g, goal, value_options);
        QuantityResult q;
        q.status = report.status;
        q.value = report.value;
        q.witness = report.witness;
        return q;
    }

    // A check that holds, fails, or cannot be decided because an input is unknown.
    auto decide(const string & name, bool known, bool holds, optional<Configuration> witness) -> CheckOutcome
    {
        CheckOutcome out{name, CheckResult::pass, std::nullopt};
        if (! known)
            out.result = CheckResult::unknown;
        else if (! holds) {
            out.result = check::is_conjecture(name) ? CheckResult::finding : CheckResult::fail;
            out.witness = std::move(witness);
        }
        return out;
    }
}

auto sweep_graph(const Graph & g, const string & graph_id, const SweepOptions & options) -> SweepRecord
{
    auto started = std::chrono::steady_clock::now();
    SweepRecord r;
    r.graph_id = graph_id;
    r.n = g.order();
    r.d = g.diameter();
    const auto wants = [&](const string & name) { return options.checks.contains(name); };

    r.psi = compute(g, GoalPredicate::domination(), options);
    if (options.lambda != LambdaMethod::oracle)
        r.lambda = lambda_stacking(g).value;
    if (options.lambda != LambdaMethod::stacking) {
        auto oracle = compute(g, GoalPredicate::full_cover(), options);
        if (oracle.status == ValueStatus::exact)
            r.lambda_oracle = oracle.value;
        if (options.lambda == LambdaMethod::oracle)
            r.lambda = r.lambda_oracle;
    }
    for (int omega : options.omegas)
        r.omega[omega] = compute(g, GoalPredicate::subversion(omega), options);

    const bool psi_known = r.psi.status == ValueStatus::exact;
    const long psi = r.psi.value.value_or(0);
    const int n = r.n, d = r.d;

    // Hitting the default cap (which is the bound itself) already shows psi > bound.
    if (wants(check::psi_bound) && n >= 2) {
        bool known = psi_known || r.psi.status == ValueStatus::cap_reached;
        r.checks.push_back(decide(check::psi_bound, known, psi_known && psi <= psi_upper_bound(n, d), r.psi.witness));
    }
    auto ratio = r.ratio();
    if (wants(check::ratio_diam2) && d == 2)
        r.checks.push_back(decide(check::ratio_diam2, ratio.has_value(),
            ratio && ratio->first >= 3 * ratio->second, r.psi.witness));
    if (wants(check::lambda_match) && options.lambda == LambdaMethod::both)
        r.checks.push_back(decide(check::lambda_match, r.lambda_oracle.has_value(),
            r.lambda_oracle == r.lambda, std::nullopt));
    if (wants(check::conj_ratio) && n >= 2)
        r.checks.push_back(decide(check::conj_ratio, ratio.has_value(),
            ratio && ratio->first >= 3 * ratio->second, r.psi.witness));

    for (auto & [omega, q] : r.omega) {
        const bool known = q.status == ValueStatus::exact;
        const long value = q.value.value_or(0);
        const string suffix = "[" + to_string(omega) + "]";
        if (wants(check::omega_diam2) && d == 2 && omega >= 1 && n >= omega + 2)
            r.checks.push_back(decide(check::omega_diam2 + suffix, known, value <= n - 1 - omega, q.witness));
        if (wants(check::conj_omega_diam3) && d == 3 && omega >= 1 && n >= omega + 3)
            r.checks.push_back(decide(check::conj_omega_diam3 + suffix, known,
                value <= (3L * (n - 2 - omega)) / 2 + 1, q.witness));
    }

    if (options.timing)
        r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return r;
}

void SweepSummary::add(const SweepRecord & r)
{
    ++graphs;
    bool failed = false, found = false, unknown = false;
    for (auto & c : r.checks) {
        failed = failed || c.result == CheckResult::fail;
        found = found || c.result == CheckResult::finding;
        unknown = unknown || c.result == CheckResult::unknown;
    }
    if (failed) {
        ++failures;
        failing_graphs.push_back(r.graph_id);
    }
    if (found) {
        ++findings;
        finding_graphs.push_back(r.graph_id);
    }
    unknowns += unknown;

    if (auto ratio = r.ratio(); ratio && r.n >= 2)
        if (! min_ratio || ratio->first * min_ratio->second < min_ratio->first * ratio->second) {
            min_ratio = ratio;
            min_ratio_graph = r.graph_id;
        }
}

auto SweepSummary::exit_code() const -> int
{
    if (failures > 0)
        return 2;
    if (findings > 0)
        return 3;
    return 0;
}

auto run_sweep(const vector<string> & graph6_lines, const SweepOptions & options,
    const std::function<void(const SweepRecord &)> & emit) -> SweepSummary
{
    // Parse everything first so a bad line fails before any work starts.
    vector<Graph> graphs;
    graphs.reserve(graph6_lines.size());
    for (std::size_t i = 0; i < graph6_lines.size(); ++i) {
        try {
            graphs.push_back(parse_graph6(graph6_lines[i]));
        }
        catch (const ParseError & e) {
            throw ParseError{"line " + to_string(i + 1) + ": " + e.what()};
        }
        catch (const DisconnectedGraphError & e) {
            throw DisconnectedGraphError{"line " + to_string(i + 1) + ": " + e.what()};
        }
    }

    SweepSummary summary;
    vector<optional<SweepRecord>> slots(graphs.size());
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i; (i = next++) < graphs.size();) {
            auto record = sweep_graph(graphs[i], graph6_lines[i], options);
            std::lock_guard lock{mutex};
            slots[i] = std::move(record);
            ready.notify_all();
        }
    };

    vector<std::jthread> pool;
    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs > 1)
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);

    // Sequencing stage: records leave in input order.
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (jobs == 1)
            slots[i] = sweep_graph(graphs[i], graph6_lines[i], options);
        SweepRecord record;
        {
            std::unique_lock lock{mutex};
            ready.wait(lock, [&] { return slots[i].has_value(); });
            record = std::move(*slots[i]);
            slots[i].reset();
        }
        summary.add(record);
        if (emit)
            emit(record);
    }
    return summary;
}

auto to_row(const SweepRecord & r, const SweepOptions & options) -> Row
{
    Row row;
    auto opt = [](const optional<long> & v) -> Field { return v ? Field{*v} : Field{}; };
    auto config = [](const optional<Configuration> & c) -> Field {
        return c ? Field{format_configuration(*c)} : Field{};
    };

    row.emplace_back("graph6", r.graph_id);
    row.emplace_back("n", long{r.n});
    row.emplace_back("d", long{r.d});
    row.emplace_back("psi", opt(r.psi.value));
    row.emplace_back("psi_status", to_string(r.psi.status));
    row.emplace_back("lambda", opt(r.lambda));
    if (options.lambda != LambdaMethod::stacking)
        row.emplace_back("lambda_oracle", opt(r.lambda_oracle));
    auto ratio = r.ratio();
    row.emplace_back("ratio_num", ratio ? Field{ratio->first} : Field{});
    row.emplace_back("ratio_den", ratio ? Field{ratio->second} : Field{});
    for (int omega : options.omegas) {
        auto it = r.omega.find(omega);
        const string key = "omega_" + to_string(omega);
        row.emplace_back(key, it == r.omega.end() ? Field{} : opt(it->second.value));
        row.emplace_back(key + "_status", it == r.omega.end() ? Field{} : Field{to_string(it->second.status)});
    }

    string checks, witnesses;
    for (auto & c : r.checks) {
        checks += (checks.empty() ? "" : ";") + c.name + "=" + to_string(c.result);
        if (c.witness)
            witnesses += (witnesses.empty() ? "" : ";") + c.name + "=" + format_configuration(*c.witness);
    }
    row.emplace_back("checks", checks);
    row.emplace_back("witness", config(r.psi.witness));
    row.emplace_back("check_witnesses", witnesses);
    if (options.timing)
        row.emplace_back("timing_ms", r.timing_ms ? Field{*r.timing_ms} : Field{});
    return row;
}

namespace {
    auto csv_escape(const string & s) -> string
    {
        if (s.find_first_of(",\"\n") == string::npos)
            return s;
        string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    auto field_text(const Field & f) -> string
    {
        return std::visit(
            [](const auto & v) -> string {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::monostate>)
                    return "";
                else if constexpr (std::is_same_v<T, string>)
                    return v;
                else if constexpr (std::is_same_v<T, double>)
                    return nlohmann::json(v).dump();
                else
                    return std::to_string(v);
            },
            f);
    }
}

auto csv_header(const Row & row) -> string
{
    string out;
    for (auto & [key, value] : row)
        out += (out.empty() ? "" : ",") + key;
    return out;
}

auto csv_line(const Row & row) -> string
{
    string out;
    bool first = true;
    for (auto & [key, value] : row) {
        out += (first ? "" : ",") + csv_escape(field_text(value));
        first = false;
    }
    return out;
}

auto json_record(const Row & row) -> string
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (auto & [key, value] : row)
        std::visit(
            [&](const auto & v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::monostate>)
                    j[key] = nullptr;
                else
                    j[key] = v;
            },
            value);
    return j.dump();
}

auto summary_json(const SweepSummary & s) -> string
{
    nlohmann::ordered_json j;
    j["graphs"] = s.graphs;
    j["failures"] = s.failures;
    j["findings"] = s.findings;
    j["unknowns"] = s.unknowns;
    if (s.min_ratio) {
        j["min_ratio"] = {s.min_ratio->first, s.min_ratio->second};
        j["min_ratio_graph"] = s.min_ratio_graph;
    }
    else
        j["min_ratio"] = nullptr;
    j["failing_graphs"] = s.failing_graphs;
    j["finding_graphs"] = s.finding_graphs;
    j["exit_code"] = s.exit_code();
    return j.dump();
}

}
