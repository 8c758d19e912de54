#include <dcp/constructive.hpp>
#include <dcp/errors.hpp>
#include <dcp/exact.hpp>
#include <dcp/families.hpp>
#include <dcp/graph_io.hpp>
#include <dcp/sweep.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::ordered_json;
using std::string;
using std::vector;
using namespace dcp;

namespace {

namespace exit_code {
    constexpr int ok = 0;
    constexpr int negative = 1; // unsolvable, failed verification, or usage error
    constexpr int failure = 2;
    constexpr int finding = 3;
    constexpr int parse_error = 4;
    constexpr int budget_exceeded = 5;
    constexpr int precondition = 6;
}

struct Input
{
    string graph_file;
    string g6;
};

struct NamedGraph
{
    string id;
    Graph graph;
};

auto read_file(const string & path) -> string
{
    std::ifstream in{path};
    if (! in)
        throw ParseError{"cannot open " + path};
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto graph6_lines(const Input & input) -> vector<string>
{
    if (! input.g6.empty())
        return {input.g6};
    if (input.graph_file.empty())
        return read_graph6_lines(std::cin);
    if (format_for_path(input.graph_file) == GraphFormat::edge_list)
        return {emit_graph6(parse_edge_list(read_file(input.graph_file)))};
    std::ifstream in{input.graph_file};
    if (! in)
        throw ParseError{"cannot open " + input.graph_file};
    return read_graph6_lines(in);
}

auto read_graphs(const Input & input) -> vector<NamedGraph>
{
    vector<NamedGraph> out;
    for (auto & line : graph6_lines(input)) {
        auto g = parse_graph6(line);
        out.push_back({emit_graph6(g), std::move(g)});
    }
    if (out.empty())
        throw ParseError{"no graph given"};
    return out;
}

auto single_graph(const Input & input) -> NamedGraph
{
    auto graphs = read_graphs(input);
    if (graphs.size() != 1)
        throw ParseError{"expected exactly one graph, got " + std::to_string(graphs.size())};
    return std::move(graphs.front());
}

auto goal_of(const string & name, int omega) -> GoalPredicate
{
    if (name == "dcp")
        return GoalPredicate::domination();
    if (name == "cover")
        return GoalPredicate::full_cover();
    return GoalPredicate::subversion(omega);
}

void add_input_flags(CLI::App * cmd, Input & input)
{
    cmd->add_option("--graph", input.graph_file, "graph6 file, or edge list (.txt .el .edges .edgelist)");
    cmd->add_option("--g6", input.g6, "a single graph6 string");
}

void add_goal_flags(CLI::App * cmd, string & goal, int & omega)
{
    cmd->add_option("--goal", goal, "dcp, cover or subversion")->check(CLI::IsMember({"dcp", "cover", "subversion"}));
    cmd->add_option("--omega", omega, "largest undominated component allowed by --goal subversion")
        ->check(CLI::NonNegativeNumber);
}

auto report_json(const NamedGraph & ng, const GoalPredicate & goal, const NumberReport & r) -> ordered_json
{
    ordered_json j;
    j["graph6"] = ng.id;
    j["n"] = ng.graph.order();
    j["d"] = ng.graph.diameter();
    j["goal"] = goal.name();
    j["value"] = r.value;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness ? ordered_json(format_configuration(*r.witness)) : ordered_json(nullptr);
    j["states_explored"] = r.states_explored;
    j["configurations_checked"] = r.configurations_checked;
    return j;
}

struct ComputeArgs
{
    Input input;
    string goal = "dcp";
    int omega = 0;
    string method = "oracle";
    string format = "text";
    long cap = 0;
    std::size_t budget = default_state_budget;
    unsigned jobs = 1;
    bool symmetry = false;
    bool paranoid = false;
};

auto run_compute(const ComputeArgs & a) -> int
{
    const auto goal = goal_of(a.goal, a.omega);
    int code = exit_code::ok;
    for (auto & ng : read_graphs(a.input)) {
        NumberReport r;
        if (goal.kind() == GoalPredicate::Kind::full_cover && a.method == "stacking")
            r = lambda_stacking(ng.graph);
        else {
            ValueOptions options;
            options.cap = a.cap;
            options.budget = a.budget;
            options.jobs = a.jobs;
            options.paranoid = a.paranoid;
            if (a.symmetry)
                options.symmetry = automorphisms(ng.graph);
            r = pebbling_value(ng.graph, goal, options);
        }
        if (r.status != ValueStatus::exact)
            code = exit_code::budget_exceeded;

        if (a.format == "json")
            std::cout << report_json(ng, goal, r).dump() << "\n";
        else {
            std::cout << ng.id << "  n=" << ng.graph.order() << " d=" << ng.graph.diameter() << "\n"
                      << "  " << goal.name() << ": " << r.value << " (" << to_string(r.status) << ")\n"
                      << "  witness: " << (r.witness ? format_configuration(*r.witness) : "none") << "\n"
                      << "  states explored: " << r.states_explored << "\n";
        }
    }
    return code;
}

struct SolveArgs
{
    Input input;
    string config;
    string algorithm = "oracle";
    string goal = "dcp";
    int omega = 0;
    std::size_t budget = default_state_budget;
    bool no_invariants = false;
    string output;
};

auto run_solve(const SolveArgs & a) -> int
{
    auto ng = single_graph(a.input);
    const auto & g = ng.graph;
    const auto c = parse_configuration(a.config);
    if (c.order() != g.order())
        throw PreconditionError{"configuration has " + std::to_string(c.order()) + " entries for a graph of order " +
            std::to_string(g.order())};

    GoalPredicate goal = GoalPredicate::domination();
    std::optional<Certificate> cert;
    ordered_json j;
    j["graph6"] = ng.id;
    j["algorithm"] = a.algorithm;
    j["configuration"] = format_configuration(c);

    if (a.algorithm == "oracle") {
        goal = goal_of(a.goal, a.omega);
        auto result = is_solvable(g, c, goal, {.budget = a.budget});
        j["goal"] = goal.name();
        j["verdict"] = to_string(result.verdict);
        j["states_explored"] = result.states_explored;
        if (! result.solvable()) {
            std::cout << j.dump() << "\n";
            return result.verdict == Verdict::budget_exceeded ? exit_code::budget_exceeded : exit_code::negative;
        }
        cert = std::move(result.certificate);
    }
    else {
        if (a.algorithm == "diam2")
            cert = solve_diameter2(g, c);
        else if (a.algorithm == "spread")
            cert = spread_diameter2(g, c);
        else if (a.algorithm == "diamd")
            cert = solve_diameter_d(g, c, ! a.no_invariants);
        else {
            goal = GoalPredicate::subversion(a.omega);
            cert = solve_subversion_diameter2(g, c, a.omega);
        }
        j["goal"] = goal.name();
        j["verdict"] = to_string(Verdict::solvable);
    }

    auto verdict = verify_certificate(g, *cert, goal);
    j["verified"] = verdict.ok;
    if (! verdict.ok)
        j["verify_reason"] = verdict.reason;
    j["moves"] = cert->moves.size();
    j["certificate"] = ordered_json::parse(certificate_to_json(*cert));
    std::cout << j.dump() << "\n";
    if (! a.output.empty()) {
        std::ofstream out{a.output};
        out << certificate_to_json(*cert) << "\n";
    }
    return verdict.ok ? exit_code::ok : exit_code::failure;
}

struct VerifyArgs
{
    Input input;
    string certificate;
    string goal = "dcp";
    int omega = 0;
};

auto run_verify(const VerifyArgs & a) -> int
{
    auto ng = single_graph(a.input);
    string text;
    if (a.certificate == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    }
    else
        text = read_file(a.certificate);
    auto cert = certificate_from_json(text);
    const auto goal = goal_of(a.goal, a.omega);
    if (cert.initial.order() != ng.graph.order())
        throw PreconditionError{"certificate is for order " + std::to_string(cert.initial.order()) +
            ", graph has order " + std::to_string(ng.graph.order())};
    auto result = verify_certificate(ng.graph, cert, goal);

    ordered_json j;
    j["graph6"] = ng.id;
    j["goal"] = goal.name();
    j["ok"] = result.ok;
    j["failed_step"] = result.failed_step ? ordered_json(*result.failed_step) : ordered_json(nullptr);
    j["reason"] = result.reason;
    std::cout << j.dump() << "\n";
    return result.ok ? exit_code::ok : exit_code::negative;
}

struct SweepArgs
{
    Input input;
    vector<int> omegas;
    vector<string> checks;
    string lambda = "stacking";
    string format = "csv";
    std::size_t budget = default_state_budget;
    unsigned jobs = 1;
    bool timing = false;
};

auto run_sweep_command(const SweepArgs & a) -> int
{
    SweepOptions options;
    options.omegas = a.omegas;
    options.budget = a.budget;
    options.jobs = a.jobs;
    options.timing = a.timing;
    options.lambda = a.lambda == "oracle" ? LambdaMethod::oracle
        : a.lambda == "both"              ? LambdaMethod::both
                                          : LambdaMethod::stacking;
    if (! a.checks.empty())
        options.checks = {a.checks.begin(), a.checks.end()};

    const auto lines = graph6_lines(a.input);
    bool first = true;
    if (a.format == "csv")
        std::cout << csv_header(to_row(SweepRecord{}, options)) << "\n";
    else
        std::cout << "{\"records\":[";

    auto summary = run_sweep(lines, options, [&](const SweepRecord & r) {
        auto row = to_row(r, options);
        if (a.format == "csv")
            std::cout << csv_line(row) << "\n";
        else
            std::cout << (first ? "\n" : ",\n") << json_record(row);
        std::cout.flush();
        first = false;
    });

    if (a.format == "json")
        std::cout << "\n],\"summary\":" << summary_json(summary) << "}\n";
    std::cerr << "summary: " << summary_json(summary) << "\n";
    return summary.exit_code();
}

struct FamilyArgs
{
    string kind;
    int n = 0;
    int m = 1;
    int d = 3;
    int omega = 1;
    int height = 2;
    vector<int> parts;
    double p = 0.3;
    std::uint64_t seed = 1;
    int count = 1;
    string emit = "g6";
};

auto family_spec(const FamilyArgs & a) -> FamilySpec
{
    if (a.kind == "path")
        return family::Path{a.n};
    if (a.kind == "cycle")
        return family::Cycle{a.n};
    if (a.kind == "complete")
        return family::Complete{a.n};
    if (a.kind == "star")
        return family::Star{a.n};
    if (a.kind == "wheel")
        return family::Wheel{a.n};
    if (a.kind == "multipartite")
        return family::CompleteMultipartite{a.parts};
    if (a.kind == "bintree")
        return family::BinaryTree{a.height};
    if (a.kind == "figure3")
        return family::Figure3{a.m, a.d};
    if (a.kind == "hstar")
        return family::SubversionStar{a.n, a.omega};
    return family::Diameter3Construction{a.n, a.omega};
}

auto run_family(const FamilyArgs & a) -> int
{
    vector<Graph> graphs;
    if (a.kind == "random")
        for (int i = 0; i < a.count; ++i)
            graphs.push_back(random_connected_graph(a.n, a.p, a.seed + i));
    else
        graphs.push_back(generate(family_spec(a)));
    for (auto & g : graphs)
        std::cout << (a.emit == "edges" ? emit_edge_list(g) : emit_graph6(g) + "\n");
    return exit_code::ok;
}

}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Domination cover pebbling: exact values, constructive solvers and bound sweeps"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto * compute_cmd = app.add_subcommand("compute", "exact psi, lambda or Omega_omega of each input graph");
    add_input_flags(compute_cmd, compute.input);
    add_goal_flags(compute_cmd, compute.goal, compute.omega);
    compute_cmd->add_option("--method", compute.method, "for --goal cover: oracle or stacking")
        ->check(CLI::IsMember({"oracle", "stacking"}));
    compute_cmd->add_option("--format", compute.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    compute_cmd->add_option("--cap", compute.cap, "largest size to scan (0 = default bound)");
    compute_cmd->add_option("--budget", compute.budget, "stored states per solvability query");
    compute_cmd->add_option("--jobs", compute.jobs, "worker threads")->check(CLI::PositiveNumber);
    compute_cmd->add_flag("--symmetry", compute.symmetry, "skip configurations equivalent under automorphisms");
    compute_cmd->add_flag("--paranoid", compute.paranoid, "no shortcuts; re-check the level above the answer");

    SolveArgs solve;
    auto * solve_cmd = app.add_subcommand("solve", "solve one configuration and verify the certificate");
    add_input_flags(solve_cmd, solve.input);
    add_goal_flags(solve_cmd, solve.goal, solve.omega);
    solve_cmd->add_option("--config", solve.config, "pebble counts, e.g. 5,0,0,0")->required();
    solve_cmd->add_option("--algorithm", solve.algorithm, "oracle, diam2, diamd, subversion or spread")
        ->check(CLI::IsMember({"oracle", "diam2", "diamd", "subversion", "spread"}));
    solve_cmd->add_option("--budget", solve.budget, "stored states for the oracle");
    solve_cmd->add_flag("--no-check-invariants", solve.no_invariants, "diamd: skip per-step condition checks");
    solve_cmd->add_option("--output", solve.output, "also write the certificate JSON here");

    VerifyArgs verify;
    auto * verify_cmd = app.add_subcommand("verify", "replay a certificate and test its goal");
    add_input_flags(verify_cmd, verify.input);
    add_goal_flags(verify_cmd, verify.goal, verify.omega);
    verify_cmd->add_option("--certificate", verify.certificate, "certificate JSON file, - for stdin")->required();

    SweepArgs sweep;
    auto * sweep_cmd = app.add_subcommand("sweep", "check every bound on a stream of graphs");
    add_input_flags(sweep_cmd, sweep.input);
    sweep_cmd->add_option("--omega", sweep.omegas, "omega values, comma separated")->delimiter(',');
    sweep_cmd->add_option("--checks", sweep.checks, "subset of checks, comma separated")
        ->delimiter(',')
        ->check(CLI::IsMember(check::all()));
    sweep_cmd->add_option("--lambda", sweep.lambda, "stacking, oracle or both")
        ->check(CLI::IsMember({"stacking", "oracle", "both"}));
    sweep_cmd->add_option("--format", sweep.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--budget", sweep.budget, "stored states per solvability query");
    sweep_cmd->add_option("--jobs", sweep.jobs, "graphs processed in parallel")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--timing", sweep.timing, "add wall-clock milliseconds (not deterministic)");

    FamilyArgs fam;
    auto * family_cmd = app.add_subcommand("family", "emit a named graph");
    family_cmd
        ->add_option("--kind", fam.kind,
            "path, cycle, complete, star, wheel, multipartite, bintree, figure3, hstar, diam3 or random")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "star", "wheel", "multipartite", "bintree", "figure3",
            "hstar", "diam3", "random"}));
    family_cmd->add_option("--n", fam.n, "order (wheel: rim size)");
    family_cmd->add_option("--m", fam.m, "figure3 clique size");
    family_cmd->add_option("--d", fam.d, "figure3 diameter");
    family_cmd->add_option("--omega", fam.omega, "hstar and diam3 omega");
    family_cmd->add_option("--height", fam.height, "bintree height");
    family_cmd->add_option("--parts", fam.parts, "multipartite part sizes, comma separated")->delimiter(',');
    family_cmd->add_option("--p", fam.p, "random: probability of each extra edge");
    family_cmd->add_option("--seed", fam.seed, "random: seed of the first graph");
    family_cmd->add_option("--count", fam.count, "random: number of graphs");
    family_cmd->add_option("--emit", fam.emit, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? exit_code::ok : exit_code::negative;
    }

    try {
        if (*compute_cmd)
            return run_compute(compute);
        if (*solve_cmd)
            return run_solve(solve);
        if (*verify_cmd)
            return run_verify(verify);
        if (*sweep_cmd)
            return run_sweep_command(sweep);
        return run_family(fam);
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_code::parse_error;
    }
    catch (const DisconnectedGraphError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_code::parse_error;
    }
    catch (const BudgetExceededError & e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_code::budget_exceeded;
    }
    catch (const PreconditionError & e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return exit_code::precondition;
    }
    catch (const InvariantViolation & e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return exit_code::failure;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::negative;
    }
}
