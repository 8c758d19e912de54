#pragma once

#include <dcp/graph.hpp>
#include <dcp/pebbling.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dcp {

inline constexpr std::size_t default_state_budget = 10'000'000;

enum class Verdict
{
    solvable,
    unsolvable,
    budget_exceeded
};

[[nodiscard]] auto to_string(Verdict v) -> std::string;

struct SolveResult
{
    Verdict verdict = Verdict::unsolvable;
    /// Present iff verdict == solvable.
    std::optional<Certificate> certificate;
    std::size_t states_explored = 0;

    [[nodiscard]] auto solvable() const -> bool { return verdict == Verdict::solvable; }
};

/// Grow-only table of solvability facts for one (graph, goal) pair. A
/// solvable entry remembers the first move of a winning line so certificates
/// can be rebuilt from it. Safe to share between threads.
class SolvabilityMemo
{
public:
    SolvabilityMemo();
    ~SolvabilityMemo();
    SolvabilityMemo(const SolvabilityMemo &) = delete;
    auto operator=(const SolvabilityMemo &) -> SolvabilityMemo & = delete;

    [[nodiscard]] auto size() const -> std::size_t;

    struct Imp;
    [[nodiscard]] auto imp() -> Imp & { return *_imp; }

private:
    std::unique_ptr<Imp> _imp;
};

struct SolveOptions
{
    std::size_t budget = default_state_budget;
    /// Optional table shared with other queries on the same graph and goal.
    SolvabilityMemo * shared_memo = nullptr;
};

/// Exhaustive depth-first search over the configurations reachable from c.
/// Returns solvable with a certificate, unsolvable, or budget_exceeded (never
/// conflated with unsolvable). Pebble counts above 255 on a vertex are rejected.
[[nodiscard]] auto is_solvable(const Graph & g, const Configuration & c, const GoalPredicate & goal,
    const SolveOptions & options = {}) -> SolveResult;

enum class ValueStatus
{
    exact,
    /// Unsolvable configurations remain at the cap; value is a lower bound.
    cap_reached,
    budget_exceeded
};

[[nodiscard]] auto to_string(ValueStatus s) -> std::string;

struct NumberReport
{
    ValueStatus status = ValueStatus::exact;
    long value = 0;
    /// An unsolvable configuration of size value - 1, when value > 0.
    std::optional<Configuration> witness;
    std::size_t states_explored = 0;
    std::size_t configurations_checked = 0;
};

struct ValueOptions
{
    /// Largest size scanned; 0 picks a default (the diameter bound for domination,
    /// the stacking bound otherwise).
    long cap = 0;
    /// Stored states allowed per query and, since queries share one memo,
    /// for the whole scan.
    std::size_t budget = default_state_budget;
    unsigned jobs = 1;
    /// Full automorphism group (e.g. from automorphisms()); when non-empty only
    /// orbit-minimal configurations are examined.
    std::vector<std::vector<Vertex>> symmetry;
    /// Search every configuration directly instead of using the one-pebble-less
    /// shortcut, and re-check the level after the answer. Slow; for cross-checks.
    bool paranoid = false;
};

/// Smallest k such that every size-k configuration satisfies goal after some
/// moves. Scans sizes upward, enumerating each level's multisets in
/// colexicographic order; the witness is the colex-last unsolvable
/// configuration of the final unsolvable level.
[[nodiscard]] auto pebbling_value(const Graph & g, const GoalPredicate & goal, const ValueOptions & options = {})
    -> NumberReport;

/// max over v of sum over u of 2^dist(u, v); the witness stacks value - 1
/// pebbles on the smallest maximising vertex.
[[nodiscard]] auto lambda_stacking(const Graph & g) -> NumberReport;

/// Colex-last unsolvable configuration of exactly k pebbles, if any. Throws
/// BudgetExceededError if a query runs out of states.
[[nodiscard]] auto max_unsolvable_witness(const Graph & g, const GoalPredicate & goal, long k,
    std::size_t budget = default_state_budget) -> std::optional<Configuration>;

/// All configurations of exactly k pebbles on n vertices, colexicographic order
/// of the underlying sorted multisets.
[[nodiscard]] auto configurations_of_size(int order, long k) -> std::vector<Configuration>;

/// Advances c to its colex successor among configurations of the same size;
/// false (and c unchanged) if c is the last one.
auto next_configuration_colex(Configuration & c) -> bool;

/// Default scan cap: psi bound for domination, 1 + (n - 1) 2^d otherwise.
[[nodiscard]] auto default_value_cap(const Graph & g, const GoalPredicate & goal) -> long;

}
