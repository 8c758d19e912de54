#pragma once

#include <dcp/graph.hpp>
#include <dcp/pebbling.hpp>

#include <functional>
#include <optional>
#include <string>

namespace dcp {

/// Covered vertices, their uncovered neighbours, and everything else.
struct CoverPartition
{
    VertexSet s1;
    VertexSet s2;
    VertexSet s3;

    [[nodiscard]] auto a() const -> int { return s2.size(); }
    [[nodiscard]] auto b() const -> int { return s3.size(); }
};

[[nodiscard]] auto partition_covered(const Graph & g, const Configuration & c) -> CoverPartition;

/// Moves n-1 (or more) pebbles on a graph of diameter at most 2 until the
/// covered vertices dominate. Empty certificate if c already dominates.
/// Throws PreconditionError if diameter > 2, n < 2 or |c| < n - 1, and
/// InvariantViolation if the pair accounting ever comes up short.
[[nodiscard]] auto solve_diameter2(const Graph & g, const Configuration & c) -> Certificate;

/// Greedy spreading for diameter-2 graphs of large minimum degree m: while a
/// vertex with at least three pebbles has an empty neighbour, send a pebble
/// there (lowest source, then lowest target). Requires m > ceil((n-1)/2) and
/// |c| >= floor((4n - 2m - 3) / 3).
[[nodiscard]] auto spread_diameter2(const Graph & g, const Configuration & c) -> Certificate;

/// Smallest size spread_diameter2 accepts on g.
[[nodiscard]] auto spread_threshold(const Graph & g) -> long;

/// Bookkeeping of the diameter-d solver after `step` iterations.
struct SolverState
{
    Configuration cp;
    VertexSet a;
    VertexSet b;
    VertexSet c;
    VertexSet d;
    int step = 0;
};

/// Checks the eight solver conditions against g, returning the number of the
/// first one that fails (0 if all hold). Condition 8 replays `moves_so_far`
/// from `initial` and compares with state.cp.
[[nodiscard]] auto first_violated_condition(const Graph & g, const SolverState & state, const SolverState & start,
    const Certificate & moves_so_far) -> int;

using SolverObserver = std::function<void(const SolverState &)>;

/// Clump-moving solver for diameter d >= 3 and |c| >= 2^(d-2) (n - 2) + 1.
/// With check_invariants, all eight conditions are asserted after every
/// iteration (InvariantViolation carries the failing condition number).
[[nodiscard]] auto solve_diameter_d(const Graph & g, const Configuration & c, bool check_invariants = true,
    const SolverObserver & observer = {}) -> Certificate;

/// Reaches a configuration leaving at most omega vertices undominated, on a
/// graph of diameter at most 2 with |c| >= n - 1 - omega, omega >= 1 and n >= omega + 2.
/// If more than omega vertices are undominated, the omega lowest of them are
/// set aside and the diameter-2 procedure runs on the rest.
[[nodiscard]] auto solve_subversion_diameter2(const Graph & g, const Configuration & c, int omega) -> Certificate;

struct VerifyResult
{
    bool ok = false;
    /// First illegal move, if the replay broke.
    std::optional<std::size_t> failed_step;
    std::string reason;
};

[[nodiscard]] auto verify_certificate(const Graph & g, const Certificate & cert, const GoalPredicate & goal)
    -> VerifyResult;

}
