#pragma once

#include <dcp/graph.hpp>
#include <dcp/pebbling.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dcp {

/// Named graph families and the extremal constructions. Every generator fixes
/// its vertex labelling so named vertices resolve to stable indices:
///
///   Path(n), Cycle(n), Complete(n)  0..n-1 in order (cycle closes n-1 -> 0)
///   Star(n)                         order n; centre 0, leaves 1..n-1
///   Wheel(n)                        hub 0 joined to the cycle 1..n; order n + 1
///   CompleteMultipartite(parts)     parts laid out consecutively from 0
///   BinaryTree(h)                   heap order: root 0, children 2i+1 and 2i+2
///   Figure3(m, d)                   w_1..w_m = 0..m-1, v_1..v_m = m..2m-1,
///                                   u_1..u_{d-1} = 2m..2m+d-2
///   SubversionStar(n, omega)        H_n: Star(n) plus a path through the
///                                   last omega+1 leaves n-1-omega..n-1
///   Diameter3Construction(n, omega) K_{omega+1} = 0..omega, apex omega+1,
///                                   clique H next, then tendrils; tendril i
///                                   hangs off the i-th H vertex
namespace family {
    struct Path { int n; };
    struct Cycle { int n; };
    struct Complete { int n; };
    struct Star { int n; };
    struct Wheel { int n; };
    struct CompleteMultipartite { std::vector<int> parts; };
    struct BinaryTree { int height; };
    struct Figure3 { int m; int d; };
    struct SubversionStar { int n; int omega; };
    struct Diameter3Construction { int n; int omega; };
}

using FamilySpec = std::variant<family::Path, family::Cycle, family::Complete, family::Star, family::Wheel,
    family::CompleteMultipartite, family::BinaryTree, family::Figure3, family::SubversionStar,
    family::Diameter3Construction>;

/// Builds the graph and asserts its expected diameter. Throws PreconditionError
/// for parameters out of range.
[[nodiscard]] auto generate(const FamilySpec & spec) -> Graph;

[[nodiscard]] auto describe(const FamilySpec & spec) -> std::string;

/// Index helpers for the documented labelling.
namespace figure3 {
    [[nodiscard]] auto order(int m, int d) -> int;
    [[nodiscard]] inline auto w(int m, int i) -> Vertex { (void)m; return i - 1; }
    [[nodiscard]] inline auto v(int m, int i) -> Vertex { return m + i - 1; }
    [[nodiscard]] inline auto u(int m, int i) -> Vertex { return 2 * m + i - 1; }
}

namespace diameter3 {
    [[nodiscard]] inline auto apex(int omega) -> Vertex { return omega + 1; }
    [[nodiscard]] inline auto clique_order(int n, int omega) -> int { return (n - omega - 1) / 2; }
    [[nodiscard]] inline auto tendril_count(int n, int omega) -> int { return (n - omega - 2) / 2; }
    [[nodiscard]] inline auto h_vertex(int omega, int i) -> Vertex { return omega + 2 + i; }
    [[nodiscard]] inline auto tendril(int n, int omega, int i) -> Vertex { return omega + 2 + clique_order(n, omega) + i; }
}

/// n - 1 for diameter at most 2, else 2^(d-2) (n - 2) + 1.
[[nodiscard]] auto psi_upper_bound(int n, int d) -> long;

struct LowerBoundWitness
{
    long bound;
    /// bound - 1 pebbles on u_{d-1}.
    Configuration witness;
};

/// 2^(d-1) m, with the stacked witness on u_{d-1} of Figure3(m, d).
[[nodiscard]] auto figure3_psi_lower_bound(int m, int d) -> LowerBoundWitness;

/// Stacking sum at u_{d-1} on the graph as drawn: 3m 2^(d-1) + 2^(d-1) - 1.
[[nodiscard]] auto figure3_lambda_at_tail(int m, int d) -> long;

/// Closed-form omega-subversion numbers: 1 for complete and complete
/// multipartite graphs, n - 2 - omega for Wheel(n). Throws PreconditionError
/// where no formula is claimed.
[[nodiscard]] auto omega_formula(const FamilySpec & spec, int omega) -> long;

struct SubversionBounds
{
    long diam2_upper;
    /// Conjectural; always report as such.
    long diam3_conjectured_upper;
};

/// (n - 1 - omega, floor(3 (n - 2 - omega) / 2 + 1)); needs omega >= 1 and n >= omega + 3.
[[nodiscard]] auto subversion_bounds(int n, int omega) -> SubversionBounds;

/// Three pebbles on each tendril, plus one on the tendril-less H vertex when
/// n - omega - 2 is odd; total floor(3 (n - 2 - omega) / 2).
[[nodiscard]] auto diameter3_witness_config(int n, int omega) -> Configuration;

/// Random connected graph: a uniformly random labelled tree (Pruefer code)
/// plus each remaining pair independently with probability extra_edge_p.
[[nodiscard]] auto random_connected_graph(int n, double extra_edge_p, std::uint64_t seed) -> Graph;

}
