#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcp {

using Vertex = int;

/// Largest supported order; vertex sets are single 64-bit words.
inline constexpr int max_order = 64;

/// A subset of 0..n-1 stored as a bitmask.
class VertexSet
{
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}

    static constexpr auto all(int order) -> VertexSet
    {
        return VertexSet{order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1};
    }

    static constexpr auto single(Vertex v) -> VertexSet { return VertexSet{std::uint64_t{1} << v}; }

    [[nodiscard]] constexpr auto bits() const -> std::uint64_t { return _bits; }
    [[nodiscard]] constexpr auto contains(Vertex v) const -> bool { return (_bits >> v) & 1U; }
    [[nodiscard]] constexpr auto empty() const -> bool { return _bits == 0; }
    [[nodiscard]] constexpr auto size() const -> int { return std::popcount(_bits); }

    /// Lowest member; undefined on the empty set.
    [[nodiscard]] constexpr auto front() const -> Vertex { return std::countr_zero(_bits); }

    constexpr auto insert(Vertex v) -> VertexSet &
    {
        _bits |= std::uint64_t{1} << v;
        return *this;
    }

    constexpr auto erase(Vertex v) -> VertexSet &
    {
        _bits &= ~(std::uint64_t{1} << v);
        return *this;
    }

    [[nodiscard]] constexpr auto is_subset_of(VertexSet other) const -> bool { return (_bits & ~other._bits) == 0; }

    friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits | b._bits}; }
    friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & b._bits}; }
    /// Set difference.
    friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & ~b._bits}; }
    constexpr auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
    constexpr auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
    constexpr auto operator-=(VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }
    friend constexpr auto operator==(VertexSet, VertexSet) -> bool = default;

    /// Members in ascending order.
    [[nodiscard]] auto members() const -> std::vector<Vertex>;

    /// Calls f(v) for each member, ascending.
    template <typename F>
    constexpr void for_each(F && f) const
    {
        for (auto rest = _bits; rest != 0; rest &= rest - 1)
            f(static_cast<Vertex>(std::countr_zero(rest)));
    }

private:
    std::uint64_t _bits = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Simple, undirected, connected graph with an eager all-pairs distance table.
/// Immutable once built.
class Graph
{
public:
    [[nodiscard]] auto order() const -> int { return _order; }
    [[nodiscard]] auto diameter() const -> int { return _diameter; }

    [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return _neighbours[u].contains(v); }
    [[nodiscard]] auto neighbours(Vertex v) const -> VertexSet { return _neighbours[v]; }
    [[nodiscard]] auto closed_neighbourhood(Vertex v) const -> VertexSet { return _neighbours[v] | VertexSet::single(v); }
    [[nodiscard]] auto degree(Vertex v) const -> int { return _neighbours[v].size(); }
    [[nodiscard]] auto min_degree() const -> int;
    [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::all(_order); }

    [[nodiscard]] auto dist(Vertex u, Vertex v) const -> int { return _dist[u * _order + v]; }
    /// min over w in ws of dist(v, w); -1 if ws is empty.
    [[nodiscard]] auto dist(Vertex v, VertexSet ws) const -> int;
    /// min over pairs; -1 if either set is empty.
    [[nodiscard]] auto dist(VertexSet vs, VertexSet ws) const -> int;

    /// Edges (u < v), sorted.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;
    [[nodiscard]] auto edge_count() const -> int;

    /// Shortest u-v path with the lexicographically smallest vertex sequence.
    [[nodiscard]] auto shortest_path(Vertex from, Vertex to) const -> std::vector<Vertex>;

    /// Subgraph induced by keep, relabelled to 0..|keep|-1 in ascending order.
    /// Returns the graph and the old index of each new vertex. Throws if the
    /// induced subgraph is disconnected.
    [[nodiscard]] auto induced(VertexSet keep) const -> std::pair<Graph, std::vector<Vertex>>;

    /// Graph obtained by sending vertex v to perm[v].
    [[nodiscard]] auto relabelled(std::span<const Vertex> perm) const -> Graph;

    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a._order == b._order && a._neighbours == b._neighbours;
    }

    friend auto build_graph(int order, std::span<const Edge> edges) -> Graph;

private:
    Graph() = default;

    int _order = 0;
    int _diameter = 0;
    std::vector<VertexSet> _neighbours;
    std::vector<std::uint8_t> _dist;
};

/// Builds a graph, collapsing duplicate edges. Throws PreconditionError for
/// self loops, out-of-range endpoints or order outside 1..max_order, and
/// DisconnectedGraphError if the result is not connected.
[[nodiscard]] auto build_graph(int order, std::span<const Edge> edges) -> Graph;

[[nodiscard]] inline auto build_graph(int order, std::initializer_list<Edge> edges) -> Graph
{
    return build_graph(order, std::span<const Edge>{edges.begin(), edges.size()});
}

/// Closed neighbourhood of covered: every vertex in covered or adjacent to it.
[[nodiscard]] auto dominated_vertices(const Graph & g, VertexSet covered) -> VertexSet;

/// Orders of the connected components of the subgraph induced by the vertices
/// that covered does not dominate, in order of their lowest vertex.
[[nodiscard]] auto undominated_components(const Graph & g, VertexSet covered) -> std::vector<int>;

/// Size of the largest undominated component (0 if everything is dominated).
[[nodiscard]] auto largest_undominated_component(const Graph & g, VertexSet covered) -> int;

/// All automorphisms of g by backtracking over degree-compatible images.
/// Intended for desk-scale graphs; the identity is always first.
[[nodiscard]] auto automorphisms(const Graph & g) -> std::vector<std::vector<Vertex>>;

}
