#include <dcp/errors.hpp>
#include <dcp/graph.hpp>

#include <algorithm>
#include <limits>
#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace dcp {

namespace {
    constexpr std::uint8_t unreachable = std::numeric_limits<std::uint8_t>::max();
}

auto VertexSet::members() const -> vector<Vertex>
{
    vector<Vertex> result;
    result.reserve(size());
    for_each([&](Vertex v) { result.push_back(v); });
    return result;
}

auto build_graph(int order, std::span<const Edge> edges) -> Graph
{
    if (order < 1 || order > max_order)
        throw PreconditionError{"graph order " + to_string(order) + " outside 1.." + to_string(max_order)};

    Graph g;
    g._order = order;
    g._neighbours.assign(order, VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw PreconditionError{"edge " + to_string(u) + "-" + to_string(v) + " out of range for order " + to_string(order)};
        if (u == v)
            throw PreconditionError{"self loop at vertex " + to_string(u)};
        g._neighbours[u].insert(v);
        g._neighbours[v].insert(u);
    }

    // BFS from every vertex, frontier at a time on bitmasks.
    g._dist.assign(static_cast<std::size_t>(order) * order, unreachable);
    int diameter = 0;
    for (Vertex s = 0; s < order; ++s) {
        VertexSet seen = VertexSet::single(s), frontier = seen;
        int level = 0;
        while (! frontier.empty()) {
            frontier.for_each([&](Vertex v) { g._dist[s * order + v] = static_cast<std::uint8_t>(level); });
            VertexSet next;
            frontier.for_each([&](Vertex v) { next |= g._neighbours[v]; });
            frontier = next - seen;
            seen |= next;
            ++level;
        }
        if (seen.size() != order)
            throw DisconnectedGraphError{"graph is not connected (vertex " + to_string(s) + " reaches " +
                to_string(seen.size()) + " of " + to_string(order) + " vertices)"};
        diameter = std::max(diameter, level - 1);
    }
    g._diameter = diameter;
    return g;
}

auto Graph::min_degree() const -> int
{
    int result = _order;
    for (Vertex v = 0; v < _order; ++v)
        result = std::min(result, degree(v));
    return result;
}

auto Graph::dist(Vertex v, VertexSet ws) const -> int
{
    int best = -1;
    ws.for_each([&](Vertex w) {
        if (best < 0 || dist(v, w) < best)
            best = dist(v, w);
    });
    return best;
}

auto Graph::dist(VertexSet vs, VertexSet ws) const -> int
{
    int best = -1;
    vs.for_each([&](Vertex v) {
        int d = dist(v, ws);
        if (d >= 0 && (best < 0 || d < best))
            best = d;
    });
    return best;
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    for (Vertex u = 0; u < _order; ++u)
        (_neighbours[u] - VertexSet::all(u + 1)).for_each([&](Vertex v) { result.emplace_back(u, v); });
    return result;
}

auto Graph::edge_count() const -> int
{
    int twice = 0;
    for (auto & n : _neighbours)
        twice += n.size();
    return twice / 2;
}

auto Graph::shortest_path(Vertex from, Vertex to) const -> vector<Vertex>
{
    vector<Vertex> path{from};
    for (Vertex at = from; at != to;) {
        int remaining = dist(at, to);
        Vertex next = -1;
        _neighbours[at].for_each([&](Vertex w) {
            if (next < 0 && dist(w, to) == remaining - 1)
                next = w;
        });
        path.push_back(next);
        at = next;
    }
    return path;
}

auto Graph::induced(VertexSet keep) const -> std::pair<Graph, vector<Vertex>>
{
    vector<Vertex> old_of_new = keep.members();
    vector<Vertex> new_of_old(_order, -1);
    for (std::size_t i = 0; i < old_of_new.size(); ++i)
        new_of_old[old_of_new[i]] = static_cast<Vertex>(i);

    vector<Edge> sub_edges;
    for (auto [u, v] : edges())
        if (keep.contains(u) && keep.contains(v))
            sub_edges.emplace_back(new_of_old[u], new_of_old[v]);
    return {build_graph(static_cast<int>(old_of_new.size()), sub_edges), old_of_new};
}

auto Graph::relabelled(std::span<const Vertex> perm) const -> Graph
{
    if (static_cast<int>(perm.size()) != _order)
        throw PreconditionError{"relabelling has wrong length"};
    vector<Edge> mapped;
    for (auto [u, v] : edges())
        mapped.emplace_back(perm[u], perm[v]);
    return build_graph(_order, mapped);
}

auto dominated_vertices(const Graph & g, VertexSet covered) -> VertexSet
{
    VertexSet result = covered;
    covered.for_each([&](Vertex v) { result |= g.neighbours(v); });
    return result;
}

namespace {
    template <typename F>
    void for_each_component(const Graph & g, VertexSet region, F && f)
    {
        while (! region.empty()) {
            VertexSet component = VertexSet::single(region.front()), frontier = component;
            while (! frontier.empty()) {
                VertexSet next;
                frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
                frontier = (next & region) - component;
                component |= frontier;
            }
            f(component);
            region -= component;
        }
    }
}

auto undominated_components(const Graph & g, VertexSet covered) -> vector<int>
{
    vector<int> sizes;
    for_each_component(g, g.vertices() - dominated_vertices(g, covered),
        [&](VertexSet component) { sizes.push_back(component.size()); });
    return sizes;
}

auto largest_undominated_component(const Graph & g, VertexSet covered) -> int
{
    int largest = 0;
    for_each_component(g, g.vertices() - dominated_vertices(g, covered),
        [&](VertexSet component) { largest = std::max(largest, component.size()); });
    return largest;
}

auto automorphisms(const Graph & g) -> vector<vector<Vertex>>
{
    const int n = g.order();
    vector<vector<Vertex>> result;
    vector<Vertex> image(n, -1);
    VertexSet used;

    auto extend = [&](auto & self, Vertex v) -> void {
        if (v == n) {
            result.push_back(image);
            return;
        }
        for (Vertex w = 0; w < n; ++w) {
            if (used.contains(w) || g.degree(w) != g.degree(v))
                continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                ok = g.adjacent(u, v) == g.adjacent(image[u], w);
            if (! ok)
                continue;
            image[v] = w;
            used.insert(w);
            self(self, v + 1);
            used.erase(w);
        }
        image[v] = -1;
    };
    extend(extend, 0);
    return result;
}

}
