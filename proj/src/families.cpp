#include <dcp/errors.hpp>
#include <dcp/families.hpp>

#include <numeric>
#include <random>
#include <set>

using std::string;
using std::to_string;
using std::vector;

namespace dcp {

namespace {
    template <class... Ts>
    struct overloaded : Ts...
    {
        using Ts::operator()...;
    };

    void require(bool ok, const string & what)
    {
        if (! ok)
            throw PreconditionError{what};
    }

    void clique(vector<Edge> & edges, Vertex first, int count)
    {
        for (Vertex a = first; a < first + count; ++a)
            for (Vertex b = a + 1; b < first + count; ++b)
                edges.emplace_back(a, b);
    }

    auto expect_diameter(Graph g, int expected, const FamilySpec & spec) -> Graph
    {
        if (g.diameter() != expected)
            throw InvariantViolation{0, describe(spec) + " built with diameter " + to_string(g.diameter()) +
                ", expected " + to_string(expected)};
        return g;
    }
}

auto figure3::order(int m, int d) -> int { return 2 * m + d - 1; }

auto describe(const FamilySpec & spec) -> string
{
    return std::visit(overloaded{
        [](const family::Path & p) { return "P" + to_string(p.n); },
        [](const family::Cycle & c) { return "C" + to_string(c.n); },
        [](const family::Complete & k) { return "K" + to_string(k.n); },
        [](const family::Star & s) { return "K1," + to_string(s.n - 1); },
        [](const family::Wheel & w) { return "W" + to_string(w.n); },
        [](const family::CompleteMultipartite & k) {
            string name = "K";
            for (std::size_t i = 0; i < k.parts.size(); ++i)
                name += (i ? "," : "") + to_string(k.parts[i]);
            return name;
        },
        [](const family::BinaryTree & b) { return "B" + to_string(b.height); },
        [](const family::Figure3 & f) { return "figure3(m=" + to_string(f.m) + ",d=" + to_string(f.d) + ")"; },
        [](const family::SubversionStar & h) { return "H" + to_string(h.n) + "(omega=" + to_string(h.omega) + ")"; },
        [](const family::Diameter3Construction & c) {
            return "diam3(n=" + to_string(c.n) + ",omega=" + to_string(c.omega) + ")";
        }},
        spec);
}

auto generate(const FamilySpec & spec) -> Graph
{
    vector<Edge> edges;
    return std::visit(overloaded{
        [&](const family::Path & p) {
            require(p.n >= 1, "path needs n >= 1");
            for (Vertex i = 0; i + 1 < p.n; ++i)
                edges.emplace_back(i, i + 1);
            return expect_diameter(build_graph(p.n, edges), p.n - 1, spec);
        },
        [&](const family::Cycle & c) {
            require(c.n >= 3, "cycle needs n >= 3");
            for (Vertex i = 0; i < c.n; ++i)
                edges.emplace_back(i, (i + 1) % c.n);
            return expect_diameter(build_graph(c.n, edges), c.n / 2, spec);
        },
        [&](const family::Complete & k) {
            require(k.n >= 1, "complete graph needs n >= 1");
            clique(edges, 0, k.n);
            return expect_diameter(build_graph(k.n, edges), k.n > 1 ? 1 : 0, spec);
        },
        [&](const family::Star & s) {
            require(s.n >= 3, "star needs order >= 3");
            for (Vertex leaf = 1; leaf < s.n; ++leaf)
                edges.emplace_back(0, leaf);
            return expect_diameter(build_graph(s.n, edges), 2, spec);
        },
        [&](const family::Wheel & w) {
            require(w.n >= 3, "wheel needs a rim of at least 3 vertices");
            for (Vertex i = 1; i <= w.n; ++i) {
                edges.emplace_back(0, i);
                edges.emplace_back(i, i % w.n + 1);
            }
            return expect_diameter(build_graph(w.n + 1, edges), w.n == 3 ? 1 : 2, spec);
        },
        [&](const family::CompleteMultipartite & k) {
            require(k.parts.size() >= 2, "complete multipartite graph needs at least two parts");
            vector<int> start;
            int n = 0;
            for (int s : k.parts) {
                require(s >= 1, "every part needs at least one vertex");
                start.push_back(n);
                n += s;
            }
            for (std::size_t a = 0; a < k.parts.size(); ++a)
                for (std::size_t b = a + 1; b < k.parts.size(); ++b)
                    for (Vertex x = start[a]; x < start[a] + k.parts[a]; ++x)
                        for (Vertex y = start[b]; y < start[b] + k.parts[b]; ++y)
                            edges.emplace_back(x, y);
            bool all_singletons = std::all_of(k.parts.begin(), k.parts.end(), [](int s) { return s == 1; });
            return expect_diameter(build_graph(n, edges), all_singletons ? 1 : 2, spec);
        },
        [&](const family::BinaryTree & b) {
            require(b.height >= 1 && b.height <= 5, "binary tree height must be 1..5");
            const int n = (1 << (b.height + 1)) - 1;
            for (Vertex i = 1; i < n; ++i)
                edges.emplace_back((i - 1) / 2, i);
            return expect_diameter(build_graph(n, edges), 2 * b.height, spec);
        },
        [&](const family::Figure3 & f) {
            require(f.m >= 1 && f.d >= 3, "figure3 needs m >= 1 and d >= 3");
            const int m = f.m;
            clique(edges, figure3::v(m, 1), m);
            for (int i = 1; i <= m; ++i) {
                edges.emplace_back(figure3::w(m, i), figure3::v(m, i));
                edges.emplace_back(figure3::u(m, 1), figure3::v(m, i));
            }
            for (int i = 1; i + 1 <= f.d - 1; ++i)
                edges.emplace_back(figure3::u(m, i), figure3::u(m, i + 1));
            return expect_diameter(build_graph(figure3::order(m, f.d), edges), f.d, spec);
        },
        [&](const family::SubversionStar & h) {
            require(h.omega >= 0 && h.n >= h.omega + 3, "H_n needs omega >= 0 and n >= omega + 3");
            for (Vertex leaf = 1; leaf < h.n; ++leaf)
                edges.emplace_back(0, leaf);
            for (Vertex leaf = h.n - 1 - h.omega; leaf + 1 < h.n; ++leaf)
                edges.emplace_back(leaf, leaf + 1);
            return expect_diameter(build_graph(h.n, edges), 2, spec);
        },
        [&](const family::Diameter3Construction & c) {
            require(c.omega >= 0 && c.n >= c.omega + 3, "diameter-3 construction needs n >= omega + 3");
            const Vertex apex = diameter3::apex(c.omega);
            const int h = diameter3::clique_order(c.n, c.omega), t = diameter3::tendril_count(c.n, c.omega);
            clique(edges, 0, c.omega + 1);
            for (Vertex k = 0; k <= c.omega; ++k)
                edges.emplace_back(k, apex);
            clique(edges, diameter3::h_vertex(c.omega, 0), h);
            for (int i = 0; i < h; ++i)
                edges.emplace_back(apex, diameter3::h_vertex(c.omega, i));
            for (int i = 0; i < t; ++i)
                edges.emplace_back(diameter3::h_vertex(c.omega, i), diameter3::tendril(c.n, c.omega, i));
            // Without tendrils (n = omega + 3) nothing is three steps from the clique.
            return expect_diameter(build_graph(c.n, edges), t > 0 ? 3 : 2, spec);
        }},
        spec);
}

auto psi_upper_bound(int n, int d) -> long
{
    if (n < 2 || d < 1)
        throw PreconditionError{"psi_upper_bound needs n >= 2 and d >= 1"};
    if (d <= 2)
        return n - 1;
    return (1L << (d - 2)) * (n - 2) + 1;
}

auto figure3_psi_lower_bound(int m, int d) -> LowerBoundWitness
{
    require(m >= 1 && d >= 3, "figure3 bound needs m >= 1 and d >= 3");
    long bound = (1L << (d - 1)) * m;
    return {bound, Configuration::stacked(figure3::order(m, d), figure3::u(m, d - 1), static_cast<int>(bound - 1))};
}

auto figure3_lambda_at_tail(int m, int d) -> long
{
    require(m >= 1 && d >= 3, "figure3 needs m >= 1 and d >= 3");
    return 3L * m * (1L << (d - 1)) + (1L << (d - 1)) - 1;
}

auto omega_formula(const FamilySpec & spec, int omega) -> long
{
    return std::visit(overloaded{
        [&](const family::Complete & k) -> long {
            require(omega >= 0, "omega must be non-negative");
            // With n <= omega the empty configuration already qualifies.
            require(k.n > omega, "no formula when the whole graph has at most omega vertices");
            return 1;
        },
        [&](const family::CompleteMultipartite & k) -> long {
            require(omega >= 1, "multipartite formula needs omega >= 1");
            require(k.parts.size() >= 2, "multipartite formula needs at least two parts");
            require(std::accumulate(k.parts.begin(), k.parts.end(), 0) > omega,
                "no formula when the whole graph has at most omega vertices");
            return 1;
        },
        [&](const family::Wheel & w) -> long {
            require(omega >= 1 && w.n >= omega + 3, "wheel formula needs omega >= 1 and n >= omega + 3");
            return w.n - 2 - omega;
        },
        [&](const auto &) -> long { throw PreconditionError{"no closed form for " + describe(spec)}; }},
        spec);
}

auto subversion_bounds(int n, int omega) -> SubversionBounds
{
    require(omega >= 1 && n >= omega + 3, "subversion bounds need omega >= 1 and n >= omega + 3");
    return {n - 1L - omega, (3L * (n - 2 - omega)) / 2 + 1};
}

auto diameter3_witness_config(int n, int omega) -> Configuration
{
    require(omega >= 0 && n >= omega + 3, "witness needs n >= omega + 3");
    Configuration c{n};
    const int t = diameter3::tendril_count(n, omega);
    for (int i = 0; i < t; ++i)
        c.set(diameter3::tendril(n, omega, i), 3);
    if ((n - omega - 2) % 2 == 1)
        c.set(diameter3::h_vertex(omega, diameter3::clique_order(n, omega) - 1), 1);
    if (c.size() != (3L * (n - 2 - omega)) / 2)
        throw InvariantViolation{0, "diameter-3 witness size does not match floor(3(n-2-omega)/2)"};
    return c;
}

auto random_connected_graph(int n, double extra_edge_p, std::uint64_t seed) -> Graph
{
    require(n >= 1 && n <= max_order, "random graph order out of range");
    std::mt19937_64 rng{seed};
    std::set<Edge> edges;
    if (n == 2)
        edges.emplace(0, 1);
    else if (n > 2) {
        std::uniform_int_distribution<int> pick{0, n - 1};
        vector<int> code(n - 2), degree(n, 1);
        for (auto & x : code) {
            x = pick(rng);
            ++degree[x];
        }
        for (int x : code) {
            Vertex leaf = 0;
            while (degree[leaf] != 1)
                ++leaf;
            edges.emplace(std::min(leaf, x), std::max(leaf, x));
            --degree[leaf];
            --degree[x];
        }
        Vertex a = -1;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] == 1) {
                if (a < 0)
                    a = v;
                else
                    edges.emplace(a, v);
            }
    }
    std::bernoulli_distribution coin{extra_edge_p};
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng))
                edges.emplace(a, b);
    vector<Edge> list(edges.begin(), edges.end());
    return build_graph(n, list);
}

}
