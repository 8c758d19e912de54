#include <dcp/constructive.hpp>
#include <dcp/errors.hpp>

#include <string>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace dcp {

namespace {
    void require(bool ok, const string & what)
    {
        if (! ok)
            throw PreconditionError{what};
    }

    void check_sized(const Graph & g, const Configuration & c)
    {
        require(c.order() == g.order(), "configuration has " + to_string(c.order()) + " entries for a graph of order " +
            to_string(g.order()));
    }

    // Applies moves to a running configuration and records them.
    class Mover
    {
    public:
        Mover(const Graph & g, const Configuration & c) :
            _g(g),
            _cert{c, {}},
            _current(c)
        {
        }

        void move(Vertex from, Vertex to)
        {
            _current = apply_move(_g, _current, {from, to});
            _cert.moves.push_back({from, to});
        }

        // Sends 2^(len-1) ... 1 pebbles down the path so that exactly one
        // arrives at the end; intermediate vertices end where they started.
        void cascade(const vector<Vertex> & path)
        {
            const int length = static_cast<int>(path.size()) - 1;
            for (int i = 0; i < length; ++i)
                for (long k = 0; k < (1L << (length - 1 - i)); ++k)
                    move(path[i], path[i + 1]);
        }

        [[nodiscard]] auto config() const -> const Configuration & { return _current; }
        [[nodiscard]] auto operator[](Vertex v) const -> int { return _current[v]; }
        [[nodiscard]] auto certificate() && -> Certificate { return std::move(_cert); }
        [[nodiscard]] auto certificate() const & -> const Certificate & { return _cert; }

    private:
        const Graph & _g;
        Certificate _cert;
        Configuration _current;
    };

    auto lowest_where(VertexSet candidates, auto && pred) -> optional<Vertex>
    {
        optional<Vertex> found;
        candidates.for_each([&](Vertex v) {
            if (! found && pred(v))
                found = v;
        });
        return found;
    }

    // The diameter-2 domination procedure, restricted to the vertices in
    // `active`. Only distances measured from covered vertices matter, so it
    // also runs on subgraphs that lost diameter two by deleting undominated
    // vertices.
    void dominate_diameter2(const Graph & g, Mover & mv, VertexSet active)
    {
        auto undominated = [&] { return active - dominated_vertices(g, mv.config().support()); };
        if (undominated().empty())
            return;

        const VertexSet s1 = mv.config().support();
        if (! s1.is_subset_of(active))
            throw InvariantViolation{0, "pebbles outside the active vertex set"};
        VertexSet s2;
        s1.for_each([&](Vertex v) { s2 |= g.neighbours(v); });
        s2 = (s2 & active) - s1;
        const VertexSet s3 = active - s1 - s2;
        const int a = s2.size(), b = s3.size();

        auto pairs_left = [&] {
            long pairs = 0;
            s1.for_each([&](Vertex v) { pairs += mv[v] / 2; });
            return pairs;
        };
        if (pairs_left() < std::min(a, b))
            throw InvariantViolation{0, "only " + to_string(pairs_left()) + " pebble pairs for min(a, b) = " +
                to_string(std::min(a, b))};

        auto common_neighbour = [&](Vertex x, Vertex y) {
            VertexSet both = g.neighbours(x) & g.neighbours(y) & active;
            if (both.empty())
                throw InvariantViolation{0, "vertices " + to_string(x) + " and " + to_string(y) +
                    " are more than two apart inside the active subgraph"};
            return both.front();
        };

        // Nearest source in S1 that still has a pair, lowest index among the nearest.
        auto dominate_from_nearest = [&](Vertex z) {
            auto adjacent = lowest_where(s1 & g.neighbours(z), [&](Vertex s) { return mv[s] >= 2; });
            if (adjacent) {
                mv.move(*adjacent, z);
                return;
            }
            auto distant = lowest_where(s1, [&](Vertex s) { return mv[s] >= 2; });
            if (! distant)
                throw InvariantViolation{0, "no pebble pair left to dominate vertex " + to_string(z)};
            mv.move(*distant, common_neighbour(*distant, z));
        };

        if (a <= b) {
            s2.for_each([&](Vertex v) {
                if (mv[v] != 0)
                    return;
                if (auto s = lowest_where(s1 & g.neighbours(v), [&](Vertex x) { return mv[x] >= 2; }))
                    mv.move(*s, v);
            });
            VertexSet left_over = s2 - mv.config().support();
            if (pairs_left() < left_over.size())
                throw InvariantViolation{0, "fewer pairs than uncovered S2 vertices"};
            left_over.for_each([&](Vertex z) {
                if (undominated().contains(z))
                    dominate_from_nearest(z);
            });
        }
        else {
            // Pairs from vertices with at least three pebbles go first.
            s3.for_each([&](Vertex v) {
                if (! undominated().contains(v))
                    return;
                auto w = lowest_where(s1, [&](Vertex x) { return mv[x] >= 3; });
                if (! w)
                    w = lowest_where(s1, [&](Vertex x) { return mv[x] >= 2; });
                if (! w)
                    throw InvariantViolation{0, "no pebble pair left for S3 vertex " + to_string(v)};
                mv.move(*w, common_neighbour(*w, v));
            });
            s2.for_each([&](Vertex u) {
                if (undominated().contains(u))
                    dominate_from_nearest(u);
            });
        }

        if (! undominated().empty())
            throw InvariantViolation{0, "diameter-2 procedure finished with undominated vertices"};
    }
}

auto partition_covered(const Graph & g, const Configuration & c) -> CoverPartition
{
    check_sized(g, c);
    CoverPartition p;
    p.s1 = c.support();
    p.s1.for_each([&](Vertex v) { p.s2 |= g.neighbours(v); });
    p.s2 -= p.s1;
    p.s3 = g.vertices() - p.s1 - p.s2;
    return p;
}

auto solve_diameter2(const Graph & g, const Configuration & c) -> Certificate
{
    check_sized(g, c);
    require(g.diameter() <= 2, "solve_diameter2 needs diameter <= 2, got " + to_string(g.diameter()));
    require(g.order() >= 2, "solve_diameter2 needs at least two vertices");
    require(c.size() >= g.order() - 1, "solve_diameter2 needs at least n - 1 = " + to_string(g.order() - 1) +
        " pebbles, got " + to_string(c.size()));
    Mover mv{g, c};
    dominate_diameter2(g, mv, g.vertices());
    return std::move(mv).certificate();
}

auto spread_threshold(const Graph & g) -> long
{
    const long n = g.order(), m = g.min_degree();
    return (4 * n - 2 * m - 3) / 3;
}

auto spread_diameter2(const Graph & g, const Configuration & c) -> Certificate
{
    check_sized(g, c);
    const int n = g.order(), m = g.min_degree();
    require(g.diameter() <= 2, "spread_diameter2 needs diameter <= 2, got " + to_string(g.diameter()));
    require(m > n / 2, "spread_diameter2 needs minimum degree > ceil((n-1)/2) = " + to_string(n / 2) + ", got " +
        to_string(m));
    require(c.size() >= spread_threshold(g), "spread_diameter2 needs at least floor((4n-2m-3)/3) = " +
        to_string(spread_threshold(g)) + " pebbles, got " + to_string(c.size()));

    Mover mv{g, c};
    for (;;) {
        optional<PebblingMove> next;
        for (Vertex v = 0; v < n && ! next; ++v) {
            if (mv[v] < 3)
                continue;
            if (auto w = lowest_where(g.neighbours(v), [&](Vertex x) { return mv[x] == 0; }))
                next = PebblingMove{v, *w};
        }
        if (! next)
            break;
        mv.move(next->from, next->to);
    }
    if (! satisfies(g, mv.config(), GoalPredicate::domination()))
        throw InvariantViolation{0, "spreading terminated without dominating"};
    return std::move(mv).certificate();
}

namespace {
    auto heavy_vertices(const Configuration & c, long clump) -> VertexSet
    {
        VertexSet b;
        for (Vertex v = 0; v < c.order(); ++v)
            if (c[v] >= clump + 1)
                b.insert(v);
        return b;
    }
}

auto first_violated_condition(const Graph & g, const SolverState & state, const SolverState & start,
    const Certificate & moves_so_far) -> int
{
    const int d = g.diameter();
    const long clump = 1L << (d - 2);
    const auto & cp = state.cp;

    bool one = true;
    (state.c | state.d).for_each([&](Vertex v) { one = one && cp[v] == 0; });
    state.a.for_each([&](Vertex v) { one = one && cp[v] > 0; });
    if (! one)
        return 1;
    if (clumping_number(cp, d) < clump * (state.c.size() - 1))
        return 2;
    if (state.c.size() > start.c.size() - state.step)
        return 3;
    if (state.b != heavy_vertices(cp, clump))
        return 4;
    if (! state.d.empty()) {
        if (! state.b.empty() && g.dist(state.b, state.d) != d)
            return 5;
        bool far_vertex = false;
        g.vertices().for_each([&](Vertex v) { far_vertex = far_vertex || g.dist(v, state.d) == d; });
        if (! far_vertex)
            return 5;
    }
    if (! (state.a & state.c).empty() || ! (state.a & state.d).empty() || ! (state.c & state.d).empty() ||
        (state.a | state.c | state.d) != g.vertices())
        return 6;
    if (! state.d.is_subset_of(dominated_vertices(g, cp.support())))
        return 7;
    auto replayed = replay(g, moves_so_far);
    if (! replayed.legal || replayed.final != cp || moves_so_far.initial != start.cp)
        return 8;
    return 0;
}

auto solve_diameter_d(const Graph & g, const Configuration & c, bool check_invariants, const SolverObserver & observer)
    -> Certificate
{
    check_sized(g, c);
    const int n = g.order(), d = g.diameter();
    require(d >= 3, "solve_diameter_d needs diameter >= 3, got " + to_string(d));
    const long clump = 1L << (d - 2);
    const long threshold = clump * (n - 2) + 1;
    require(c.size() >= threshold, "solve_diameter_d needs at least 2^(d-2)(n-2)+1 = " + to_string(threshold) +
        " pebbles, got " + to_string(c.size()));

    Mover mv{g, c};
    SolverState state{c, c.support(), heavy_vertices(c, clump), g.vertices() - c.support(), VertexSet{}, 0};
    const SolverState start = state;

    auto checkpoint = [&] {
        if (check_invariants)
            if (int bad = first_violated_condition(g, state, start, mv.certificate()))
                throw InvariantViolation{bad, "diameter-d solver broke condition " + to_string(bad) + " at step " +
                    to_string(state.step)};
        if (observer)
            observer(state);
    };
    checkpoint();

    for (;;) {
        const VertexSet undominated = g.vertices() - dominated_vertices(g, state.cp.support());
        if ((undominated & state.c).empty())
            break;
        if (state.c.size() < 2)
            throw InvariantViolation{0, "undominated vertex left with |C| < 2"};
        if (state.b.empty())
            throw InvariantViolation{0, "undominated vertex left with no vertex of more than 2^(d-2) pebbles"};

        if (g.dist(state.b, state.c) <= d - 2) {
            // Case 1: a heavy vertex within d-2 of C covers it directly.
            Vertex source = -1, target = -1;
            state.b.for_each([&](Vertex v) {
                if (source >= 0)
                    return;
                if (auto w = lowest_where(state.c, [&](Vertex x) { return g.dist(v, x) <= d - 2; })) {
                    source = v;
                    target = *w;
                }
            });
            mv.cascade(g.shortest_path(source, target));
            state.a.insert(target);
            state.c.erase(target);
        }
        else {
            // Case 2: every undominated vertex of C is exactly d from B.
            const Vertex far = (undominated & state.c).front();
            if (g.dist(far, state.b) != d)
                throw InvariantViolation{0, "undominated vertex " + to_string(far) + " at distance " +
                    to_string(g.dist(far, state.b)) + " from B, expected " + to_string(d)};
            const Vertex source = state.b.front();
            const auto path = g.shortest_path(source, far);
            const Vertex relay = path[d - 2], landing = path[d - 1];
            if (! state.a.contains(relay) || state.b.contains(relay) || ! state.c.contains(landing))
                throw InvariantViolation{0, "relay/landing vertices outside their expected sets"};

            mv.cascade(vector<Vertex>(path.begin(), path.begin() + d - 1));
            mv.move(relay, landing);

            state.d.insert(far);
            state.a.insert(landing);
            state.c.erase(far).erase(landing);
            if (mv[relay] == 0) {
                state.a.erase(relay);
                state.c.insert(relay);
            }
        }
        state.cp = mv.config();
        state.b = heavy_vertices(state.cp, clump);
        ++state.step;
        checkpoint();
    }

    if (! satisfies(g, mv.config(), GoalPredicate::domination()))
        throw InvariantViolation{0, "diameter-d solver stopped without dominating"};
    return std::move(mv).certificate();
}

auto solve_subversion_diameter2(const Graph & g, const Configuration & c, int omega) -> Certificate
{
    check_sized(g, c);
    require(g.diameter() <= 2, "solve_subversion_diameter2 needs diameter <= 2, got " + to_string(g.diameter()));
    require(omega >= 1, "solve_subversion_diameter2 needs omega >= 1");
    // At n = omega + 1 the bound n - 1 - omega = 0 is false: no pebbles leave omega + 1 connected vertices.
    require(g.order() >= omega + 2, "solve_subversion_diameter2 needs n >= omega + 2, got n = " +
        to_string(g.order()));
    require(c.size() >= g.order() - 1L - omega, "solve_subversion_diameter2 needs at least n - 1 - omega = " +
        to_string(g.order() - 1L - omega) + " pebbles, got " + to_string(c.size()));

    Mover mv{g, c};
    const VertexSet undominated = g.vertices() - dominated_vertices(g, c.support());
    if (undominated.size() <= omega)
        return std::move(mv).certificate();

    VertexSet set_aside;
    for (Vertex v : undominated.members())
        if (set_aside.size() < omega)
            set_aside.insert(v);
    dominate_diameter2(g, mv, g.vertices() - set_aside);

    const int left = (g.vertices() - dominated_vertices(g, mv.config().support())).size();
    if (left > omega)
        throw InvariantViolation{0, to_string(left) + " vertices left undominated, omega = " + to_string(omega)};
    return std::move(mv).certificate();
}

auto verify_certificate(const Graph & g, const Certificate & cert, const GoalPredicate & goal) -> VerifyResult
{
    VerifyResult result;
    if (cert.initial.order() != g.order()) {
        result.reason = "initial configuration has the wrong length";
        return result;
    }
    auto replayed = replay(g, cert);
    if (! replayed.legal) {
        result.failed_step = replayed.failed_step;
        result.reason = "illegal move at step " + to_string(*replayed.failed_step);
        return result;
    }
    if (! satisfies(g, replayed.final, goal)) {
        result.reason = "final configuration does not satisfy " + goal.name();
        return result;
    }
    result.ok = true;
    return result;
}

}
