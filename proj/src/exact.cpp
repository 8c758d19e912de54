#include <dcp/errors.hpp>
#include <dcp/exact.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace dcp {

using std::to_string;

auto to_string(Verdict v) -> string
{
    switch (v) {
    case Verdict::solvable: return "solvable";
    case Verdict::unsolvable: return "unsolvable";
    case Verdict::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

auto to_string(ValueStatus s) -> string
{
    switch (s) {
    case ValueStatus::exact: return "exact";
    case ValueStatus::cap_reached: return "cap_reached";
    case ValueStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

namespace {
    // Search states are byte strings of per-vertex counts: short enough to stay
    // in the small-string buffer for every graph we care about, and hashable as is.
    using State = string;

    constexpr std::uint16_t unsolvable_entry = 0xFFFF;

    auto encode_move(PebblingMove m) -> std::uint16_t { return static_cast<std::uint16_t>(m.from * max_order + m.to); }
    auto decode_move(std::uint16_t e) -> PebblingMove { return {e / max_order, e % max_order}; }

    auto to_state(const Configuration & c) -> State
    {
        State s(c.order(), '\0');
        for (Vertex v = 0; v < c.order(); ++v) {
            if (c[v] > 255)
                throw PreconditionError{"exact search supports at most 255 pebbles per vertex"};
            s[v] = static_cast<char>(c[v]);
        }
        return s;
    }

    auto count(const State & s, Vertex v) -> int { return static_cast<unsigned char>(s[v]); }

    auto to_configuration(const State & s) -> Configuration
    {
        vector<int> counts(s.size());
        for (size_t v = 0; v < s.size(); ++v)
            counts[v] = count(s, static_cast<Vertex>(v));
        return Configuration{std::move(counts)};
    }

    auto support_of(const State & s) -> VertexSet
    {
        VertexSet support;
        for (size_t v = 0; v < s.size(); ++v)
            if (s[v] != 0)
                support.insert(static_cast<Vertex>(v));
        return support;
    }

    // colex successor of the sorted multiset behind s: the lowest occupied
    // vertex v0 with multiplicity r sends one pebble to v0 + 1 and the other
    // r - 1 back to vertex 0.
    auto colex_next(State & s) -> bool
    {
        const int n = static_cast<int>(s.size());
        int v0 = 0;
        while (v0 < n && s[v0] == 0)
            ++v0;
        if (v0 >= n - 1)
            return false;
        int r = count(s, v0);
        s[v0] = 0;
        s[v0 + 1] = static_cast<char>(count(s, v0 + 1) + 1);
        s[0] = static_cast<char>(count(s, 0) + r - 1);
        return true;
    }
}

struct SolvabilityMemo::Imp
{
    static constexpr size_t shard_count = 64;

    struct Shard
    {
        std::mutex mutex;
        std::unordered_map<State, std::uint16_t> entries;
    };

    std::array<Shard, shard_count> shards;

    auto shard_for(const State & s) -> Shard & { return shards[std::hash<State>{}(s) % shard_count]; }

    auto find(const State & s) -> optional<std::uint16_t>
    {
        auto & shard = shard_for(s);
        std::lock_guard lock{shard.mutex};
        auto it = shard.entries.find(s);
        if (it == shard.entries.end())
            return std::nullopt;
        return it->second;
    }

    // Insert-if-absent; returns true if this call stored the entry.
    auto insert(const State & s, std::uint16_t entry) -> bool
    {
        auto & shard = shard_for(s);
        std::lock_guard lock{shard.mutex};
        return shard.entries.emplace(s, entry).second;
    }

    auto size() -> size_t
    {
        size_t total = 0;
        for (auto & shard : shards) {
            std::lock_guard lock{shard.mutex};
            total += shard.entries.size();
        }
        return total;
    }
};

SolvabilityMemo::SolvabilityMemo() : _imp(std::make_unique<Imp>()) {}
SolvabilityMemo::~SolvabilityMemo() = default;

auto SolvabilityMemo::size() const -> size_t { return _imp->size(); }

namespace {
    enum class Outcome
    {
        solvable,
        unsolvable,
        unknown
    };

    class Search
    {
    public:
        Search(const Graph & g, const GoalPredicate & goal, SolvabilityMemo::Imp & memo, size_t budget) :
            _g(g),
            _goal(goal),
            _memo(memo),
            _budget(budget)
        {
        }

        auto run(State start) -> Outcome
        {
            _state = std::move(start);
            _size = 0;
            for (size_t v = 0; v < _state.size(); ++v)
                _size += count(_state, static_cast<Vertex>(v));
            _path.clear();
            _stored = 0;
            return dfs();
        }

        [[nodiscard]] auto path() const -> const vector<PebblingMove> & { return _path; }
        [[nodiscard]] auto stored() const -> size_t { return _stored; }

    private:
        const Graph & _g;
        const GoalPredicate & _goal;
        SolvabilityMemo::Imp & _memo;
        size_t _budget;
        size_t _stored = 0;

        State _state;
        long _size = 0;
        vector<PebblingMove> _path;

        [[nodiscard]] auto goal_met() const -> bool { return support_satisfies(_g, support_of(_state), _goal); }

        // Necessary conditions that are cheap to test. A full cover needs one
        // move into each empty vertex and still n pebbles at the end.
        [[nodiscard]] auto hopeless() const -> bool
        {
            bool any_pair = false;
            int empty = 0;
            for (size_t v = 0; v < _state.size(); ++v) {
                int c = count(_state, static_cast<Vertex>(v));
                any_pair = any_pair || c >= 2;
                empty += c == 0;
            }
            if (! any_pair)
                return true;
            if (_goal.kind() == GoalPredicate::Kind::full_cover)
                return _size < static_cast<long>(_state.size()) + empty;
            return false;
        }

        void push(PebblingMove m)
        {
            _state[m.from] = static_cast<char>(count(_state, m.from) - 2);
            _state[m.to] = static_cast<char>(count(_state, m.to) + 1);
            --_size;
        }

        void pop(PebblingMove m)
        {
            _state[m.from] = static_cast<char>(count(_state, m.from) + 2);
            _state[m.to] = static_cast<char>(count(_state, m.to) - 1);
            ++_size;
        }

        // Appends the winning line recorded in the memo, starting from the current state.
        void follow_chain()
        {
            State saved = _state;
            long saved_size = _size;
            while (! goal_met()) {
                auto entry = _memo.find(_state);
                if (! entry || *entry == unsolvable_entry)
                    throw InvariantViolation{0, "memo chain broken while rebuilding a certificate"};
                auto m = decode_move(*entry);
                _path.push_back(m);
                push(m);
            }
            _state = std::move(saved);
            _size = saved_size;
        }

        auto dfs() -> Outcome
        {
            if (goal_met())
                return Outcome::solvable;
            if (hopeless())
                return Outcome::unsolvable;
            if (auto entry = _memo.find(_state)) {
                if (*entry == unsolvable_entry)
                    return Outcome::unsolvable;
                follow_chain();
                return Outcome::solvable;
            }
            if (_stored >= _budget)
                return Outcome::unknown;

            // Moves onto empty vertices first; otherwise ascending (from, to).
            const int n = _g.order();
            for (int pass = 0; pass < 2; ++pass)
                for (Vertex v = 0; v < n; ++v) {
                    if (count(_state, v) < 2)
                        continue;
                    auto targets = _g.neighbours(v);
                    bool found = false;
                    Outcome result = Outcome::unsolvable;
                    PebblingMove winning{};
                    targets.for_each([&](Vertex w) {
                        if (found || (count(_state, w) == 0) != (pass == 0))
                            return;
                        PebblingMove m{v, w};
                        push(m);
                        _path.push_back(m);
                        result = dfs();
                        if (result != Outcome::solvable)
                            _path.pop_back();
                        pop(m);
                        if (result != Outcome::unsolvable) {
                            found = true;
                            winning = m;
                        }
                    });
                    if (found) {
                        if (result == Outcome::solvable && _memo.insert(_state, encode_move(winning)))
                            ++_stored;
                        return result;
                    }
                }

            if (_memo.insert(_state, unsolvable_entry))
                ++_stored;
            return Outcome::unsolvable;
        }
    };

    auto to_verdict(Outcome o) -> Verdict
    {
        switch (o) {
        case Outcome::solvable: return Verdict::solvable;
        case Outcome::unsolvable: return Verdict::unsolvable;
        case Outcome::unknown: return Verdict::budget_exceeded;
        }
        return Verdict::budget_exceeded;
    }

    void check_sized(const Graph & g, const Configuration & c)
    {
        if (c.order() != g.order())
            throw PreconditionError{"configuration has " + to_string(c.order()) + " entries for a graph of order " +
                to_string(g.order())};
    }
}

auto is_solvable(const Graph & g, const Configuration & c, const GoalPredicate & goal, const SolveOptions & options)
    -> SolveResult
{
    check_sized(g, c);
    SolvabilityMemo local;
    auto & memo = options.shared_memo ? options.shared_memo->imp() : local.imp();
    Search search{g, goal, memo, options.budget};

    SolveResult result;
    auto outcome = search.run(to_state(c));
    result.verdict = to_verdict(outcome);
    result.states_explored = search.stored();
    if (outcome == Outcome::solvable)
        result.certificate = Certificate{c, search.path()};
    return result;
}

auto default_value_cap(const Graph & g, const GoalPredicate & goal) -> long
{
    const long n = g.order(), d = g.diameter();
    if (goal.kind() == GoalPredicate::Kind::full_cover)
        return 1 + (n - 1) * (1L << std::min<long>(d, 40));
    long bound = d <= 2 ? n - 1 : (1L << (d - 2)) * (n - 2) + 1;
    return std::max(bound, 1L);
}

namespace {
    auto permuted(const State & s, const vector<Vertex> & perm) -> State
    {
        State image(s.size(), '\0');
        for (size_t v = 0; v < s.size(); ++v)
            image[perm[v]] = s[v];
        return image;
    }

    auto canonical(const State & s, const vector<vector<Vertex>> & group) -> State
    {
        State best = s;
        for (auto & perm : group)
            best = std::min(best, permuted(s, perm));
        return best;
    }

    struct LevelResult
    {
        vector<std::pair<size_t, State>> unsolvable; // (colex index, state)
        bool budget_exceeded = false;
        size_t states = 0;
        size_t checked = 0;
    };

    // Examines every configuration of size k. A configuration with some
    // one-pebble-smaller configuration outside previous_unsolvable is solvable
    // without search: the extra pebble just sits there.
    auto scan_level(const Graph & g, const GoalPredicate & goal, long k, const ValueOptions & options,
        const std::unordered_set<State> * previous_unsolvable, SolvabilityMemo & memo,
        std::atomic<size_t> & stored_total) -> LevelResult
    {
        const int n = g.order();
        State first(n, '\0');
        if (k > 255)
            throw PreconditionError{"exact search supports at most 255 pebbles per vertex (level " + to_string(k) + ")"};
        first[0] = static_cast<char>(k);

        std::mutex generator_mutex;
        State next = first;
        bool exhausted = false;
        size_t next_index = 0;
        constexpr size_t chunk = 256;

        LevelResult total;
        std::mutex merge_mutex;

        auto worker = [&]() {
            LevelResult mine;
            Search search{g, goal, memo.imp(), options.budget};
            vector<std::pair<size_t, State>> batch;
            for (;;) {
                batch.clear();
                {
                    std::lock_guard lock{generator_mutex};
                    while (! exhausted && batch.size() < chunk) {
                        batch.emplace_back(next_index++, next);
                        if (! colex_next(next))
                            exhausted = true;
                    }
                }
                if (batch.empty())
                    break;

                for (auto & [index, state] : batch) {
                    if (! options.symmetry.empty() && canonical(state, options.symmetry) != state)
                        continue;
                    ++mine.checked;

                    bool known_solvable = false;
                    if (! options.paranoid && previous_unsolvable)
                        for (Vertex v = 0; v < n && ! known_solvable; ++v) {
                            if (state[v] == 0)
                                continue;
                            State smaller = state;
                            smaller[v] = static_cast<char>(count(smaller, v) - 1);
                            if (! options.symmetry.empty())
                                smaller = canonical(smaller, options.symmetry);
                            known_solvable = ! previous_unsolvable->contains(smaller);
                        }
                    if (known_solvable)
                        continue;

                    auto outcome = search.run(state);
                    mine.states += search.stored();
                    // The memo is shared by the whole scan, so the budget caps its total growth too.
                    if (outcome == Outcome::unknown || (stored_total += search.stored()) > options.budget)
                        mine.budget_exceeded = true;
                    else if (outcome == Outcome::unsolvable)
                        mine.unsolvable.emplace_back(index, state);
                }
                if (mine.budget_exceeded)
                    break;
            }
            std::lock_guard lock{merge_mutex};
            total.budget_exceeded = total.budget_exceeded || mine.budget_exceeded;
            total.states += mine.states;
            total.checked += mine.checked;
            for (auto & u : mine.unsolvable)
                total.unsolvable.push_back(std::move(u));
        };

        unsigned jobs = std::max(1U, options.jobs);
        if (jobs == 1)
            worker();
        else {
            vector<std::jthread> threads;
            for (unsigned j = 0; j < jobs; ++j)
                threads.emplace_back(worker);
        }
        std::sort(total.unsolvable.begin(), total.unsolvable.end());
        return total;
    }
}

auto pebbling_value(const Graph & g, const GoalPredicate & goal, const ValueOptions & options) -> NumberReport
{
    const long cap = options.cap > 0 ? options.cap : default_value_cap(g, goal);
    SolvabilityMemo memo;
    std::atomic<size_t> stored{0};
    NumberReport report;
    std::unordered_set<State> previous;
    optional<State> previous_witness;

    for (long k = 0; k <= cap; ++k) {
        auto level = scan_level(g, goal, k, options, k == 0 ? nullptr : &previous, memo, stored);
        report.states_explored += level.states;
        report.configurations_checked += level.checked;
        if (level.budget_exceeded) {
            report.status = ValueStatus::budget_exceeded;
            report.value = k;
            if (previous_witness)
                report.witness = to_configuration(*previous_witness);
            return report;
        }

        if (level.unsolvable.empty()) {
            report.value = k;
            if (previous_witness)
                report.witness = to_configuration(*previous_witness);
            if (options.paranoid && k + 1 <= 255) {
                // Re-derive the next level by direct search; it must be all solvable too.
                auto check = scan_level(g, goal, k + 1, options, nullptr, memo, stored);
                if (! check.unsolvable.empty())
                    throw InvariantViolation{0, "solvability is not monotone in size at level " + to_string(k + 1)};
            }
            return report;
        }

        previous_witness = level.unsolvable.back().second;
        previous.clear();
        for (auto & [index, state] : level.unsolvable)
            previous.insert(std::move(state));
    }

    report.status = ValueStatus::cap_reached;
    report.value = cap + 1;
    if (previous_witness)
        report.witness = to_configuration(*previous_witness);
    return report;
}

auto lambda_stacking(const Graph & g) -> NumberReport
{
    NumberReport report;
    Vertex best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        long total = 0;
        for (Vertex u = 0; u < g.order(); ++u)
            total += 1L << g.dist(u, v);
        if (total > report.value) {
            report.value = total;
            best = v;
        }
    }
    report.witness = Configuration::stacked(g.order(), best, static_cast<int>(report.value - 1));
    return report;
}

auto max_unsolvable_witness(const Graph & g, const GoalPredicate & goal, long k, size_t budget)
    -> optional<Configuration>
{
    if (k < 0)
        throw PreconditionError{"negative configuration size"};
    auto all = configurations_of_size(g.order(), k);
    SolvabilityMemo memo;
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        auto result = is_solvable(g, *it, goal, {.budget = budget, .shared_memo = &memo});
        if (result.verdict == Verdict::budget_exceeded)
            throw BudgetExceededError{"state budget exhausted on " + format_configuration(*it)};
        if (result.verdict == Verdict::unsolvable)
            return *it;
    }
    return std::nullopt;
}

auto configurations_of_size(int order, long k) -> vector<Configuration>
{
    if (order < 1 || k < 0)
        throw PreconditionError{"configurations_of_size needs order >= 1 and k >= 0"};
    vector<Configuration> result;
    Configuration c = Configuration::stacked(order, 0, static_cast<int>(k));
    do
        result.push_back(c);
    while (next_configuration_colex(c));
    return result;
}

auto next_configuration_colex(Configuration & c) -> bool
{
    const int n = c.order();
    int v0 = 0;
    while (v0 < n && c[v0] == 0)
        ++v0;
    if (v0 >= n - 1)
        return false;
    int r = c[v0];
    c.set(v0, 0);
    c.add(v0 + 1, 1);
    c.add(0, r - 1);
    return true;
}

}
