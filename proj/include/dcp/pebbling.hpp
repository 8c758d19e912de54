#pragma once

#include <dcp/graph.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcp {

/// Per-vertex pebble counts. Equality and hashing are on the exact count
/// vector; no symmetry normalisation happens here.
class Configuration
{
public:
    Configuration() = default;
    explicit Configuration(int order) : _counts(order, 0) {}
    explicit Configuration(std::vector<int> counts);

    /// All pebbles stacked on one vertex.
    static auto stacked(int order, Vertex v, int pebbles) -> Configuration;

    [[nodiscard]] auto order() const -> int { return static_cast<int>(_counts.size()); }
    [[nodiscard]] auto size() const -> long { return _size; }
    [[nodiscard]] auto operator[](Vertex v) const -> int { return _counts[v]; }
    [[nodiscard]] auto counts() const -> std::span<const int> { return _counts; }

    /// Vertices holding at least one pebble.
    [[nodiscard]] auto support() const -> VertexSet;

    void set(Vertex v, int count);
    void add(Vertex v, int delta);

    friend auto operator==(const Configuration &, const Configuration &) -> bool = default;

private:
    std::vector<int> _counts;
    long _size = 0;
};

struct ConfigurationHash
{
    auto operator()(const Configuration & c) const noexcept -> std::size_t;
};

struct PebblingMove
{
    Vertex from = 0;
    Vertex to = 0;

    friend auto operator==(const PebblingMove &, const PebblingMove &) -> bool = default;
};

/// A starting configuration and a move sequence that can be replayed against it.
struct Certificate
{
    Configuration initial;
    std::vector<PebblingMove> moves;
};

/// When a configuration counts as solving the graph.
class GoalPredicate
{
public:
    enum class Kind
    {
        domination,
        full_cover,
        subversion
    };

    static auto domination() -> GoalPredicate { return GoalPredicate{Kind::domination, 0}; }
    static auto full_cover() -> GoalPredicate { return GoalPredicate{Kind::full_cover, 0}; }
    static auto subversion(int omega) -> GoalPredicate;

    [[nodiscard]] auto kind() const -> Kind { return _kind; }
    [[nodiscard]] auto omega() const -> int { return _omega; }
    [[nodiscard]] auto name() const -> std::string;

    friend auto operator==(const GoalPredicate &, const GoalPredicate &) -> bool = default;

private:
    GoalPredicate(Kind kind, int omega) : _kind(kind), _omega(omega) {}

    Kind _kind;
    int _omega;
};

/// Value semantics: returns the configuration after taking two pebbles off
/// m.from and putting one on m.to. Throws IllegalMoveError if the endpoints
/// are not adjacent or the source holds fewer than two pebbles.
[[nodiscard]] auto apply_move(const Graph & g, const Configuration & c, PebblingMove m) -> Configuration;

[[nodiscard]] auto satisfies(const Graph & g, const Configuration & c, const GoalPredicate & goal) -> bool;

/// Same predicate on a support set alone (every goal here depends only on which vertices are covered).
[[nodiscard]] auto support_satisfies(const Graph & g, VertexSet support, const GoalPredicate & goal) -> bool;

/// Exact value in halves, so 2.5 is stored as 5.
struct HalfInteger
{
    long twice = 0;

    [[nodiscard]] auto ceil() const -> long { return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2); }
    [[nodiscard]] auto to_string() const -> std::string;
    friend auto operator<=>(const HalfInteger &, const HalfInteger &) = default;
};

/// sum over v of max(0, (c(v) - 1) / 2).
[[nodiscard]] auto pairing_number(const Configuration & c) -> HalfInteger;

/// sum over v of 2^(d-2) * max(floor((c(v) - 1) / 2^(d-2)), 0). Requires d >= 3.
[[nodiscard]] auto clumping_number(const Configuration & c, int diameter) -> long;

/// Number of disjoint pebble pairs, sum of floor(c(v) / 2).
[[nodiscard]] auto disjoint_pairs(const Configuration & c) -> long;

struct ReplayResult
{
    bool legal = false;
    /// Index of the first illegal move when !legal.
    std::optional<std::size_t> failed_step;
    Configuration final;
};

/// Replays the moves from the initial configuration, stopping at the first illegal one.
[[nodiscard]] auto replay(const Graph & g, const Certificate & cert) -> ReplayResult;

/// "5,0,0,0"
[[nodiscard]] auto parse_configuration(std::string_view text) -> Configuration;
[[nodiscard]] auto format_configuration(const Configuration & c) -> std::string;

/// {"initial":[...],"moves":[[from,to],...]}
[[nodiscard]] auto certificate_to_json(const Certificate & cert) -> std::string;
[[nodiscard]] auto certificate_from_json(std::string_view text) -> Certificate;

}
