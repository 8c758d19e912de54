#include <dcp/errors.hpp>
#include <dcp/pebbling.hpp>

#include <nlohmann/json.hpp>

#include <sstream>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace dcp {

Configuration::Configuration(vector<int> counts) :
    _counts(std::move(counts))
{
    for (int c : _counts) {
        if (c < 0)
            throw PreconditionError{"negative pebble count"};
        _size += c;
    }
}

auto Configuration::stacked(int order, Vertex v, int pebbles) -> Configuration
{
    Configuration c{order};
    c.set(v, pebbles);
    return c;
}

auto Configuration::support() const -> VertexSet
{
    VertexSet s;
    for (Vertex v = 0; v < order(); ++v)
        if (_counts[v] > 0)
            s.insert(v);
    return s;
}

void Configuration::set(Vertex v, int count)
{
    if (count < 0)
        throw PreconditionError{"negative pebble count"};
    _size += count - _counts.at(v);
    _counts[v] = count;
}

void Configuration::add(Vertex v, int delta) { set(v, _counts.at(v) + delta); }

auto ConfigurationHash::operator()(const Configuration & c) const noexcept -> std::size_t
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : c.counts())
        h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

auto GoalPredicate::subversion(int omega) -> GoalPredicate
{
    if (omega < 0)
        throw PreconditionError{"omega must be non-negative"};
    return GoalPredicate{Kind::subversion, omega};
}

auto GoalPredicate::name() const -> string
{
    switch (_kind) {
    case Kind::domination: return "dcp";
    case Kind::full_cover: return "cover";
    case Kind::subversion: return "subversion(" + to_string(_omega) + ")";
    }
    return "?";
}

auto apply_move(const Graph & g, const Configuration & c, PebblingMove m) -> Configuration
{
    if (m.from < 0 || m.to < 0 || m.from >= g.order() || m.to >= g.order() || ! g.adjacent(m.from, m.to))
        throw IllegalMoveError{"move " + to_string(m.from) + "->" + to_string(m.to) + " is not along an edge"};
    if (c[m.from] < 2)
        throw IllegalMoveError{"move " + to_string(m.from) + "->" + to_string(m.to) + ": only " +
            to_string(c[m.from]) + " pebble(s) at source"};
    Configuration next = c;
    next.add(m.from, -2);
    next.add(m.to, 1);
    return next;
}

auto support_satisfies(const Graph & g, VertexSet support, const GoalPredicate & goal) -> bool
{
    switch (goal.kind()) {
    case GoalPredicate::Kind::full_cover: return support == g.vertices();
    case GoalPredicate::Kind::domination: return dominated_vertices(g, support) == g.vertices();
    case GoalPredicate::Kind::subversion: return largest_undominated_component(g, support) <= goal.omega();
    }
    return false;
}

auto satisfies(const Graph & g, const Configuration & c, const GoalPredicate & goal) -> bool
{
    if (c.order() != g.order())
        throw PreconditionError{"configuration has " + to_string(c.order()) + " entries for a graph of order " +
            to_string(g.order())};
    return support_satisfies(g, c.support(), goal);
}

auto HalfInteger::to_string() const -> string
{
    if (twice % 2 == 0)
        return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

auto pairing_number(const Configuration & c) -> HalfInteger
{
    HalfInteger p;
    for (int x : c.counts())
        if (x > 1)
            p.twice += x - 1;
    return p;
}

auto clumping_number(const Configuration & c, int diameter) -> long
{
    if (diameter < 3)
        throw PreconditionError{"clumping number needs diameter >= 3, got " + to_string(diameter)};
    const long clump = 1L << (diameter - 2);
    long chi = 0;
    for (int x : c.counts())
        if (x >= 1)
            chi += clump * ((x - 1) / clump);
    return chi;
}

auto disjoint_pairs(const Configuration & c) -> long
{
    long pairs = 0;
    for (int x : c.counts())
        pairs += x / 2;
    return pairs;
}

auto replay(const Graph & g, const Certificate & cert) -> ReplayResult
{
    ReplayResult result;
    result.final = cert.initial;
    for (std::size_t i = 0; i < cert.moves.size(); ++i) {
        try {
            result.final = apply_move(g, result.final, cert.moves[i]);
        }
        catch (const IllegalMoveError &) {
            result.failed_step = i;
            return result;
        }
    }
    result.legal = true;
    return result;
}

auto parse_configuration(string_view text) -> Configuration
{
    vector<int> counts;
    std::istringstream in{string{text}};
    string token;
    while (std::getline(in, token, ',')) {
        auto first = token.find_first_not_of(" \t\r\n");
        auto last = token.find_last_not_of(" \t\r\n");
        if (first == string::npos)
            throw ParseError{"configuration: empty entry in '" + string{text} + "'"};
        token = token.substr(first, last - first + 1);
        try {
            std::size_t used = 0;
            long value = std::stol(token, &used);
            if (used != token.size() || value < 0 || value > 1'000'000)
                throw ParseError{""};
            counts.push_back(static_cast<int>(value));
        }
        catch (const std::exception &) {
            throw ParseError{"configuration: bad count '" + token + "'"};
        }
    }
    if (counts.empty())
        throw ParseError{"configuration: no counts"};
    return Configuration{std::move(counts)};
}

auto format_configuration(const Configuration & c) -> string
{
    string out;
    for (Vertex v = 0; v < c.order(); ++v) {
        if (v > 0)
            out += ',';
        out += to_string(c[v]);
    }
    return out;
}

auto certificate_to_json(const Certificate & cert) -> string
{
    nlohmann::json moves = nlohmann::json::array();
    for (auto & m : cert.moves)
        moves.push_back({m.from, m.to});
    nlohmann::json j{{"initial", vector<int>(cert.initial.counts().begin(), cert.initial.counts().end())}, {"moves", moves}};
    return j.dump();
}

auto certificate_from_json(string_view text) -> Certificate
{
    try {
        auto j = nlohmann::json::parse(text);
        Certificate cert;
        cert.initial = Configuration{j.at("initial").get<vector<int>>()};
        for (auto & m : j.at("moves")) {
            if (! m.is_array() || m.size() != 2)
                throw ParseError{"certificate: each move must be a [from, to] pair"};
            cert.moves.push_back({m[0].get<int>(), m[1].get<int>()});
        }
        return cert;
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError{string{"certificate: "} + e.what()};
    }
    catch (const PreconditionError & e) {
        throw ParseError{string{"certificate: "} + e.what()};
    }
}

}
