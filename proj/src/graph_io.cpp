#include <dcp/errors.hpp>
#include <dcp/graph_io.hpp>

#include <fstream>
#include <sstream>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace dcp {

namespace {
    constexpr int bias = 63;

    auto trim(string_view s) -> string_view
    {
        while (! s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        return s;
    }

    auto sextet(char c) -> int
    {
        int value = static_cast<unsigned char>(c) - bias;
        if (value < 0 || value > 63)
            throw ParseError{string{"graph6: character '"} + c + "' outside the printable range"};
        return value;
    }
}

auto parse_graph6(string_view line) -> Graph
{
    line = trim(line);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    if (line.empty())
        throw ParseError{"graph6: empty line"};

    std::size_t pos = 0;
    long order = 0;
    if (line[0] != '~') {
        order = sextet(line[0]);
        pos = 1;
    }
    else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4)
            throw ParseError{"graph6: truncated order field"};
        order = (long{sextet(line[1])} << 12) | (sextet(line[2]) << 6) | sextet(line[3]);
        pos = 4;
    }
    else {
        if (line.size() < 8)
            throw ParseError{"graph6: truncated order field"};
        for (std::size_t i = 2; i < 8; ++i)
            order = (order << 6) | sextet(line[i]);
        pos = 8;
    }

    const long bits = order * (order - 1) / 2;
    const long expected = (bits + 5) / 6;
    if (static_cast<long>(line.size() - pos) != expected)
        throw ParseError{"graph6: expected " + to_string(expected) + " data characters for order " +
            to_string(order) + ", found " + to_string(line.size() - pos)};
    if (order < 1 || order > max_order)
        throw ParseError{"graph6: order " + to_string(order) + " unsupported"};

    vector<Edge> edges;
    long k = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = sextet(line[pos + k / 6]);
            if ((chunk >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    if (k % 6 != 0) {
        int chunk = sextet(line[pos + k / 6]);
        if ((chunk & ((1 << (6 - k % 6)) - 1)) != 0)
            throw ParseError{"graph6: nonzero padding bits"};
    }
    return build_graph(static_cast<int>(order), edges);
}

auto emit_graph6(const Graph & g) -> string
{
    const int n = g.order();
    string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + bias));
    else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + bias));
        out.push_back(static_cast<char>((n & 63) + bias));
    }

    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + bias));
                chunk = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + bias));
    return out;
}

auto parse_edge_list(string_view text) -> Graph
{
    std::istringstream in{string{text}};
    vector<long> numbers;
    string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != string::npos)
            line.erase(hash);
        std::istringstream fields{line};
        string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                numbers.push_back(std::stol(token, &used));
                if (used != token.size())
                    throw ParseError{""};
            }
            catch (const std::exception &) {
                throw ParseError{"edge list: bad token '" + token + "'"};
            }
        }
    }
    if (numbers.size() < 2)
        throw ParseError{"edge list: missing 'n m' header"};
    const long n = numbers[0], m = numbers[1];
    if (m < 0 || static_cast<long>(numbers.size()) != 2 + 2 * m)
        throw ParseError{"edge list: header promises " + to_string(m) + " edges, found " +
            to_string((static_cast<long>(numbers.size()) - 2) / 2) + " (" + to_string(numbers.size() - 2) + " numbers)"};
    if (n < 1 || n > max_order)
        throw ParseError{"edge list: order " + to_string(n) + " unsupported"};

    vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        long u = numbers[2 + 2 * i], v = numbers[3 + 2 * i];
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError{"edge list: bad edge " + to_string(u) + " " + to_string(v)};
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return build_graph(static_cast<int>(n), edges);
}

auto emit_edge_list(const Graph & g) -> string
{
    auto edges = g.edges();
    string out = to_string(g.order()) + " " + to_string(edges.size()) + "\n";
    for (auto [u, v] : edges)
        out += to_string(u) + " " + to_string(v) + "\n";
    return out;
}

auto format_for_path(string_view path) -> GraphFormat
{
    for (string_view ext : {".txt", ".el", ".edges", ".edgelist"})
        if (path.ends_with(ext))
            return GraphFormat::edge_list;
    return GraphFormat::graph6;
}

auto read_graph6_lines(std::istream & in) -> vector<string>
{
    vector<string> lines;
    string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (! t.empty())
            lines.emplace_back(t);
    }
    return lines;
}

auto load_graphs(const string & path) -> vector<Graph>
{
    std::ifstream in{path};
    if (! in)
        throw ParseError{"cannot open '" + path + "'"};
    vector<Graph> result;
    if (format_for_path(path) == GraphFormat::edge_list) {
        std::stringstream buffer;
        buffer << in.rdbuf();
        result.push_back(parse_edge_list(buffer.str()));
    }
    else
        for (auto & line : read_graph6_lines(in))
            result.push_back(parse_graph6(line));
    return result;
}

}
