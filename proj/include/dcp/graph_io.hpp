#pragma once

#include <dcp/graph.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace dcp {

/// Decodes one graph6 line (an optional ">>graph6<<" header and trailing
/// newline are accepted). Throws ParseError on malformed input and
/// DisconnectedGraphError if the graph is not connected.
[[nodiscard]] auto parse_graph6(std::string_view line) -> Graph;

/// graph6 encoding without header or newline.
[[nodiscard]] auto emit_graph6(const Graph & g) -> std::string;

/// "n m" header followed by m "u v" lines. Blank lines and '#' comments are ignored.
[[nodiscard]] auto parse_edge_list(std::string_view text) -> Graph;
[[nodiscard]] auto emit_edge_list(const Graph & g) -> std::string;

enum class GraphFormat
{
    graph6,
    edge_list
};

/// .txt, .el, .edges and .edgelist mean edge list; anything else is graph6.
[[nodiscard]] auto format_for_path(std::string_view path) -> GraphFormat;

/// Every non-blank graph6 line of a stream.
[[nodiscard]] auto read_graph6_lines(std::istream & in) -> std::vector<std::string>;

/// Loads the graphs in a file: one for an edge list, one per line for graph6.
[[nodiscard]] auto load_graphs(const std::string & path) -> std::vector<Graph>;

}
