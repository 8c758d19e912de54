#pragma once

#include <dcp/graph.hpp>
#include <dcp/graph_io.hpp>
#include <dcp/pebbling.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace dcp::testing {

struct Fixture
{
    std::string g6;
    Graph graph;
};

/// Every connected graph of the given order, one per isomorphism class.
inline auto connected_graphs(int order) -> std::vector<Fixture>
{
    std::ifstream in{std::string{DCP_FIXTURE_DIR} + "/connected_order" + std::to_string(order) + ".g6"};
    if (! in)
        throw std::runtime_error{"missing fixture for order " + std::to_string(order)};
    std::vector<Fixture> out;
    for (auto & line : read_graph6_lines(in))
        out.push_back({line, parse_graph6(line)});
    return out;
}

inline auto connected_graphs_up_to(int max_order, int min_order = 1) -> std::vector<Fixture>
{
    std::vector<Fixture> out;
    for (int n = min_order; n <= max_order; ++n)
        for (auto & f : connected_graphs(n))
            out.push_back(std::move(f));
    return out;
}

inline auto diameter2_graphs_up_to(int max_order) -> std::vector<Fixture>
{
    std::vector<Fixture> out;
    for (auto & f : connected_graphs_up_to(max_order))
        if (f.graph.diameter() == 2)
            out.push_back(std::move(f));
    return out;
}

inline auto config(std::vector<int> counts) -> Configuration { return Configuration{std::move(counts)}; }

}
