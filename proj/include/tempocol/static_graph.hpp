#ifndef TEMPOCOL_STATIC_GRAPH_HPP
#define TEMPOCOL_STATIC_GRAPH_HPP

#include <vector>

#include "tempocol/temporal_graph.hpp"

namespace tempocol {

// A plain undirected graph; edges sorted by (u, v), u < v, no duplicates.
struct StaticGraph {
    int n = 0;
    std::vector<VertexPair> edges;

    friend bool operator==(const StaticGraph&, const StaticGraph&) = default;
};

void validate_static_graph(const StaticGraph& g);

StaticGraph underlying_graph(const TemporalGraph& g);

StaticGraph complete_graph(int n);
StaticGraph cycle_graph(int n);

// Pairs of distinct vertices that are not edges of g, sorted.
std::vector<VertexPair> non_edges(const StaticGraph& g);

} // namespace tempocol

#endif
