#include "tempocol/static_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempocol {

void validate_static_graph(const StaticGraph& g) {
    if (g.n < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        if (u < 0 || v >= g.n || u >= v)
            throw std::invalid_argument("edge endpoints must satisfy 0 <= u < v < n");
        if (i > 0 && g.edges[i - 1] >= g.edges[i])
            throw std::invalid_argument("edges must be sorted by (u, v) without duplicates");
    }
}

StaticGraph underlying_graph(const TemporalGraph& g) {
    StaticGraph out;
    out.n = g.n;
    out.edges = underlying_edges(g);
    return out;
}

StaticGraph complete_graph(int n) {
    StaticGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.edges.emplace_back(u, v);
    return g;
}

StaticGraph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    StaticGraph g;
    g.n = n;
    for (int u = 0; u + 1 < n; ++u)
        g.edges.emplace_back(u, u + 1);
    g.edges.emplace_back(0, n - 1);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<VertexPair> non_edges(const StaticGraph& g) {
    std::vector<VertexPair> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!std::binary_search(g.edges.begin(), g.edges.end(), VertexPair{u, v}))
                out.emplace_back(u, v);
    return out;
}

} // namespace tempocol
