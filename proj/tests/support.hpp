#ifndef TEMPOCOL_TESTS_SUPPORT_HPP
#define TEMPOCOL_TESTS_SUPPORT_HPP

#include <optional>
#include <vector>

#include "tempocol/coloring.hpp"
#include "tempocol/temporal_graph.hpp"
#include "tempocol/verifier.hpp"

namespace support {

using namespace tempocol;

inline TemporalGraph make_graph(int n, int lifetime, std::vector<TimeEdge> edges) {
    TemporalGraph g;
    g.n = n;
    g.lifetime = lifetime;
    g.edges = std::move(edges);
    validate_graph(g);
    return g;
}

// K_3 on {0,1,2}, every edge active at the given slots.
inline TemporalGraph triangle_at(std::vector<int> slots, int lifetime) {
    return make_graph(3, lifetime, {{0, 1, slots}, {0, 2, slots}, {1, 2, slots}});
}

inline TemporalGraph single_edge(std::vector<int> slots, int lifetime) {
    return make_graph(2, lifetime, {{0, 1, slots}});
}

// Direct restatement of the properness definition, used to double-check the
// production verifier: for every window and every window edge, scan all
// active slots inside the window for a bichromatic one.
inline std::optional<Violation> naive_first_violation(const Instance& inst,
                                                      const TemporalColoring& col) {
    const TemporalGraph& g = inst.graph;
    for (int t = 1; t + inst.delta - 1 <= g.lifetime; ++t)
        for (const TimeEdge& e : g.edges) {
            bool appears = false, good = false;
            for (int s : e.labels) {
                if (s < t || s > t + inst.delta - 1) continue;
                appears = true;
                if (col.at(s, e.u) != col.at(s, e.v)) good = true;
            }
            if (appears && !good) return Violation{t, e.u, e.v};
        }
    return std::nullopt;
}

inline TemporalColoring coloring_from_rows(int k, std::vector<std::vector<int>> rows) {
    TemporalColoring col;
    col.lifetime = static_cast<int>(rows.size());
    col.n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    col.k = k;
    for (const auto& row : rows)
        col.cells.insert(col.cells.end(), row.begin(), row.end());
    return col;
}

} // namespace support

#endif
