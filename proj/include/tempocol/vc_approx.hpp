#ifndef TEMPOCOL_VC_APPROX_HPP
#define TEMPOCOL_VC_APPROX_HPP

#include <vector>

#include "tempocol/coloring.hpp"
#include "tempocol/static_graph.hpp"
#include "tempocol/window_solver.hpp"

namespace tempocol {

// Lexicographically smallest minimum vertex cover. The size is found by
// branching on an endpoint of an uncovered edge; the tie-break scans vertex
// subsets of that size in lexicographic order.
std::vector<int> min_vertex_cover(const StaticGraph& g);

struct ApproxResult {
    int k_out = 1;
    TemporalColoring coloring;
    std::vector<int> cover; // ascending
    int k_star = 1;         // exact optimum on the cover-induced subgraph
};

// Additive +1 scheme: solve exactly on the subgraph induced by a minimum
// vertex cover, then give every vertex outside the cover the fresh color
// k_star+1 in all slots. No edges: k_out = 1 and the all-1 coloring. With
// tighten set, one extra exact decision at k_out-1 shaves the slack color
// when possible.
ApproxResult approx_coloring(const TemporalGraph& g, int delta, bool tighten = false,
                             const SolverOptions& options = {});

} // namespace tempocol

#endif
