#ifndef TEMPOCOL_KERNELIZE_HPP
#define TEMPOCOL_KERNELIZE_HPP

#include <vector>

#include "tempocol/temporal_graph.hpp"

namespace tempocol {

// Bipartite incidence structure: left side = edge indices, right side =
// slots 1..num_slots, adjacent iff the slot is a label of the edge.
struct IncidenceGraph {
    int num_edges = 0;
    int num_slots = 0;
    std::vector<std::vector<int>> adj; // adj[e] = ascending slot list
};

IncidenceGraph incidence_graph(const TemporalGraph& g);

struct Matching {
    std::vector<int> slot_of_edge; // size num_edges, 0 = unmatched
    std::vector<int> edge_of_slot; // size num_slots+1, -1 = unmatched, [0] unused
    int size = 0;
};

// Hopcroft-Karp. Deterministic: edges are processed in index order and
// augmenting DFS tries lower slots first.
Matching max_matching(const IncidenceGraph& inc);

// True iff an augmenting path exists, i.e. the matching is not maximum.
// One BFS layering pass; used to certify results.
bool has_augmenting_path(const IncidenceGraph& inc, const Matching& m);

struct KernelResult {
    TemporalGraph graph;
    std::vector<int> kept_slots; // ascending original slot indices
};

// Keep only slots matched in a maximum edge/slot matching (all slots when
// T <= m already). The answer for any (delta = lifetime, k) is preserved and
// the kernel lifetime is at most min(T, m).
KernelResult kernelize(const TemporalGraph& g);

} // namespace tempocol

#endif
