#ifndef TEMPOCOL_SNAPSHOT_REDUCE_HPP
#define TEMPOCOL_SNAPSHOT_REDUCE_HPP

#include <vector>

#include "tempocol/temporal_graph.hpp"
#include "tempocol/window_solver.hpp"

namespace tempocol {

struct ReduceResult {
    Instance instance;               // same n, delta, k, lifetime
    std::vector<int> replaced_slots; // ascending slots turned trivial
};

// Left-to-right sweep over all delta-windows. Whenever some non-trivial
// snapshot edge set occurs more than 2n^2 times inside the current window,
// the median occurrence is replaced by a trivial snapshot (leaving at least
// n^2 occurrences on each side) until no count exceeds the trigger. The
// answer for (delta, k) is preserved; afterwards every delta-window has at
// most 2 * 2^(n(n-1)/2) * n^2 non-trivial snapshots and a second application
// changes nothing.
ReduceResult reduce_snapshots(const Instance& inst);

// reduce_snapshots followed by solve_decision on the reduced instance. Any
// witness is proper for the original instance as well (reduced labels are a
// subset and window edge sets are unchanged).
SolveResult solve_fpt(const Instance& inst, const SolverOptions& options = {});

} // namespace tempocol

#endif
