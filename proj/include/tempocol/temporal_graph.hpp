#ifndef TEMPOCOL_TEMPORAL_GRAPH_HPP
#define TEMPOCOL_TEMPORAL_GRAPH_HPP

#include <utility>
#include <vector>

namespace tempocol {

using VertexPair = std::pair<int, int>; // always u < v

// One edge of a temporal graph together with the time slots it is active in.
struct TimeEdge {
    int u = 0;
    int v = 0;
    std::vector<int> labels; // strictly increasing, each in [1, lifetime]

    friend bool operator==(const TimeEdge&, const TimeEdge&) = default;
};

// Vertices are 0..n-1, time slots are 1..lifetime. Edges are kept sorted by
// (u, v) with no duplicate pairs. lifetime may exceed the largest label
// (trailing trivial snapshots); lifetime 0 is allowed only without edges.
struct TemporalGraph {
    int n = 0;
    int lifetime = 0;
    std::vector<TimeEdge> edges;

    friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;
};

// A decision problem instance: is there a coloring with at most k colors that
// properly colors every edge of every delta-window inside the window?
struct Instance {
    TemporalGraph graph;
    int delta = 1;
    int k = 1;
};

// Inclusive slot range [first, last].
struct WindowRange {
    int first = 1;
    int last = 1;

    int length() const { return last - first + 1; }
    friend bool operator==(const WindowRange&, const WindowRange&) = default;
};

// Throw std::invalid_argument when a structural invariant is broken.
void validate_graph(const TemporalGraph& g);
void validate_instance(const Instance& inst);

// Edge set of the snapshot at slot t (1 <= t <= lifetime), sorted.
std::vector<VertexPair> snapshot_edges(const TemporalGraph& g, int t);
bool snapshot_trivial(const TemporalGraph& g, int t);

// Union of the snapshot edge sets over slots [t, t+delta-1]; the window must
// fit inside [1, lifetime].
std::vector<VertexPair> window_edges(const TemporalGraph& g, int t, int delta);

// Distinct endpoint pairs, sorted.
std::vector<VertexPair> underlying_edges(const TemporalGraph& g);

// Keep only the given slots (ascending, distinct, within range) and compact
// them to 1..|slots| preserving order. Edges that lose all labels disappear.
TemporalGraph restrict_slots(const TemporalGraph& g, const std::vector<int>& slots);

// Insert a trivial snapshot after every delta consecutive original slots:
// slot t moves to t + (t-1)/delta, the lifetime grows to T + T/delta.
// Preserves the decision answer when delta is bumped to delta+1.
TemporalGraph lift_delta(const TemporalGraph& g, int delta);
int lifted_slot(int t, int delta);

} // namespace tempocol

#endif
