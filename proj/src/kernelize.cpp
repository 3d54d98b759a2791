#include "tempocol/kernelize.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace tempocol {

IncidenceGraph incidence_graph(const TemporalGraph& g) {
    validate_graph(g);
    IncidenceGraph inc;
    inc.num_edges = static_cast<int>(g.edges.size());
    inc.num_slots = g.lifetime;
    inc.adj.reserve(g.edges.size());
    for (const TimeEdge& e : g.edges)
        inc.adj.push_back(e.labels);
    return inc;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
    const IncidenceGraph& inc;
    std::vector<int> slot_of_edge; // 0 = free
    std::vector<int> edge_of_slot; // -1 = free
    std::vector<int> level;

    explicit HopcroftKarp(const IncidenceGraph& inc_)
        : inc(inc_),
          slot_of_edge(inc_.num_edges, 0),
          edge_of_slot(inc_.num_slots + 1, -1),
          level(inc_.num_edges, kInf) {}

    bool bfs() {
        std::queue<int> queue;
        for (int e = 0; e < inc.num_edges; ++e) {
            if (slot_of_edge[e] == 0) {
                level[e] = 0;
                queue.push(e);
            } else {
                level[e] = kInf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            int e = queue.front();
            queue.pop();
            for (int t : inc.adj[e]) {
                int next = edge_of_slot[t];
                if (next == -1) {
                    found = true;
                } else if (level[next] == kInf) {
                    level[next] = level[e] + 1;
                    queue.push(next);
                }
            }
        }
        return found;
    }

    bool dfs(int e) {
        for (int t : inc.adj[e]) { // ascending: lowest slot wins
            int next = edge_of_slot[t];
            if (next == -1 || (level[next] == level[e] + 1 && dfs(next))) {
                slot_of_edge[e] = t;
                edge_of_slot[t] = e;
                return true;
            }
        }
        level[e] = kInf;
        return false;
    }
};

} // namespace

Matching max_matching(const IncidenceGraph& inc) {
    HopcroftKarp hk(inc);
    int size = 0;
    while (hk.bfs())
        for (int e = 0; e < inc.num_edges; ++e)
            if (hk.slot_of_edge[e] == 0 && hk.dfs(e))
                ++size;
    return {std::move(hk.slot_of_edge), std::move(hk.edge_of_slot), size};
}

bool has_augmenting_path(const IncidenceGraph& inc, const Matching& m) {
    // BFS over alternating paths from free edges; reaching a free slot means
    // the matching is not maximum.
    std::vector<char> visited(inc.num_edges, 0);
    std::queue<int> queue;
    for (int e = 0; e < inc.num_edges; ++e) {
        if (m.slot_of_edge[e] == 0) {
            visited[e] = 1;
            queue.push(e);
        }
    }
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop();
        for (int t : inc.adj[e]) {
            int next = m.edge_of_slot[t];
            if (next == -1)
                return true;
            if (!visited[next]) {
                visited[next] = 1;
                queue.push(next);
            }
        }
    }
    return false;
}

KernelResult kernelize(const TemporalGraph& g) {
    validate_graph(g);
    int m = static_cast<int>(g.edges.size());
    if (g.lifetime <= m) {
        KernelResult out;
        out.graph = g;
        out.kept_slots.resize(g.lifetime);
        for (int t = 1; t <= g.lifetime; ++t)
            out.kept_slots[t - 1] = t;
        return out;
    }
    if (g.edges.empty()) { // T > m = 0: nothing to keep
        KernelResult out;
        out.graph.n = g.n;
        return out;
    }
    Matching matching = max_matching(incidence_graph(g));
    std::vector<int> kept;
    kept.reserve(matching.size);
    for (int t = 1; t <= g.lifetime; ++t)
        if (matching.edge_of_slot[t] != -1)
            kept.push_back(t);
    KernelResult out;
    out.graph = restrict_slots(g, kept);
    out.kept_slots = std::move(kept);
    return out;
}

} // namespace tempocol
