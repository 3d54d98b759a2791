#include "tempocol/snapshot_reduce.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace tempocol {

ReduceResult reduce_snapshots(const Instance& inst) {
    validate_instance(inst);
    const TemporalGraph& g = inst.graph;
    const int T = g.lifetime;
    const int delta = inst.delta;
    const std::size_t trigger = 2 * static_cast<std::size_t>(g.n) * g.n;

    // Intern the snapshot edge sets; key 0 is the trivial snapshot.
    std::map<std::vector<VertexPair>, int> key_ids;
    key_ids.emplace(std::vector<VertexPair>{}, 0);
    std::vector<int> slot_key(T + 1, 0);
    for (int t = 1; t <= T; ++t)
        slot_key[t] =
            key_ids.emplace(snapshot_edges(g, t), static_cast<int>(key_ids.size())).first->second;

    std::vector<std::deque<int>> occurrences(key_ids.size()); // in-window slots per key
    std::vector<char> replaced(T + 1, 0);

    auto fire = [&](int key) {
        if (key == 0)
            return;
        std::deque<int>& dq = occurrences[key];
        while (dq.size() > trigger) {
            int victim = dq[dq.size() / 2]; // >= n^2 occurrences on each side
            dq.erase(dq.begin() + static_cast<std::ptrdiff_t>(dq.size() / 2));
            replaced[victim] = 1;
            slot_key[victim] = 0;
        }
    };

    // First window, then slide one slot at a time.
    std::set<int> initial_keys;
    for (int t = 1; t <= delta; ++t) {
        if (slot_key[t] == 0)
            continue;
        occurrences[slot_key[t]].push_back(t);
        initial_keys.insert(slot_key[t]);
    }
    for (int key : initial_keys)
        fire(key);
    for (int start = 2; start + delta - 1 <= T; ++start) {
        int leaving = start - 1;
        if (!replaced[leaving] && slot_key[leaving] != 0)
            occurrences[slot_key[leaving]].pop_front();
        int entering = start + delta - 1;
        if (slot_key[entering] != 0) {
            occurrences[slot_key[entering]].push_back(entering);
            fire(slot_key[entering]);
        }
    }

    ReduceResult out;
    out.instance.delta = inst.delta;
    out.instance.k = inst.k;
    out.instance.graph.n = g.n;
    out.instance.graph.lifetime = T;
    for (const TimeEdge& e : g.edges) {
        TimeEdge kept{e.u, e.v, {}};
        for (int t : e.labels)
            if (!replaced[t])
                kept.labels.push_back(t);
        if (kept.labels.empty())
            throw std::logic_error("reduction removed the last occurrence of an edge");
        out.instance.graph.edges.push_back(std::move(kept));
    }
    for (int t = 1; t <= T; ++t)
        if (replaced[t])
            out.replaced_slots.push_back(t);
    return out;
}

SolveResult solve_fpt(const Instance& inst, const SolverOptions& options) {
    return solve_decision(reduce_snapshots(inst).instance, options);
}

} // namespace tempocol
