#include "tempocol/temporal_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tempocol {

void validate_graph(const TemporalGraph& g) {
    if (g.n < 1)
        throw std::invalid_argument("temporal graph needs at least one vertex");
    if (g.lifetime < 0)
        throw std::invalid_argument("negative lifetime");
    if (g.lifetime == 0 && !g.edges.empty())
        throw std::invalid_argument("lifetime 0 with a nonempty edge list");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const TimeEdge& e = g.edges[i];
        if (e.u < 0 || e.v >= g.n || e.u >= e.v)
            throw std::invalid_argument("edge endpoints must satisfy 0 <= u < v < n");
        if (e.labels.empty())
            throw std::invalid_argument("edge with empty label list");
        int prev = 0;
        for (int t : e.labels) {
            if (t <= prev)
                throw std::invalid_argument("edge labels must be strictly increasing");
            if (t < 1 || t > g.lifetime)
                throw std::invalid_argument("edge label outside [1, lifetime]");
            prev = t;
        }
        if (i > 0) {
            const TimeEdge& p = g.edges[i - 1];
            if (std::make_pair(p.u, p.v) >= std::make_pair(e.u, e.v))
                throw std::invalid_argument("edges must be sorted by (u, v) without duplicates");
        }
    }
}

void validate_instance(const Instance& inst) {
    validate_graph(inst.graph);
    if (inst.delta < 1 || inst.delta > inst.graph.lifetime)
        throw std::invalid_argument("delta must satisfy 1 <= delta <= lifetime");
    if (inst.k < 1)
        throw std::invalid_argument("k must be at least 1");
}

std::vector<VertexPair> snapshot_edges(const TemporalGraph& g, int t) {
    if (t < 1 || t > g.lifetime)
        throw std::invalid_argument("slot " + std::to_string(t) + " outside [1, lifetime]");
    std::vector<VertexPair> out;
    for (const TimeEdge& e : g.edges)
        if (std::binary_search(e.labels.begin(), e.labels.end(), t))
            out.emplace_back(e.u, e.v);
    return out; // edge order is already (u, v)-sorted
}

bool snapshot_trivial(const TemporalGraph& g, int t) {
    if (t < 1 || t > g.lifetime)
        throw std::invalid_argument("slot " + std::to_string(t) + " outside [1, lifetime]");
    for (const TimeEdge& e : g.edges)
        if (std::binary_search(e.labels.begin(), e.labels.end(), t))
            return false;
    return true;
}

std::vector<VertexPair> window_edges(const TemporalGraph& g, int t, int delta) {
    if (delta < 1)
        throw std::invalid_argument("delta must be at least 1");
    if (t < 1 || t + delta - 1 > g.lifetime)
        throw std::invalid_argument("window [" + std::to_string(t) + ", " +
                                    std::to_string(t + delta - 1) + "] outside [1, lifetime]");
    std::vector<VertexPair> out;
    for (const TimeEdge& e : g.edges) {
        auto it = std::lower_bound(e.labels.begin(), e.labels.end(), t);
        if (it != e.labels.end() && *it <= t + delta - 1)
            out.emplace_back(e.u, e.v);
    }
    return out;
}

std::vector<VertexPair> underlying_edges(const TemporalGraph& g) {
    std::vector<VertexPair> out;
    out.reserve(g.edges.size());
    for (const TimeEdge& e : g.edges)
        out.emplace_back(e.u, e.v);
    return out;
}

TemporalGraph restrict_slots(const TemporalGraph& g, const std::vector<int>& slots) {
    if (slots.empty())
        throw std::invalid_argument("slot selection must be nonempty");
    int prev = 0;
    for (int s : slots) {
        if (s <= prev)
            throw std::invalid_argument("slot selection must be ascending and distinct");
        if (s < 1 || s > g.lifetime)
            throw std::invalid_argument("selected slot outside [1, lifetime]");
        prev = s;
    }
    TemporalGraph out;
    out.n = g.n;
    out.lifetime = static_cast<int>(slots.size());
    for (const TimeEdge& e : g.edges) {
        TimeEdge kept;
        kept.u = e.u;
        kept.v = e.v;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (std::binary_search(e.labels.begin(), e.labels.end(), slots[i]))
                kept.labels.push_back(static_cast<int>(i) + 1);
        if (!kept.labels.empty())
            out.edges.push_back(std::move(kept));
    }
    return out;
}

int lifted_slot(int t, int delta) {
    return t + (t - 1) / delta;
}

TemporalGraph lift_delta(const TemporalGraph& g, int delta) {
    if (delta < 1 || delta > g.lifetime)
        throw std::invalid_argument("delta must satisfy 1 <= delta <= lifetime");
    TemporalGraph out;
    out.n = g.n;
    out.lifetime = g.lifetime + g.lifetime / delta;
    out.edges = g.edges;
    for (TimeEdge& e : out.edges)
        for (int& t : e.labels)
            t = lifted_slot(t, delta);
    return out;
}

} // namespace tempocol
