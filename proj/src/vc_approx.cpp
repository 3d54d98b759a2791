#include "tempocol/vc_approx.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempocol {

namespace {

// Classic bounded branching: pick an uncovered edge, one endpoint must join.
int cover_size_branch(const std::vector<VertexPair>& edges, std::vector<char>& in_cover,
                      int used, int best) {
    if (used >= best)
        return best;
    for (auto [u, v] : edges) {
        if (in_cover[u] || in_cover[v])
            continue;
        in_cover[u] = 1;
        best = cover_size_branch(edges, in_cover, used + 1, best);
        in_cover[u] = 0;
        in_cover[v] = 1;
        best = cover_size_branch(edges, in_cover, used + 1, best);
        in_cover[v] = 0;
        return best;
    }
    return used; // every edge covered
}

bool covers(const StaticGraph& g, const std::vector<int>& pick, std::vector<char>& scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (int v : pick)
        scratch[v] = 1;
    for (auto [u, v] : g.edges)
        if (!scratch[u] && !scratch[v])
            return false;
    return true;
}

} // namespace

std::vector<int> min_vertex_cover(const StaticGraph& g) {
    validate_static_graph(g);
    std::vector<char> in_cover(g.n, 0);
    int size = cover_size_branch(g.edges, in_cover, 0, g.n);

    // First size-subset in lexicographic order that covers everything.
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i)
        pick[i] = i;
    std::vector<char> scratch(g.n, 0);
    while (true) {
        if (covers(g, pick, scratch))
            return pick;
        // next combination of {0..n-1}
        int i = size - 1;
        while (i >= 0 && pick[i] == g.n - size + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    throw std::logic_error("no cover of the branching size exists");
}

ApproxResult approx_coloring(const TemporalGraph& g, int delta, bool tighten,
                             const SolverOptions& options) {
    validate_instance(Instance{g, delta, 1});
    std::vector<int> cover = min_vertex_cover(underlying_graph(g));

    ApproxResult out;
    out.cover = cover;
    if (cover.empty()) { // no edges at all; one color does it
        out.k_out = 1;
        out.k_star = 1;
        out.coloring = make_constant_coloring(g.n, g.lifetime, 1, 1);
        return out;
    }

    // Exact minimum on the cover-induced temporal subgraph.
    std::vector<int> position(g.n, -1);
    for (std::size_t i = 0; i < cover.size(); ++i)
        position[cover[i]] = static_cast<int>(i);
    TemporalGraph induced;
    induced.n = static_cast<int>(cover.size());
    induced.lifetime = g.lifetime;
    for (const TimeEdge& e : g.edges)
        if (position[e.u] >= 0 && position[e.v] >= 0)
            induced.edges.push_back(TimeEdge{position[e.u], position[e.v], e.labels});

    SolverOptions inner = options;
    inner.want_witness = true;
    MinimizeOutcome mo = minimize(induced, delta, inner);
    out.k_star = mo.k_star;

    bool outside = cover.size() < static_cast<std::size_t>(g.n);
    out.k_out = outside ? mo.k_star + 1 : mo.k_star;
    out.coloring = make_constant_coloring(g.n, g.lifetime, out.k_out, out.k_out);
    for (int t = 1; t <= g.lifetime; ++t)
        for (std::size_t i = 0; i < cover.size(); ++i)
            out.coloring.at(t, cover[i]) = mo.witness->at(t, static_cast<int>(i));

    if (tighten && out.k_out > 1) {
        SolveResult better = solve_decision(Instance{g, delta, out.k_out - 1}, inner);
        if (better.yes) { // the slack color was not needed after all
            out.k_out -= 1;
            out.coloring = std::move(*better.witness);
        }
    }
    return out;
}

} // namespace tempocol
