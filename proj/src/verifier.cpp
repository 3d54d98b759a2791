#include "tempocol/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempocol {

namespace {

// true iff the sorted list has an entry in [lo, hi]
bool any_in_range(const std::vector<int>& sorted, int lo, int hi) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), lo);
    return it != sorted.end() && *it <= hi;
}

} // namespace

std::optional<Violation> first_violation(const Instance& inst, const TemporalColoring& col) {
    validate_instance(inst);
    const TemporalGraph& g = inst.graph;
    if (col.n != g.n || col.lifetime != g.lifetime)
        throw std::invalid_argument("coloring dimensions do not match the graph");
    if (col.cells.size() != static_cast<std::size_t>(col.n) * col.lifetime)
        throw std::invalid_argument("coloring cell table has the wrong size");
    for (int c : col.cells)
        if (c < 1 || c > inst.k)
            throw std::invalid_argument("color outside [1, k]");

    // Slots where each edge is active and bichromatic.
    std::vector<std::vector<int>> good(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        for (int t : g.edges[i].labels)
            if (col.at(t, g.edges[i].u) != col.at(t, g.edges[i].v))
                good[i].push_back(t);

    for (int t = 1; t + inst.delta - 1 <= g.lifetime; ++t) {
        int hi = t + inst.delta - 1;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (!any_in_range(g.edges[i].labels, t, hi))
                continue; // edge not in this window
            if (!any_in_range(good[i], t, hi))
                return Violation{t, g.edges[i].u, g.edges[i].v};
        }
    }
    return std::nullopt;
}

bool is_proper(const Instance& inst, const TemporalColoring& col) {
    return !first_violation(inst, col).has_value();
}

} // namespace tempocol
