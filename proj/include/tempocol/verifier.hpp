#ifndef TEMPOCOL_VERIFIER_HPP
#define TEMPOCOL_VERIFIER_HPP

#include <optional>

#include "tempocol/coloring.hpp"
#include "tempocol/temporal_graph.hpp"

namespace tempocol {

// A window that starts at slot t whose edge (u, v) is never bichromatic at an
// active slot inside the window.
struct Violation {
    int t = 0;
    int u = 0;
    int v = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// First violation in lexicographic (t, u, v) order, or nullopt if the
// coloring is proper. Dimension or color-range mismatches throw.
std::optional<Violation> first_violation(const Instance& inst, const TemporalColoring& col);

bool is_proper(const Instance& inst, const TemporalColoring& col);

} // namespace tempocol

#endif
