#ifndef TEMPOCOL_WINDOW_SOLVER_HPP
#define TEMPOCOL_WINDOW_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tempocol/coloring.hpp"
#include "tempocol/temporal_graph.hpp"

namespace tempocol {

// Coloring of a contiguous slot range, row-major by slot.
struct WindowColoring {
    WindowRange range;
    int n = 0;
    std::vector<int> cells; // range.length()*n entries

    int at(int t, int v) const { // t is the global slot index
        return cells[static_cast<std::size_t>(t - range.first) * n + v];
    }

    friend bool operator==(const WindowColoring&, const WindowColoring&) = default;
};

// True iff every delta-window fully inside wc.range has each of its edges
// colored differently at some active slot of that window.
bool internally_proper(const TemporalGraph& g, const WindowColoring& wc, int delta);

struct SolverBudget {
    std::int64_t max_window_colorings = 10'000'000; // candidates per DP window
    std::int64_t max_states = 1'000'000;            // retained overlap states
};

struct SolverOptions {
    SolverBudget budget;
    bool want_witness = true;
    // Allow dispatching delta == lifetime instances whose single-window
    // enumeration would blow the budget to the covered-edge-set DP.
    bool use_fast_path = true;
    int threads = 1; // accepted for interface symmetry; evaluation is sequential
};

// The DP windows: [i*delta+1, min((i+2)*delta, T)] for i = 0..ceil(T/delta)-2,
// or the single window [1, T] when T <= 2*delta. Every delta-window of the
// instance lies inside one of them and consecutive windows overlap in delta
// slots.
std::vector<WindowRange> solver_windows(int lifetime, int delta);

// Enumerate the internally proper colorings of the range (length between
// delta and 2*delta) in lexicographic cell order with colors ascending.
// Slots whose snapshot is edgeless are pinned to the canonical all-1 row.
// Every generated candidate (proper or not) counts against max_candidates;
// crossing the cap throws BudgetExceeded. The visitor returns false to stop
// early. Returns the number of candidates generated.
std::int64_t enumerate_window_colorings(const TemporalGraph& g, WindowRange range, int delta,
                                        int k, std::int64_t max_candidates,
                                        const std::function<bool(const WindowColoring&)>& visit);

struct SolveResult {
    bool yes = false;
    std::optional<TemporalColoring> witness; // set when yes and requested
};

// Sliding-window decision: overlap-keyed forward DP over solver_windows.
// States are the colorings of the trailing delta slots of a window; a yes
// witness is rebuilt from backpointers and always passes the verifier.
SolveResult solve_decision(const Instance& inst, const SolverOptions& options = {});

struct MinimizeOutcome {
    int k_star = 1;
    std::optional<TemporalColoring> witness;
};

// Smallest k with a yes answer; ascending scan from 1 (monotone in k, and n
// colors always suffice).
MinimizeOutcome minimize(const TemporalGraph& g, int delta, const SolverOptions& options = {});

} // namespace tempocol

#endif
