#include "tempocol/window_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "tempocol/errors.hpp"
#include "tempocol/numeric.hpp"
#include "tempocol/oracles.hpp"

namespace tempocol {

namespace {

// Propriety test for all delta-subwindows of one range, precomputed so the
// per-candidate check is a few array walks. Row indices are relative to the
// range start.
struct RangeChecker {
    struct ActiveEdge {
        int u, v;
        std::vector<int> rows;
    };
    int n;
    std::vector<std::vector<ActiveEdge>> subwindows;

    RangeChecker(const TemporalGraph& g, WindowRange range, int delta) : n(g.n) {
        for (int s = range.first; s + delta - 1 <= range.last; ++s) {
            std::vector<ActiveEdge> inside;
            for (const TimeEdge& e : g.edges) {
                ActiveEdge a{e.u, e.v, {}};
                for (int t : e.labels)
                    if (t >= s && t <= s + delta - 1)
                        a.rows.push_back(t - range.first);
                if (!a.rows.empty())
                    inside.push_back(std::move(a));
            }
            subwindows.push_back(std::move(inside));
        }
    }

    bool proper(const std::vector<int>& cells) const {
        for (const auto& window : subwindows) {
            for (const auto& e : window) {
                bool ok = false;
                for (int row : e.rows) {
                    std::size_t base = static_cast<std::size_t>(row) * n;
                    if (cells[base + e.u] != cells[base + e.v]) {
                        ok = true;
                        break;
                    }
                }
                if (!ok)
                    return false;
            }
        }
        return true;
    }
};

// Cell indices free to vary: all vertices of non-trivial slots, skipping the
// first skip_rows rows (those come from the inherited state).
std::vector<std::size_t> free_cells_of(const TemporalGraph& g, WindowRange range, int skip_rows) {
    std::vector<std::size_t> free_cells;
    for (int t = range.first + skip_rows; t <= range.last; ++t) {
        if (snapshot_trivial(g, t))
            continue;
        std::size_t base = static_cast<std::size_t>(t - range.first) * g.n;
        for (int v = 0; v < g.n; ++v)
            free_cells.push_back(base + v);
    }
    return free_cells;
}

// Lexicographic successor over the free cells only; rightmost varies fastest.
bool advance(std::vector<int>& cells, const std::vector<std::size_t>& free_cells, int k) {
    for (std::size_t i = free_cells.size(); i-- > 0;) {
        if (cells[free_cells[i]] < k) {
            ++cells[free_cells[i]];
            for (std::size_t j = i + 1; j < free_cells.size(); ++j)
                cells[free_cells[j]] = 1;
            return true;
        }
    }
    return false;
}

int count_nontrivial(const TemporalGraph& g, int first, int last) {
    int count = 0;
    for (int t = first; t <= last; ++t)
        if (!snapshot_trivial(g, t))
            ++count;
    return count;
}

} // namespace

bool internally_proper(const TemporalGraph& g, const WindowColoring& wc, int delta) {
    validate_graph(g);
    if (wc.n != g.n || wc.range.first < 1 || wc.range.last > g.lifetime ||
        wc.range.length() < 1 ||
        wc.cells.size() != static_cast<std::size_t>(wc.range.length()) * g.n)
        throw std::invalid_argument("window coloring does not fit the graph");
    if (delta < 1)
        throw std::invalid_argument("delta must be at least 1");
    return RangeChecker(g, wc.range, delta).proper(wc.cells);
}

std::vector<WindowRange> solver_windows(int lifetime, int delta) {
    if (delta < 1 || delta > lifetime)
        throw std::invalid_argument("delta must satisfy 1 <= delta <= lifetime");
    if (lifetime <= 2 * delta)
        return {WindowRange{1, lifetime}};
    std::vector<WindowRange> out;
    int count = (lifetime + delta - 1) / delta - 1; // ceil(T/delta) - 1 windows
    for (int i = 0; i < count; ++i)
        out.push_back(WindowRange{i * delta + 1, std::min((i + 2) * delta, lifetime)});
    return out;
}

std::int64_t enumerate_window_colorings(const TemporalGraph& g, WindowRange range, int delta,
                                        int k, std::int64_t max_candidates,
                                        const std::function<bool(const WindowColoring&)>& visit) {
    validate_graph(g);
    if (delta < 1 || k < 1)
        throw std::invalid_argument("delta and k must be at least 1");
    if (range.first < 1 || range.last > g.lifetime)
        throw std::invalid_argument("range outside [1, lifetime]");
    if (range.length() < delta || range.length() > 2 * delta)
        throw std::invalid_argument("range length must lie between delta and 2*delta");

    RangeChecker checker(g, range, delta);
    std::vector<std::size_t> free_cells = free_cells_of(g, range, 0);

    WindowColoring wc;
    wc.range = range;
    wc.n = g.n;
    wc.cells.assign(static_cast<std::size_t>(range.length()) * g.n, 1);

    std::int64_t count = 0;
    do {
        if (++count > max_candidates)
            throw BudgetExceeded("window [" + std::to_string(range.first) + ", " +
                                 std::to_string(range.last) + "] passed " +
                                 std::to_string(max_candidates) + " enumerated colorings");
        if (checker.proper(wc.cells) && !visit(wc))
            return count;
    } while (advance(wc.cells, free_cells, k));
    return count;
}

namespace {

// One retained DP state: the coloring of the trailing delta slots of a
// window, plus enough backpointer information to rebuild a witness.
struct Layer {
    std::map<std::vector<int>, int> index; // trailing rows -> state id
    std::vector<std::vector<int>> states;  // state id -> trailing rows
    std::vector<int> prev;                 // state id -> previous state id
    std::vector<std::vector<int>> rows;    // witness rows added by this state

    // Returns true when the state is new.
    bool insert(std::vector<int> state, int prev_id, std::vector<int> witness_rows,
                std::int64_t max_states) {
        if (index.find(state) != index.end())
            return false;
        if (static_cast<std::int64_t>(states.size()) + 1 > max_states)
            throw BudgetExceeded("retained states exceed the cap of " +
                                 std::to_string(max_states));
        int id = static_cast<int>(states.size());
        index.emplace(state, id);
        states.push_back(std::move(state));
        prev.push_back(prev_id);
        rows.push_back(std::move(witness_rows));
        return true;
    }
};

TemporalColoring assemble_witness(const Instance& inst, const std::vector<Layer>& layers,
                                  const std::vector<int>& last_rows, int last_prev) {
    std::vector<const std::vector<int>*> pieces;
    pieces.push_back(&last_rows);
    int id = last_prev;
    for (std::size_t layer = layers.size(); layer-- > 0;) {
        pieces.push_back(&layers[layer].rows[id]);
        id = layers[layer].prev[id];
    }

    TemporalColoring col;
    col.n = inst.graph.n;
    col.lifetime = inst.graph.lifetime;
    col.k = inst.k;
    col.cells.reserve(static_cast<std::size_t>(col.n) * col.lifetime);
    for (std::size_t i = pieces.size(); i-- > 0;)
        col.cells.insert(col.cells.end(), pieces[i]->begin(), pieces[i]->end());
    if (col.cells.size() != static_cast<std::size_t>(col.n) * col.lifetime)
        throw std::logic_error("witness rows do not cover the lifetime");
    return col;
}

SolveResult solve_single_window(const Instance& inst, const SolverOptions& options) {
    SolveResult result;
    enumerate_window_colorings(
        inst.graph, WindowRange{1, inst.graph.lifetime}, inst.delta, inst.k,
        options.budget.max_window_colorings, [&](const WindowColoring& wc) {
            result.yes = true;
            if (options.want_witness)
                result.witness =
                    TemporalColoring{inst.graph.n, inst.graph.lifetime, inst.k, wc.cells};
            return false; // first hit decides
        });
    return result;
}

} // namespace

SolveResult solve_decision(const Instance& inst, const SolverOptions& options) {
    validate_instance(inst);
    if (options.threads < 1)
        throw std::invalid_argument("threads must be at least 1");
    const TemporalGraph& g = inst.graph;
    const int delta = inst.delta;
    const int T = g.lifetime;
    const std::size_t n = static_cast<std::size_t>(g.n);

    if (delta == T && options.use_fast_path) {
        std::int64_t enumeration =
            saturating_pow(inst.k, static_cast<std::int64_t>(g.n) * count_nontrivial(g, 1, T));
        int m = static_cast<int>(g.edges.size());
        bool dp_fits = m <= 62 && (std::int64_t{1} << m) <= options.budget.max_states;
        if (enumeration > options.budget.max_window_colorings && dp_fits) {
            OracleBudget dp_budget{options.budget.max_window_colorings,
                                   options.budget.max_states};
            OracleDecision d = temporal_coloring_dp(inst, dp_budget);
            SolveResult result;
            result.yes = d.yes;
            if (d.yes && options.want_witness)
                result.witness = std::move(d.witness);
            return result;
        }
    }

    std::vector<WindowRange> windows = solver_windows(T, delta);
    if (windows.size() == 1)
        return solve_single_window(inst, options);

    const std::size_t overlap_cells = static_cast<std::size_t>(delta) * n;
    std::vector<Layer> layers;

    // Layer 0: full enumeration of the first window.
    layers.emplace_back();
    enumerate_window_colorings(
        g, windows[0], delta, inst.k, options.budget.max_window_colorings,
        [&](const WindowColoring& wc) {
            std::vector<int> state(wc.cells.end() - overlap_cells, wc.cells.end());
            layers[0].insert(std::move(state), -1,
                             options.want_witness ? wc.cells : std::vector<int>{},
                             options.budget.max_states);
            return true;
        });

    for (std::size_t w = 1; w < windows.size(); ++w) {
        const WindowRange range = windows[w];
        const bool last = w + 1 == windows.size();
        const Layer& prev_layer = layers.back();
        if (prev_layer.states.empty())
            return {};

        RangeChecker checker(g, range, delta);
        std::vector<std::size_t> free_cells = free_cells_of(g, range, delta);
        const std::size_t fresh_cells = static_cast<std::size_t>(range.length() - delta) * n;

        Layer next_layer;
        std::int64_t count = 0;
        std::vector<int> cells(static_cast<std::size_t>(range.length()) * n, 1);

        for (int prev_id = 0; prev_id < static_cast<int>(prev_layer.states.size()); ++prev_id) {
            std::copy(prev_layer.states[prev_id].begin(), prev_layer.states[prev_id].end(),
                      cells.begin());
            std::fill(cells.begin() + overlap_cells, cells.end(), 1);

            do {
                if (++count > options.budget.max_window_colorings)
                    throw BudgetExceeded(
                        "window [" + std::to_string(range.first) + ", " +
                        std::to_string(range.last) + "] passed " +
                        std::to_string(options.budget.max_window_colorings) +
                        " enumerated colorings");
                if (checker.proper(cells)) {
                    if (last) {
                        SolveResult result;
                        result.yes = true;
                        if (options.want_witness) {
                            std::vector<int> fresh(cells.end() - fresh_cells, cells.end());
                            result.witness = assemble_witness(inst, layers, fresh, prev_id);
                        }
                        return result;
                    }
                    std::vector<int> state(cells.end() - overlap_cells, cells.end());
                    std::vector<int> fresh;
                    if (options.want_witness)
                        fresh.assign(cells.end() - fresh_cells, cells.end());
                    next_layer.insert(std::move(state), prev_id, std::move(fresh),
                                      options.budget.max_states);
                }
            } while (advance(cells, free_cells, inst.k));
        }

        if (last)
            return {}; // no extension of any state survived
        layers.push_back(std::move(next_layer));
    }
    return {};
}

MinimizeOutcome minimize(const TemporalGraph& g, int delta, const SolverOptions& options) {
    validate_graph(g);
    for (int k = 1;; ++k) {
        SolveResult r = solve_decision(Instance{g, delta, k}, options);
        if (r.yes)
            return {k, std::move(r.witness)};
        if (k >= g.n)
            throw std::logic_error("n colors must always suffice");
    }
}

} // namespace tempocol
