#include "tempocol/oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "tempocol/errors.hpp"
#include "tempocol/numeric.hpp"

namespace tempocol {

namespace {

// Direct restatement of the sliding-window condition: for every window and
// every edge appearing in it, some active slot inside colors the endpoints
// differently. Precomputed once so the candidate scan stays tight.
struct WindowChecker {
    struct ActiveEdge {
        int u, v;
        std::vector<int> slots; // active slots inside the window
    };
    int n;
    std::vector<std::vector<ActiveEdge>> windows;

    WindowChecker(const TemporalGraph& g, int delta) : n(g.n) {
        for (int t = 1; t + delta - 1 <= g.lifetime; ++t) {
            std::vector<ActiveEdge> inside;
            for (const TimeEdge& e : g.edges) {
                ActiveEdge a{e.u, e.v, {}};
                for (int s : e.labels)
                    if (s >= t && s <= t + delta - 1)
                        a.slots.push_back(s);
                if (!a.slots.empty())
                    inside.push_back(std::move(a));
            }
            windows.push_back(std::move(inside));
        }
    }

    bool proper(const std::vector<int>& cells) const {
        for (const auto& window : windows) {
            for (const auto& e : window) {
                bool ok = false;
                for (int s : e.slots) {
                    std::size_t row = static_cast<std::size_t>(s - 1) * n;
                    if (cells[row + e.u] != cells[row + e.v]) {
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

// Advance the cell table to the next coloring in lexicographic order
// (rightmost cell varies fastest). Returns false after the last one.
bool next_candidate(std::vector<int>& cells, int k) {
    for (std::size_t i = cells.size(); i-- > 0;) {
        if (cells[i] < k) {
            ++cells[i];
            std::fill(cells.begin() + i + 1, cells.end(), 1);
            return true;
        }
    }
    return false;
}

} // namespace

OracleDecision brute_force_decision(const Instance& inst, const OracleBudget& budget) {
    validate_instance(inst);
    const TemporalGraph& g = inst.graph;
    std::int64_t cell_count = static_cast<std::int64_t>(g.n) * g.lifetime;
    std::int64_t total = saturating_pow(inst.k, cell_count);
    if (total > budget.max_candidates)
        throw BudgetExceeded("brute force needs " + std::to_string(total) +
                             " candidates, cap is " + std::to_string(budget.max_candidates));

    WindowChecker checker(g, inst.delta);
    std::vector<int> cells(static_cast<std::size_t>(cell_count), 1);
    do {
        if (checker.proper(cells)) {
            OracleDecision out;
            out.yes = true;
            out.witness = TemporalColoring{g.n, g.lifetime, inst.k, cells};
            return out;
        }
    } while (next_candidate(cells, inst.k));
    return {};
}

OracleMinimize brute_force_minimize(const TemporalGraph& g, int delta,
                                    const OracleBudget& budget) {
    for (int k = 1;; ++k) {
        OracleDecision d = brute_force_decision(Instance{g, delta, k}, budget);
        if (d.yes)
            return {k, d.witness};
        if (k >= g.n)
            throw std::logic_error("n colors must always suffice");
    }
}

OracleDecision temporal_coloring_dp(const Instance& inst, const OracleBudget& budget) {
    validate_instance(inst);
    const TemporalGraph& g = inst.graph;
    if (inst.delta != g.lifetime)
        throw std::invalid_argument("this solver handles delta == lifetime only");
    int m = static_cast<int>(g.edges.size());
    if (m > 62 || (std::int64_t{1} << m) > budget.max_states)
        throw BudgetExceeded("2^" + std::to_string(m) + " covered-edge states exceed the cap of " +
                             std::to_string(budget.max_states));

    using Mask = std::uint64_t;
    const Mask all = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;

    // Per slot: active edge ids and the vertices they touch.
    std::vector<std::vector<int>> active(g.lifetime + 1);
    std::vector<std::vector<int>> touched(g.lifetime + 1);
    for (int e = 0; e < m; ++e)
        for (int t : g.edges[e].labels)
            active[t].push_back(e);
    for (int t = 1; t <= g.lifetime; ++t) {
        std::vector<int> verts;
        for (int e : active[t]) {
            verts.push_back(g.edges[e].u);
            verts.push_back(g.edges[e].v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        touched[t] = std::move(verts);
    }

    struct Back {
        Mask prev;
        std::vector<int> row; // full row of n colors chosen at this slot
    };
    // levels[t] maps: uncovered-edge mask after slot t -> how it was reached.
    // std::map keeps iteration deterministic (ascending mask).
    std::vector<std::map<Mask, Back>> levels(g.lifetime + 1);
    levels[0].emplace(all, Back{});
    std::int64_t stored = 1;

    int reached_at = -1;
    for (int t = 1; t <= g.lifetime && reached_at < 0; ++t) {
        std::int64_t options = saturating_pow(inst.k, static_cast<std::int64_t>(touched[t].size()));
        if (options > budget.max_candidates)
            throw BudgetExceeded("slot " + std::to_string(t) + " needs " + std::to_string(options) +
                                 " per-slot colorings, cap is " +
                                 std::to_string(budget.max_candidates));
        std::vector<int> row(g.n, 1);
        for (const auto& [state, back] : levels[t - 1]) {
            (void)back;
            std::vector<int> choice(touched[t].size(), 1);
            while (true) {
                for (std::size_t i = 0; i < touched[t].size(); ++i)
                    row[touched[t][i]] = choice[i];
                Mask cleared = 0;
                for (int e : active[t])
                    if (row[g.edges[e].u] != row[g.edges[e].v])
                        cleared |= Mask{1} << e;
                Mask next = state & ~cleared;
                if (levels[t].find(next) == levels[t].end()) {
                    levels[t].emplace(next, Back{state, row});
                    if (++stored > budget.max_states)
                        throw BudgetExceeded("covered-edge states exceed the cap of " +
                                             std::to_string(budget.max_states));
                    if (next == 0) {
                        reached_at = t;
                        break;
                    }
                }
                if (!next_candidate(choice, inst.k))
                    break;
            }
            if (reached_at >= 0)
                break;
        }
        if (reached_at < 0 && levels[t].empty())
            break; // nothing reachable; cannot happen, but keeps the loop safe
    }

    if (reached_at < 0)
        return {};

    // Walk the backpointers; slots after reached_at are unconstrained.
    OracleDecision out;
    out.yes = true;
    out.witness = make_constant_coloring(g.n, g.lifetime, inst.k, 1);
    Mask state = 0;
    for (int t = reached_at; t >= 1; --t) {
        const Back& back = levels[t].at(state);
        for (int v = 0; v < g.n; ++v)
            out.witness.at(t, v) = back.row[v];
        state = back.prev;
    }
    return out;
}

SatResult sat_bruteforce(const CnfFormula& f) {
    validate_formula(f);
    if (f.num_vars > 24)
        throw std::invalid_argument("exhaustive SAT scan is limited to 24 variables");
    std::uint32_t limit = std::uint32_t{1} << f.num_vars;
    for (std::uint32_t a = 0; a < limit; ++a) {
        std::vector<bool> assignment(f.num_vars);
        for (int i = 0; i < f.num_vars; ++i)
            assignment[i] = (a >> i) & 1;
        if (evaluate(f, assignment))
            return {true, assignment};
    }
    return {};
}

SatResult one_in_three_bruteforce(const TripleSystem& ts) {
    validate_triples(ts);
    if (ts.num_vars > 24)
        throw std::invalid_argument("exhaustive scan is limited to 24 variables");
    std::uint32_t limit = std::uint32_t{1} << ts.num_vars;
    for (std::uint32_t a = 0; a < limit; ++a) {
        std::vector<bool> assignment(ts.num_vars);
        for (int i = 0; i < ts.num_vars; ++i)
            assignment[i] = (a >> i) & 1;
        bool ok = true;
        for (const auto& triple : ts.triples) {
            int trues = 0;
            for (int v : triple)
                trues += assignment[v - 1] ? 1 : 0;
            if (trues != 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return {true, assignment};
    }
    return {};
}

bool chromatic_at_most(const StaticGraph& g, int colors, std::int64_t budget) {
    validate_static_graph(g);
    if (colors < 1)
        throw std::invalid_argument("color count must be at least 1");
    std::int64_t total = saturating_pow(colors, g.n);
    if (total > budget)
        throw BudgetExceeded("coloring scan needs " + std::to_string(total) +
                             " candidates, cap is " + std::to_string(budget));
    std::vector<int> assignment(g.n, 1);
    do {
        bool proper = true;
        for (auto [u, v] : g.edges) {
            if (assignment[u] == assignment[v]) {
                proper = false;
                break;
            }
        }
        if (proper)
            return true;
    } while (next_candidate(assignment, colors));
    return false;
}

} // namespace tempocol
