#ifndef TEMPOCOL_ORACLES_HPP
#define TEMPOCOL_ORACLES_HPP

#include <cstdint>

#include "tempocol/cnf.hpp"
#include "tempocol/coloring.hpp"
#include "tempocol/static_graph.hpp"
#include "tempocol/temporal_graph.hpp"

// Small reference solvers, written for obviousness rather than speed. They
// double-check the real solver in tests and back the `oracle` CLI command.

namespace tempocol {

struct OracleBudget {
    std::int64_t max_candidates = 1'000'000;  // full enumeration scans
    std::int64_t max_states = 10'000'000;     // covered-edge-set DP
};

struct OracleDecision {
    bool yes = false;
    TemporalColoring witness; // meaningful only when yes
};

struct OracleMinimize {
    int k_star = 1;
    TemporalColoring witness;
};

// Scan all k^(n*T) colorings in lexicographic cell order; on yes the witness
// is the lexicographically first proper coloring. Throws BudgetExceeded when
// k^(n*T) > max_candidates.
OracleDecision brute_force_decision(const Instance& inst, const OracleBudget& budget = {});

// Ascending scan over k = 1..n (the answer is monotone in k and n colors
// always suffice).
OracleMinimize brute_force_minimize(const TemporalGraph& g, int delta,
                                    const OracleBudget& budget = {});

// Exact solver for delta == lifetime: forward DP over slots whose state is
// the set of edges not yet properly colored. Needs 2^m <= max_states.
OracleDecision temporal_coloring_dp(const Instance& inst, const OracleBudget& budget = {});

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> assignment; // meaningful only when satisfiable
};

// Exhaustive assignment scan; at most 24 variables.
SatResult sat_bruteforce(const CnfFormula& f);

// Exhaustive scan for "exactly one of each triple is true"; at most 24
// variables.
SatResult one_in_three_bruteforce(const TripleSystem& ts);

// Exhaustive c-coloring scan of a static graph; needs c^n <= budget.
bool chromatic_at_most(const StaticGraph& g, int colors, std::int64_t budget = 10'000'000);

} // namespace tempocol

#endif
