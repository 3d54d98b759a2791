#ifndef TEMPOCOL_REDUCTIONS_HPP
#define TEMPOCOL_REDUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "tempocol/cnf.hpp"
#include "tempocol/coloring.hpp"
#include "tempocol/static_graph.hpp"
#include "tempocol/temporal_graph.hpp"

// Instance generators. Each family fixes a deterministic vertex and slot
// layout, documented next to its builder; tests and the CLI rely on it.

namespace tempocol {

// Every (pair, slot) cell is active independently with probability p; pairs
// in (u, v) order, slots ascending, one RNG draw per cell.
TemporalGraph random_instance(int n, int lifetime, double p, std::uint64_t seed);

// (delta = T, k = 2) instance that is a yes iff g is 4-colorable. Slots 1, 2
// hold the complete graph; every non-edge of g (in (u, v) order) gets a
// private slot 3, 4, ...; T = n(n-1)/2 - |E| + 2. Needs n >= 2.
Instance from_4coloring(const StaticGraph& g);

// Witness for from_4coloring(g) built from a proper coloring of g with
// colors in [1, 4]: slot 1 splits {1,2} vs {3,4}, slot 2 splits {1,3} vs
// {2,4}, and each private slot colors its non-edge 1/2 with everyone else 1.
TemporalColoring witness_from_4coloring(const StaticGraph& g, const std::vector<int>& colors);

// (delta = T, k = 2) instance that is a yes iff the Exact (3,4) formula is
// satisfiable. Layout: w_1..w_4 at 0..3; variable i at 4+9i..4+9i+8 (cycle
// vertices v^(1..8), then u); clause j at 4+9n+j. Slots: variable i at i+1,
// clause j at n+2j+1 and n+2j+2. Every variable snapshot has exactly 20
// edges, clause snapshots at most 13.
Instance from_exact34sat_tc(const CnfFormula& f);

// (T = 3, delta = 2, k = 2) instance that is a yes iff the Exact (3,4)
// formula is satisfiable; |V| = 5n + 18m. Layout: variable i occupies
// 5i..5i+4 (v^(1..5)); clause j occupies 5n+18j..5n+18j+17 as core v^(1..3),
// extension (1,1),(1,2),(2,1),(2,2),(3,1),(3,2), auxiliary (1,1,1),(1,1,2),
// (1,2,1),(2,1,1),(2,1,2),(2,2,1),(3,1,1),(3,1,2),(3,2,1).
Instance from_exact34sat_sw(const CnfFormula& f);

// Proper coloring of from_exact34sat_sw(f) derived from a satisfying
// assignment. Throws when the assignment does not satisfy f.
TemporalColoring witness_from_assignment(const CnfFormula& f, const std::vector<bool>& assignment);

// (T = 5*l, delta = 2, k = 2) conjunction of l Exact (3,4) formulas over a
// shared vertex set (all must agree on n and m): block b holds the T = 3
// construction for formula b at slots 5b+1..5b+3 and copies of its first
// snapshot at slots 5b+4, 5b+5. Yes iff every formula is satisfiable.
Instance compose_and(const std::vector<CnfFormula>& formulas);

// Witness for compose_and from per-formula satisfying assignments; block
// rows come from witness_from_assignment plus deterministic bridge rows for
// slots 4 and 5 of each block.
TemporalColoring compose_and_witness(const std::vector<CnfFormula>& formulas,
                                     const std::vector<std::vector<bool>>& assignments);

// (T = 4m, delta = 2, k = 2) instance from a positive 1-in-3 system with m
// triples. Layout: u_1..u_4 at 0..3, variable i at 4+i, w_1..w_13 at
// 4+n..16+n. Snapshot types cycle 1,2,3,4 by slot; clause j adds its three
// variable edges to slot 4j-2. The 17 vertices other than the v_i cover all
// edges.
Instance from_1in3sat(const TripleSystem& ts);

} // namespace tempocol

#endif
