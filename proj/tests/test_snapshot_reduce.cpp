#include "doctest.h"

#include <algorithm>
#include <set>

#include "tempocol/oracles.hpp"
#include "tempocol/reductions.hpp"
#include "tempocol/snapshot_reduce.hpp"
#include "tempocol/verifier.hpp"
#include "support.hpp"

using namespace tempocol;
using support::make_graph;
using support::single_edge;

namespace {

// single edge active at `pattern` offsets of every period, tiled `repeats` times
TemporalGraph tiled_edge(const std::vector<int>& pattern, int period, int repeats) {
    std::vector<int> labels;
    for (int r = 0; r < repeats; ++r)
        for (int off : pattern) labels.push_back(off + period * r);
    return support::single_edge(labels, period * repeats);
}

int nontrivial_in(const TemporalGraph& g, int from, int to) {
    int count = 0;
    for (int t = from; t <= to; ++t)
        if (!snapshot_trivial(g, t)) ++count;
    return count;
}

} // namespace

TEST_CASE("no window above the trigger means no change") {
    TemporalGraph g = tiled_edge({1}, 1, 8); // 8 copies = 2n^2 exactly, not above
    ReduceResult rr = reduce_snapshots({g, 8, 2});
    CHECK(rr.replaced_slots.empty());
    CHECK(rr.instance.graph == g);

    // two alternating snapshots, each at most 8 copies per window
    TemporalGraph alt = make_graph(3, 16, {{0, 1, std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15}},
                                           {1, 2, std::vector<int>{2, 4, 6, 8, 10, 12, 14, 16}}});
    ReduceResult ralt = reduce_snapshots({alt, 16, 2});
    CHECK(ralt.replaced_slots.empty());
    CHECK(ralt.instance.graph == alt);
}

TEST_CASE("long constant run is thinned and stays solvable") {
    TemporalGraph g = tiled_edge({1}, 1, 200);
    Instance inst{g, 200, 2};
    ReduceResult rr = reduce_snapshots(inst);
    CHECK(nontrivial_in(rr.instance.graph, 1, 200) <= 16); // 2 * 2^1 * 2^2
    CHECK_FALSE(rr.replaced_slots.empty());

    // the first and last n^2 = 4 copies survive
    for (int t : {1, 2, 3, 4, 197, 198, 199, 200})
        CHECK(!std::binary_search(rr.replaced_slots.begin(), rr.replaced_slots.end(), t));

    SolveResult solved = solve_fpt(inst);
    CHECK(solved.yes);
    REQUIRE(solved.witness.has_value());
    CHECK(is_proper(inst, *solved.witness)); // witness speaks about the original

    CHECK_FALSE(solve_fpt({g, 200, 1}).yes);
}

TEST_CASE("reduction is idempotent") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        TemporalGraph g = tiled_edge({1, 2}, seed % 2 ? 3 : 4, 30);
        ReduceResult once = reduce_snapshots({g, g.lifetime, 2});
        ReduceResult twice = reduce_snapshots(once.instance);
        CHECK(twice.replaced_slots.empty());
        CHECK(twice.instance.graph == once.instance.graph);
    }
}

TEST_CASE("reduction preserves the full-window verdict") {
    for (int lifetime = 9; lifetime <= 12; ++lifetime) {
        for (unsigned mask = 1; mask < 8; ++mask) {
            std::vector<int> pattern;
            for (int b = 0; b < 3; ++b)
                if (mask & (1u << b)) pattern.push_back(b + 1);
            int repeats = lifetime / 3 + 1;
            TemporalGraph g = tiled_edge(pattern, 3, repeats);
            g = restrict_slots(g, [&] {
                std::vector<int> keep;
                for (int t = 1; t <= lifetime; ++t) keep.push_back(t);
                return keep;
            }());
            if (g.edges.empty()) continue;
            OracleBudget roomy;
            roomy.max_candidates = 40'000'000; // 2^(2*12) candidate tables
            for (int k = 1; k <= 2; ++k) {
                Instance inst{g, g.lifetime, k};
                CHECK(solve_fpt(inst).yes == brute_force_decision(inst, roomy).yes);
            }
        }
    }
}

TEST_CASE("reduction preserves verdicts of wider graphs") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        TemporalGraph base = random_instance(3, 4, 0.6, seed);
        if (base.edges.empty()) continue;
        // tile the 4-slot pattern 30 times
        TemporalGraph g;
        g.n = 3;
        g.lifetime = 120;
        for (const TimeEdge& e : base.edges) {
            TimeEdge tall{e.u, e.v, {}};
            for (int r = 0; r < 30; ++r)
                for (int t : e.labels) tall.labels.push_back(t + 4 * r);
            g.edges.push_back(tall);
        }
        validate_graph(g);
        for (int k = 2; k <= 3; ++k) {
            Instance inst{g, 120, k};
            ReduceResult rr = reduce_snapshots(inst);
            CHECK(temporal_coloring_dp(rr.instance).yes ==
                  temporal_coloring_dp(inst).yes);
        }
    }
}

TEST_CASE("sliding windows are each kept below the bound") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        TemporalGraph g = tiled_edge({1}, 1, 60 + static_cast<int>(seed));
        int delta = 20;
        ReduceResult rr = reduce_snapshots({g, delta, 2});
        const TemporalGraph& red = rr.instance.graph;
        for (int t = 1; t + delta - 1 <= red.lifetime; ++t)
            CHECK(nontrivial_in(red, t, t + delta - 1) <= 16);
        // second pass: stable
        CHECK(reduce_snapshots(rr.instance).replaced_slots.empty());
    }
}

TEST_CASE("sliding reduction keeps the answer") {
    TemporalGraph g = tiled_edge({1}, 1, 20);
    Instance inst{g, 5, 2}; // windows of 5, all above the n=2 trigger? 5 < 8: no firing
    ReduceResult rr = reduce_snapshots(inst);
    CHECK(rr.replaced_slots.empty()); // window holds only 5 copies

    Instance wide{g, 10, 2}; // 10 copies per window > 8
    ReduceResult fired = reduce_snapshots(wide);
    CHECK_FALSE(fired.replaced_slots.empty());

    // yes on both sides: endpoints colored apart in every remaining slot
    TemporalColoring apart;
    apart.n = 2;
    apart.lifetime = 20;
    apart.k = 2;
    for (int t = 0; t < 20; ++t) {
        apart.cells.push_back(1);
        apart.cells.push_back(2);
    }
    CHECK(is_proper(wide, apart));
    CHECK(is_proper(fired.instance, apart));

    Instance one{g, 10, 1};
    CHECK_FALSE(solve_fpt(one).yes);
}
