#include "tempocol/reductions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace tempocol {

namespace {

// Collects (pair, slot) activations in any order; duplicates are fine.
struct EdgeAccum {
    std::map<VertexPair, std::set<int>> slots;

    void add(int u, int v, int t) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::logic_error("loop edge in construction");
        slots[{u, v}].insert(t);
    }

    TemporalGraph graph(int n, int lifetime) const {
        TemporalGraph g;
        g.n = n;
        g.lifetime = lifetime;
        for (const auto& [pair, labels] : slots) {
            TimeEdge e;
            e.u = pair.first;
            e.v = pair.second;
            e.labels.assign(labels.begin(), labels.end());
            g.edges.push_back(std::move(e));
        }
        validate_graph(g);
        return g;
    }
};

int flip(int c) { return c == 1 ? 2 : 1; }

} // namespace

TemporalGraph random_instance(int n, int lifetime, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_instance: n must be positive");
    if (lifetime < 0) throw std::invalid_argument("random_instance: negative lifetime");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_instance: p outside [0, 1]");
    std::mt19937_64 rng(seed);
    TemporalGraph g;
    g.n = n;
    g.lifetime = lifetime;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            TimeEdge e;
            e.u = u;
            e.v = v;
            for (int t = 1; t <= lifetime; ++t) {
                double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (x < p) e.labels.push_back(t);
            }
            if (!e.labels.empty()) g.edges.push_back(std::move(e));
        }
    }
    validate_graph(g);
    return g;
}

Instance from_4coloring(const StaticGraph& g) {
    validate_static_graph(g);
    if (g.n < 2) throw std::invalid_argument("from_4coloring: need at least two vertices");
    std::vector<VertexPair> missing = non_edges(g);
    int lifetime = 2 + static_cast<int>(missing.size());
    EdgeAccum acc;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            acc.add(u, v, 1);
            acc.add(u, v, 2);
        }
    int slot = 3;
    for (const auto& [u, v] : missing) acc.add(u, v, slot++);
    return Instance{acc.graph(g.n, lifetime), lifetime, 2};
}

TemporalColoring witness_from_4coloring(const StaticGraph& g, const std::vector<int>& colors) {
    validate_static_graph(g);
    if (g.n < 2) throw std::invalid_argument("witness_from_4coloring: need at least two vertices");
    if (static_cast<int>(colors.size()) != g.n)
        throw std::invalid_argument("witness_from_4coloring: one color per vertex expected");
    for (int c : colors)
        if (c < 1 || c > 4)
            throw std::invalid_argument("witness_from_4coloring: colors must lie in [1, 4]");
    for (const auto& [u, v] : g.edges)
        if (colors[u] == colors[v])
            throw std::invalid_argument("witness_from_4coloring: coloring is not proper");
    std::vector<VertexPair> missing = non_edges(g);
    int lifetime = 2 + static_cast<int>(missing.size());
    TemporalColoring tc = make_constant_coloring(g.n, lifetime, 2, 1);
    for (int v = 0; v < g.n; ++v) {
        tc.at(1, v) = (colors[v] <= 2) ? 1 : 2;
        tc.at(2, v) = (colors[v] == 1 || colors[v] == 3) ? 1 : 2;
    }
    for (int i = 0; i < static_cast<int>(missing.size()); ++i) {
        tc.at(3 + i, missing[i].first) = 1;
        tc.at(3 + i, missing[i].second) = 2;
    }
    return tc;
}

namespace {

struct Occurrence {
    int var;    // 1-based
    bool pos;
    int index;  // 1..4, which of the variable's four occurrences this is
};

// Per clause: the three literals with their occurrence ranks.
std::vector<std::array<Occurrence, 3>> occurrence_table(const CnfFormula& f) {
    std::vector<int> seen(f.num_vars + 1, 0);
    std::vector<std::array<Occurrence, 3>> table(f.clauses.size());
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (int s = 0; s < 3; ++s) {
            int lit = f.clauses[c][s];
            int var = lit > 0 ? lit : -lit;
            table[c][s] = Occurrence{var, lit > 0, ++seen[var]};
        }
    return table;
}

} // namespace

Instance from_exact34sat_tc(const CnfFormula& f) {
    validate_formula(f);
    if (!is_exact34(f)) throw std::invalid_argument("from_exact34sat_tc: formula is not Exact (3,4)");
    int n = f.num_vars;
    int m = static_cast<int>(f.clauses.size());
    auto table = occurrence_table(f);

    // w_l -> l - 1; variable i: cycle vertex v^(j) -> 4 + 9i + j - 1, hub
    // u -> 4 + 9i + 8; clause j hub -> 4 + 9n + j.
    auto wv = [](int l) { return l - 1; };
    auto cyc = [](int i, int j) { return 4 + 9 * i + j - 1; };
    auto vhub = [](int i) { return 4 + 9 * i + 8; };
    auto chub = [n](int c) { return 4 + 9 * n + c; };

    EdgeAccum acc;
    for (int i = 0; i < n; ++i) {
        int t = i + 1;
        for (int j = 1; j <= 8; ++j) acc.add(cyc(i, j), cyc(i, j % 8 + 1), t);
        for (int l = 1; l <= 4; ++l) {
            acc.add(cyc(i, 2 * l - 1), wv(l), t);
            acc.add(cyc(i, 2 * l), wv(l), t);
            acc.add(vhub(i), wv(l), t);
        }
    }
    for (int c = 0; c < m; ++c) {
        int t1 = n + 2 * c + 1;
        int t2 = n + 2 * c + 2;
        for (int l = 1; l <= 4; ++l) acc.add(chub(c), wv(l), t1);
        std::array<int, 3> tri{};
        for (int s = 0; s < 3; ++s) {
            const Occurrence& oc = table[c][s];
            int i = oc.var - 1;
            int l = oc.index;
            acc.add(wv(l), cyc(i, 2 * l - 1), t1);
            acc.add(wv(l), cyc(i, 2 * l), t1);
            tri[s] = cyc(i, oc.pos ? 2 * l - 1 : 2 * l);
        }
        for (int s = 0; s < 3; ++s)
            for (int r = s + 1; r < 3; ++r) {
                acc.add(tri[s], tri[r], t1);
                acc.add(tri[s], tri[r], t2);
            }
    }
    int lifetime = n + 2 * m;
    return Instance{acc.graph(4 + 9 * n + m, lifetime), lifetime, 2};
}

namespace {

// Vertex layout shared by the T = 3 construction and its witnesses.
struct SwLayout {
    int n, m;
    int var_v(int i, int j) const { return 5 * i + j - 1; }                 // j in 1..5
    int core(int c, int j) const { return 5 * n + 18 * c + j - 1; }        // j in 1..3
    int ext(int c, int j, int i) const { return 5 * n + 18 * c + 3 + 2 * (j - 1) + i - 1; }
    int aux(int c, int j, int a, int b) const {
        // order (1,1,1) (1,1,2) (1,2,1) per j
        int off = (a == 1) ? (b - 1) : 2;
        return 5 * n + 18 * c + 9 + 3 * (j - 1) + off;
    }
    int total() const { return 5 * n + 18 * m; }
};

} // namespace

Instance from_exact34sat_sw(const CnfFormula& f) {
    validate_formula(f);
    if (!is_exact34(f)) throw std::invalid_argument("from_exact34sat_sw: formula is not Exact (3,4)");
    SwLayout ly{f.num_vars, static_cast<int>(f.clauses.size())};

    EdgeAccum acc;
    for (int i = 0; i < ly.n; ++i) {
        for (int t = 1; t <= 3; ++t) {
            acc.add(ly.var_v(i, 1), ly.var_v(i, 2), t);
            acc.add(ly.var_v(i, 2), ly.var_v(i, 3), t);
        }
        acc.add(ly.var_v(i, 1), ly.var_v(i, 3), 2);
        acc.add(ly.var_v(i, 3), ly.var_v(i, 4), 3);
        acc.add(ly.var_v(i, 4), ly.var_v(i, 5), 3);
        acc.add(ly.var_v(i, 1), ly.var_v(i, 5), 3);
    }
    for (int c = 0; c < ly.m; ++c) {
        for (int t = 1; t <= 3; ++t) {
            acc.add(ly.core(c, 1), ly.core(c, 2), t);
            acc.add(ly.core(c, 2), ly.core(c, 3), t);
            acc.add(ly.core(c, 1), ly.core(c, 3), t);
            for (int j = 1; j <= 3; ++j) acc.add(ly.ext(c, j, 1), ly.ext(c, j, 2), t);
        }
        acc.add(ly.core(c, 1), ly.ext(c, 1, 1), 2);
        acc.add(ly.core(c, 2), ly.ext(c, 1, 2), 2);
        acc.add(ly.core(c, 2), ly.ext(c, 2, 1), 2);
        acc.add(ly.core(c, 3), ly.ext(c, 2, 2), 2);
        acc.add(ly.core(c, 3), ly.ext(c, 3, 1), 2);
        acc.add(ly.core(c, 1), ly.ext(c, 3, 2), 2);
        for (int j = 1; j <= 3; ++j) {
            acc.add(ly.aux(c, j, 1, 1), ly.aux(c, j, 1, 2), 3);
            acc.add(ly.aux(c, j, 1, 2), ly.ext(c, j, 1), 3);
            acc.add(ly.aux(c, j, 2, 1), ly.ext(c, j, 2), 3);
        }
    }
    auto table = occurrence_table(f);
    for (int c = 0; c < ly.m; ++c)
        for (int j = 1; j <= 3; ++j) {
            const Occurrence& oc = table[c][j - 1];
            int i = oc.var - 1;
            int a = oc.pos ? ly.var_v(i, 2) : ly.var_v(i, 1);
            int b = oc.pos ? ly.var_v(i, 3) : ly.var_v(i, 2);
            acc.add(a, ly.aux(c, j, 1, 1), 3);
            acc.add(b, ly.aux(c, j, 2, 1), 3);
        }
    return Instance{acc.graph(ly.total(), 3), 2, 2};
}

namespace {

int satisfied_position(const CnfFormula& f, const std::vector<bool>& assignment, int c) {
    for (int s = 0; s < 3; ++s) {
        int lit = f.clauses[c][s];
        int var = lit > 0 ? lit : -lit;
        if (assignment[var - 1] == (lit > 0)) return s + 1;
    }
    throw std::invalid_argument("assignment does not satisfy the formula");
}

// Core triangle edges by index: e_1 = {1,2}, e_2 = {2,3}, e_3 = {3,1}.
std::pair<int, int> core_edge(int j) {
    if (j == 1) return {1, 2};
    if (j == 2) return {2, 3};
    return {3, 1};
}

int third_core(int j) { return j == 1 ? 3 : (j == 2 ? 1 : 2); }

// Rows 1..3 of the T = 3 witness written into rows base+1..base+3 of tc.
void fill_sw_rows(TemporalColoring& tc, int base, const CnfFormula& f,
                  const std::vector<bool>& assignment, const SwLayout& ly,
                  std::vector<int>* jstar_out) {
    auto table = occurrence_table(f);
    for (int i = 0; i < ly.n; ++i) {
        bool val = assignment[i];
        tc.at(base + 1, ly.var_v(i, 2)) = 1;
        for (int j : {1, 3, 4, 5}) tc.at(base + 1, ly.var_v(i, j)) = 2;
        if (val) {
            tc.at(base + 2, ly.var_v(i, 1)) = 1;
            tc.at(base + 2, ly.var_v(i, 2)) = 1;
            for (int j : {3, 4, 5}) tc.at(base + 2, ly.var_v(i, j)) = 2;
            int r3[5] = {1, 2, 2, 1, 2};
            for (int j = 1; j <= 5; ++j) tc.at(base + 3, ly.var_v(i, j)) = r3[j - 1];
        } else {
            tc.at(base + 2, ly.var_v(i, 2)) = 1;
            tc.at(base + 2, ly.var_v(i, 3)) = 1;
            for (int j : {1, 4, 5}) tc.at(base + 2, ly.var_v(i, j)) = 2;
            int r3[5] = {1, 1, 2, 1, 2};
            for (int j = 1; j <= 5; ++j) tc.at(base + 3, ly.var_v(i, j)) = r3[j - 1];
        }
    }
    for (int c = 0; c < ly.m; ++c) {
        int js = satisfied_position(f, assignment, c);
        if (jstar_out) (*jstar_out)[c] = js;
        for (int j = 1; j <= 3; ++j) {
            tc.at(base + 1, ly.core(c, j)) = (j == js) ? 1 : 2;
            tc.at(base + 3, ly.core(c, j)) = (j == js) ? 1 : 2;
            tc.at(base + 1, ly.ext(c, j, 1)) = 1;
            tc.at(base + 1, ly.ext(c, j, 2)) = 2;
            tc.at(base + 1, ly.aux(c, j, 1, 1)) = 1;
            tc.at(base + 1, ly.aux(c, j, 1, 2)) = 1;
            tc.at(base + 1, ly.aux(c, j, 2, 1)) = 1;
            tc.at(base + 2, ly.aux(c, j, 1, 1)) = 1;
            tc.at(base + 2, ly.aux(c, j, 1, 2)) = 1;
            tc.at(base + 2, ly.aux(c, j, 2, 1)) = 1;
        }
        auto [ea, eb] = core_edge(js);
        tc.at(base + 2, ly.core(c, ea)) = 1;
        tc.at(base + 2, ly.core(c, eb)) = 1;
        tc.at(base + 2, ly.core(c, third_core(js))) = 2;
        // extension vertices mirror their slot 2 core neighbour, flipped
        int nbr[3][2] = {{1, 2}, {2, 3}, {3, 1}};
        for (int j = 1; j <= 3; ++j) {
            tc.at(base + 2, ly.ext(c, j, 1)) = flip(tc.at(base + 2, ly.core(c, nbr[j - 1][0])));
            tc.at(base + 2, ly.ext(c, j, 2)) = flip(tc.at(base + 2, ly.core(c, nbr[j - 1][1])));
        }
        for (int j = 1; j <= 3; ++j) {
            const Occurrence& oc = table[c][j - 1];
            int i = oc.var - 1;
            int a = oc.pos ? ly.var_v(i, 2) : ly.var_v(i, 1);
            int b = oc.pos ? ly.var_v(i, 3) : ly.var_v(i, 2);
            int ca = tc.at(base + 3, a);
            int cb = tc.at(base + 3, b);
            tc.at(base + 3, ly.aux(c, j, 1, 1)) = flip(ca);
            tc.at(base + 3, ly.aux(c, j, 1, 2)) = ca;
            tc.at(base + 3, ly.ext(c, j, 1)) = flip(ca);
            tc.at(base + 3, ly.aux(c, j, 2, 1)) = flip(cb);
            tc.at(base + 3, ly.ext(c, j, 2)) = cb;
        }
    }
}

} // namespace

TemporalColoring witness_from_assignment(const CnfFormula& f, const std::vector<bool>& assignment) {
    validate_formula(f);
    if (!is_exact34(f))
        throw std::invalid_argument("witness_from_assignment: formula is not Exact (3,4)");
    if (static_cast<int>(assignment.size()) != f.num_vars)
        throw std::invalid_argument("witness_from_assignment: one value per variable expected");
    SwLayout ly{f.num_vars, static_cast<int>(f.clauses.size())};
    TemporalColoring tc = make_constant_coloring(ly.total(), 3, 2, 1);
    fill_sw_rows(tc, 0, f, assignment, ly, nullptr);
    return tc;
}

Instance compose_and(const std::vector<CnfFormula>& formulas) {
    if (formulas.empty()) throw std::invalid_argument("compose_and: need at least one formula");
    for (const CnfFormula& f : formulas) {
        validate_formula(f);
        if (!is_exact34(f)) throw std::invalid_argument("compose_and: formula is not Exact (3,4)");
        if (f.num_vars != formulas[0].num_vars ||
            f.clauses.size() != formulas[0].clauses.size())
            throw std::invalid_argument("compose_and: formulas must share variable and clause counts");
    }
    int blocks = static_cast<int>(formulas.size());
    SwLayout ly{formulas[0].num_vars, static_cast<int>(formulas[0].clauses.size())};
    EdgeAccum acc;
    for (int b = 0; b < blocks; ++b) {
        Instance block = from_exact34sat_sw(formulas[b]);
        for (const TimeEdge& e : block.graph.edges)
            for (int t : e.labels) {
                acc.add(e.u, e.v, 5 * b + t);
                if (t == 1) {
                    acc.add(e.u, e.v, 5 * b + 4);
                    acc.add(e.u, e.v, 5 * b + 5);
                }
            }
    }
    return Instance{acc.graph(ly.total(), 5 * blocks), 2, 2};
}

TemporalColoring compose_and_witness(const std::vector<CnfFormula>& formulas,
                                     const std::vector<std::vector<bool>>& assignments) {
    if (formulas.empty()) throw std::invalid_argument("compose_and_witness: need at least one formula");
    if (assignments.size() != formulas.size())
        throw std::invalid_argument("compose_and_witness: one assignment per formula expected");
    for (const CnfFormula& f : formulas) {
        validate_formula(f);
        if (!is_exact34(f))
            throw std::invalid_argument("compose_and_witness: formula is not Exact (3,4)");
        if (f.num_vars != formulas[0].num_vars ||
            f.clauses.size() != formulas[0].clauses.size())
            throw std::invalid_argument("compose_and_witness: formulas must share variable and clause counts");
    }
    int blocks = static_cast<int>(formulas.size());
    SwLayout ly{formulas[0].num_vars, static_cast<int>(formulas[0].clauses.size())};
    for (const auto& a : assignments)
        if (static_cast<int>(a.size()) != ly.n)
            throw std::invalid_argument("compose_and_witness: one value per variable expected");

    TemporalColoring tc = make_constant_coloring(ly.total(), 5 * blocks, 2, 1);
    std::vector<std::vector<int>> jstar(blocks, std::vector<int>(ly.m, 0));
    for (int b = 0; b < blocks; ++b)
        fill_sw_rows(tc, 5 * b, formulas[b], assignments[b], ly, &jstar[b]);

    // Bridge rows 4 and 5 of each block: copies of the row 1 pattern except
    // for the core triangles, where one edge is made monochromatic. Row 4
    // reuses the block's satisfied edge; row 5 picks the lowest edge that
    // avoids both row 4 and the edge the next block needs bichromatic.
    for (int b = 0; b < blocks; ++b) {
        for (int row : {5 * b + 4, 5 * b + 5}) {
            for (int i = 0; i < ly.n; ++i) {
                tc.at(row, ly.var_v(i, 2)) = 1;
                for (int j : {1, 3, 4, 5}) tc.at(row, ly.var_v(i, j)) = 2;
            }
            for (int c = 0; c < ly.m; ++c)
                for (int j = 1; j <= 3; ++j) {
                    tc.at(row, ly.ext(c, j, 1)) = 1;
                    tc.at(row, ly.ext(c, j, 2)) = 2;
                    tc.at(row, ly.aux(c, j, 1, 1)) = 1;
                    tc.at(row, ly.aux(c, j, 1, 2)) = 1;
                    tc.at(row, ly.aux(c, j, 2, 1)) = 1;
                }
        }
        for (int c = 0; c < ly.m; ++c) {
            int m4 = jstar[b][c];
            int m5 = 1;
            if (b + 1 < blocks) {
                int avoid = jstar[b + 1][c] % 3 + 1;  // complement of the next block's edge
                while (m5 == m4 || m5 == avoid) ++m5;
            } else {
                while (m5 == m4) ++m5;
            }
            for (auto [row, mono] : {std::pair{5 * b + 4, m4}, std::pair{5 * b + 5, m5}}) {
                auto [ea, eb] = core_edge(mono);
                tc.at(row, ly.core(c, ea)) = 1;
                tc.at(row, ly.core(c, eb)) = 1;
                tc.at(row, ly.core(c, third_core(mono))) = 2;
            }
        }
    }
    return tc;
}

Instance from_1in3sat(const TripleSystem& ts) {
    validate_triples(ts);
    if (ts.triples.empty()) throw std::invalid_argument("from_1in3sat: need at least one triple");
    int n = ts.num_vars;
    int m = static_cast<int>(ts.triples.size());
    auto uv = [](int j) { return j - 1; };          // u_1..u_4
    auto var = [](int i) { return 4 + i; };         // v_i, i 0-based
    auto wv = [n](int j) { return 4 + n + j - 1; }; // w_1..w_13

    EdgeAccum acc;
    int lifetime = 4 * m;
    for (int t = 1; t <= lifetime; ++t) {
        int type = (t - 1) % 4 + 1;
        if (type == 1 || type == 3) {
            acc.add(uv(1), uv(2), t);
            acc.add(uv(1), uv(3), t);
            acc.add(uv(2), uv(4), t);
        } else {
            acc.add(uv(3), uv(4), t);
        }
        for (int i = 0; i < n; ++i) {
            acc.add(uv(3), var(i), t);
            acc.add(uv(4), var(i), t);
        }
        for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
            acc.add(wv(a), wv(b), t);
            acc.add(wv(a + 10), wv(b + 10), t);
        }
        acc.add(wv(4), wv(7), t);
        acc.add(wv(5), wv(8), t);
        acc.add(wv(6), wv(9), t);
        if (type == 2) {
            acc.add(wv(1), wv(4), t);
            acc.add(wv(2), wv(5), t);
            acc.add(wv(3), wv(6), t);
            acc.add(uv(3), wv(10), t);
            acc.add(wv(7), wv(10), t);
            acc.add(wv(8), wv(10), t);
            acc.add(wv(9), wv(10), t);
        }
        if (type == 3) {
            acc.add(wv(4), wv(9), t);
            acc.add(wv(5), wv(7), t);
            acc.add(wv(6), wv(8), t);
            acc.add(wv(7), wv(11), t);
            acc.add(wv(8), wv(12), t);
            acc.add(wv(9), wv(13), t);
        }
    }
    for (int j = 0; j < m; ++j) {
        int t = 4 * j + 2;
        for (int s = 0; s < 3; ++s) acc.add(var(ts.triples[j][s] - 1), wv(s + 1), t);
    }
    return Instance{acc.graph(17 + n, lifetime), 2, 2};
}

} // namespace tempocol
