// Command-line front end. Exactly one result line goes to stdout per query;
// warnings and errors go to stderr. Exit codes: 0 answer produced, 2 usage or
// input format error, 3 budget exceeded, 4 file I/O failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tempocol/cnf.hpp"
#include "tempocol/errors.hpp"
#include "tempocol/kernelize.hpp"
#include "tempocol/oracles.hpp"
#include "tempocol/reductions.hpp"
#include "tempocol/snapshot_reduce.hpp"
#include "tempocol/static_graph.hpp"
#include "tempocol/tg_io.hpp"
#include "tempocol/vc_approx.hpp"
#include "tempocol/verifier.hpp"
#include "tempocol/window_solver.hpp"

namespace {

using namespace tempocol;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoFailure("read failed on " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoFailure("write failed on " + path);
}

TemporalGraph load_graph(const std::string& path) {
    std::vector<std::string> warnings;
    TemporalGraph g = parse_temporal_graph(read_file(path), &warnings);
    for (const std::string& w : warnings) std::cerr << path << ": warning: " << w << "\n";
    return g;
}

// Emitted instances carry their parameters as a leading comment so the file
// is self-describing; the parser skips it.
std::string instance_text(const Instance& inst) {
    std::ostringstream ss;
    ss << "# delta=" << inst.delta << " k=" << inst.k << "\n"
       << serialize_temporal_graph(inst.graph);
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

void print_slots(const char* tag, const std::vector<int>& slots) {
    std::cout << tag;
    for (int t : slots) std::cout << ' ' << t;
    std::cout << '\n';
}

int bench_grid(bool wall);
int bench_kernel(bool wall);
int bench_reduce(bool wall);

struct BenchRow {
    std::string name;
    std::string n, lifetime, delta, k;
};

// Shared row runner: verdict comes from the body, budget overruns mark the
// cell and flip the exit code, timing prints only under --timing wall.
struct BenchTable {
    bool wall = false;
    bool budget_hit = false;

    BenchTable(bool w) : wall(w) {
        std::cout << "instance\tn\tT\tdelta\tk\tverdict\tmillis\n";
    }

    void row(const BenchRow& r, const std::function<std::string()>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict;
        try {
            verdict = body();
        } catch (const BudgetExceeded&) {
            verdict = "budget";
            budget_hit = true;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << r.name << '\t' << r.n << '\t' << r.lifetime << '\t' << r.delta << '\t'
                  << r.k << '\t' << verdict << '\t' << (wall ? std::to_string(ms) : "-")
                  << '\n';
    }
};

int bench_grid(bool wall) {
    BenchTable table(wall);
    for (int n = 1; n <= 3; ++n)
        for (int lifetime = 1; lifetime <= 4; ++lifetime)
            for (int delta = 1; delta <= lifetime; ++delta)
                for (int k = 1; k <= 2; ++k) {
                    std::uint64_t seed = static_cast<std::uint64_t>(n) * 1000000 +
                                         lifetime * 10000 + delta * 100 + k;
                    TemporalGraph g = random_instance(n, lifetime, 0.5, seed);
                    std::string name = "grid-n" + std::to_string(n) + "-T" +
                                       std::to_string(lifetime) + "-d" + std::to_string(delta) +
                                       "-k" + std::to_string(k);
                    table.row({name, std::to_string(n), std::to_string(lifetime),
                               std::to_string(delta), std::to_string(k)},
                              [&] {
                                  SolverOptions opt;
                                  opt.want_witness = false;
                                  return solve_decision(Instance{g, delta, k}, opt).yes
                                             ? "YES"
                                             : "NO";
                              });
                }
    return table.budget_hit ? 3 : 0;
}

int bench_kernel(bool wall) {
    BenchTable table(wall);
    for (int i = 0; i < 10; ++i) {
        TemporalGraph g = random_instance(4, 20, 0.3, 7000 + i);
        table.row({"kernel-" + std::to_string(i), "4", "20", "-", "-"}, [&] {
            KernelResult kr = kernelize(g);
            int m = static_cast<int>(g.edges.size());
            bool ok = kr.graph.lifetime <= std::min(g.lifetime, m) &&
                      static_cast<int>(kr.kept_slots.size()) == kr.graph.lifetime &&
                      kr.graph.edges.size() == g.edges.size();
            return ok ? "true" : "false";
        });
    }
    return table.budget_hit ? 3 : 0;
}

int bench_reduce(bool wall) {
    BenchTable table(wall);
    const std::vector<std::vector<int>> patterns = {{1}, {1, 2}, {1, 3}, {2, 4}, {1, 2, 3}};
    const int repeats = 40;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        TemporalGraph g;
        g.n = 2;
        g.lifetime = 4 * repeats;
        TimeEdge e;
        e.u = 0;
        e.v = 1;
        for (int r = 0; r < repeats; ++r)
            for (int t : patterns[i]) e.labels.push_back(t + 4 * r);
        g.edges.push_back(e);
        int delta = g.lifetime;
        table.row({"reduce-" + std::to_string(i), "2", std::to_string(g.lifetime),
                   std::to_string(delta), "2"},
                  [&] {
                      ReduceResult rr = reduce_snapshots(Instance{g, delta, 2});
                      int nontrivial = 0;
                      for (int t = 1; t <= rr.instance.graph.lifetime; ++t)
                          if (!snapshot_trivial(rr.instance.graph, t)) ++nontrivial;
                      bool ok = nontrivial <= 2 * 2 * 4; // 2 * 2^(n(n-1)/2) * n^2 for n=2
                      ok = ok && reduce_snapshots(rr.instance).replaced_slots.empty();
                      return ok ? "true" : "false";
                  });
    }
    return table.budget_hit ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sliding-window temporal graph coloring toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, coloring_path, witness_path;
    int delta = 0, k = 0, warn_k = 0;
    std::int64_t budget = 0;
    int threads = 1;
    bool tighten = false;

    auto* solve = app.add_subcommand("solve", "decide one (delta, k) instance");
    solve->add_option("-i,--input", in_path)->required();
    solve->add_option("--delta", delta)->required();
    solve->add_option("--k", k)->required();
    solve->add_option("--witness", witness_path);
    solve->add_option("--budget", budget);
    solve->add_option("--threads", threads);

    auto* minimize_cmd = app.add_subcommand("minimize", "smallest k admitting a proper coloring");
    minimize_cmd->add_option("-i,--input", in_path)->required();
    minimize_cmd->add_option("--delta", delta)->required();
    minimize_cmd->add_option("--witness", witness_path);
    minimize_cmd->add_option("--budget", budget);
    minimize_cmd->add_option("--threads", threads);

    auto* verify = app.add_subcommand("verify", "check a coloring file against an instance");
    verify->add_option("-i,--input", in_path)->required();
    verify->add_option("--delta", delta)->required();
    verify->add_option("-c,--coloring", coloring_path)->required();

    auto* kernel = app.add_subcommand("kernelize", "restrict to the matched slots of a maximum edge/slot matching");
    kernel->add_option("-i,--input", in_path)->required();
    kernel->add_option("-o,--output", out_path)->required();
    kernel->add_option("--k", warn_k);

    auto* reduce = app.add_subcommand("reduce", "thin out repeated snapshots inside every window");
    reduce->add_option("-i,--input", in_path)->required();
    reduce->add_option("--delta", delta)->required();
    reduce->add_option("-o,--output", out_path)->required();

    auto* approx = app.add_subcommand("approx", "vertex-cover based coloring, at most one color above optimum");
    approx->add_option("-i,--input", in_path)->required();
    approx->add_option("--delta", delta)->required();
    approx->add_option("--witness", witness_path);
    approx->add_flag("--tighten", tighten);
    approx->add_option("--budget", budget);
    approx->add_option("--threads", threads);

    auto* oracle = app.add_subcommand("oracle", "reference brute-force solvers");
    oracle->require_subcommand(1);
    auto* osolve = oracle->add_subcommand("solve", "exhaustive decision");
    osolve->add_option("-i,--input", in_path)->required();
    osolve->add_option("--delta", delta)->required();
    osolve->add_option("--k", k)->required();
    osolve->add_option("--witness", witness_path);
    osolve->add_option("--budget", budget);
    auto* ominimize = oracle->add_subcommand("minimize", "exhaustive minimum");
    ominimize->add_option("-i,--input", in_path)->required();
    ominimize->add_option("--delta", delta)->required();
    ominimize->add_option("--witness", witness_path);
    ominimize->add_option("--budget", budget);

    int gen_n = 0, gen_t = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 1;
    std::vector<std::string> gen_inputs;
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto* grandom = gen->add_subcommand("random", "independent (pair, slot) activations");
    grandom->add_option("--n", gen_n)->required();
    grandom->add_option("--t", gen_t)->required();
    grandom->add_option("--p", gen_p)->required();
    grandom->add_option("--seed", gen_seed);
    grandom->add_option("-o,--output", out_path);
    auto* g4col = gen->add_subcommand("from-4col", "4-colorability as temporal coloring (reads a T=1 .tg)");
    g4col->add_option("-i,--input", in_path)->required();
    g4col->add_option("-o,--output", out_path);
    auto* gtc = gen->add_subcommand("from-e34sat-tc", "Exact (3,4) SAT as temporal coloring (DIMACS in)");
    gtc->add_option("-i,--input", in_path)->required();
    gtc->add_option("-o,--output", out_path);
    auto* gsw = gen->add_subcommand("from-e34sat-sw", "Exact (3,4) SAT as a T=3 sliding-window instance (DIMACS in)");
    gsw->add_option("-i,--input", in_path)->required();
    gsw->add_option("-o,--output", out_path);
    auto* g1in3 = gen->add_subcommand("from-1in3", "positive 1-in-3 system as a T=4m instance");
    g1in3->add_option("-i,--input", in_path)->required();
    g1in3->add_option("-o,--output", out_path);
    auto* gcompose = gen->add_subcommand("compose", "conjunction of Exact (3,4) formulas, 5 slots per block");
    gcompose->add_option("-i,--input", gen_inputs)->required()->expected(-1);
    gcompose->add_option("-o,--output", out_path);

    std::string suite, timing = "none";
    auto* bench = app.add_subcommand("bench", "deterministic built-in instance suites");
    bench->add_option("suite", suite, "one of solver-grid, kernel, reduce")->required();
    bench->add_option("--timing", timing)->check(CLI::IsMember({"none", "wall"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        SolverOptions options;
        if (budget > 0) options.budget.max_window_colorings = budget;
        options.threads = threads;
        OracleBudget obudget;
        if (budget > 0) obudget.max_candidates = budget;

        if (solve->parsed()) {
            TemporalGraph g = load_graph(in_path);
            options.want_witness = !witness_path.empty();
            SolveResult res = solve_decision(Instance{g, delta, k}, options);
            if (res.yes && !witness_path.empty())
                write_file(witness_path, serialize_temporal_coloring(*res.witness));
            std::cout << (res.yes ? "YES" : "NO") << "\n";
        } else if (minimize_cmd->parsed()) {
            TemporalGraph g = load_graph(in_path);
            options.want_witness = !witness_path.empty();
            MinimizeOutcome res = minimize(g, delta, options);
            if (!witness_path.empty())
                write_file(witness_path, serialize_temporal_coloring(*res.witness));
            std::cout << "K* " << res.k_star << "\n";
        } else if (verify->parsed()) {
            TemporalGraph g = load_graph(in_path);
            TemporalColoring col = parse_temporal_coloring(read_file(coloring_path));
            auto bad = first_violation(Instance{g, delta, col.k}, col);
            if (bad)
                std::cout << "VIOLATION t=" << bad->t << " edge=" << bad->u << "," << bad->v
                          << "\n";
            else
                std::cout << "PROPER\n";
        } else if (kernel->parsed()) {
            TemporalGraph g = load_graph(in_path);
            if (warn_k == 1)
                std::cerr << "warning: the kernel is independent of k; k=1 is decided directly "
                             "(yes iff the graph has no edges)\n";
            KernelResult kr = kernelize(g);
            write_file(out_path, serialize_temporal_graph(kr.graph));
            print_slots("S:", kr.kept_slots);
        } else if (reduce->parsed()) {
            TemporalGraph g = load_graph(in_path);
            ReduceResult rr = reduce_snapshots(Instance{g, delta, 2}); // reduction ignores k
            write_file(out_path, serialize_temporal_graph(rr.instance.graph));
            print_slots("R:", rr.replaced_slots);
        } else if (approx->parsed()) {
            TemporalGraph g = load_graph(in_path);
            ApproxResult res = approx_coloring(g, delta, tighten, options);
            if (!witness_path.empty())
                write_file(witness_path, serialize_temporal_coloring(res.coloring));
            std::cout << "K_OUT " << res.k_out << "\n";
        } else if (osolve->parsed()) {
            TemporalGraph g = load_graph(in_path);
            OracleDecision res = brute_force_decision(Instance{g, delta, k}, obudget);
            if (res.yes && !witness_path.empty())
                write_file(witness_path, serialize_temporal_coloring(res.witness));
            std::cout << (res.yes ? "YES" : "NO") << "\n";
        } else if (ominimize->parsed()) {
            TemporalGraph g = load_graph(in_path);
            OracleMinimize res = brute_force_minimize(g, delta, obudget);
            if (!witness_path.empty())
                write_file(witness_path, serialize_temporal_coloring(res.witness));
            std::cout << "K* " << res.k_star << "\n";
        } else if (grandom->parsed()) {
            TemporalGraph g = random_instance(gen_n, gen_t, gen_p, gen_seed);
            emit(serialize_temporal_graph(g), out_path);
        } else if (g4col->parsed()) {
            TemporalGraph g = load_graph(in_path);
            if (g.lifetime != 1)
                throw std::invalid_argument("from-4col expects a static graph (.tg with T=1)");
            emit(instance_text(from_4coloring(underlying_graph(g))), out_path);
        } else if (gtc->parsed()) {
            emit(instance_text(from_exact34sat_tc(parse_dimacs(read_file(in_path)))), out_path);
        } else if (gsw->parsed()) {
            emit(instance_text(from_exact34sat_sw(parse_dimacs(read_file(in_path)))), out_path);
        } else if (g1in3->parsed()) {
            emit(instance_text(from_1in3sat(parse_triples(read_file(in_path)))), out_path);
        } else if (gcompose->parsed()) {
            std::vector<CnfFormula> fs;
            for (const std::string& p : gen_inputs) fs.push_back(parse_dimacs(read_file(p)));
            emit(instance_text(compose_and(fs)), out_path);
        } else if (bench->parsed()) {
            bool wall = timing == "wall";
            if (suite == "solver-grid") return bench_grid(wall);
            if (suite == "kernel") return bench_kernel(wall);
            if (suite == "reduce") return bench_reduce(wall);
            std::cerr << "unknown bench suite: " << suite << "\n";
            return 2;
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
