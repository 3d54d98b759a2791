#ifndef TEMPOCOL_CNF_HPP
#define TEMPOCOL_CNF_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tempocol {

// CNF formula; literals are +v / -v for variable v in 1..num_vars.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

void validate_formula(const CnfFormula& f);

// assignment[i] is the value of variable i+1.
bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment);

// Every clause has exactly 3 distinct variables and every variable occurs in
// exactly 4 clauses (so 3m = 4n).
bool is_exact34(const CnfFormula& f);

// Standard DIMACS cnf ('c' comments, 'p cnf <vars> <clauses>', 0-terminated
// clauses possibly spanning lines). Errors carry line numbers.
CnfFormula parse_dimacs(const std::string& text);
std::string serialize_dimacs(const CnfFormula& f);

// Seeded random formula in which each variable occurs exactly 4 times and
// each clause holds 3 distinct variables with random signs. num_vars must be
// a positive multiple of 3. Deterministic for a fixed (num_vars, seed).
CnfFormula random_exact34(int num_vars, std::uint64_t seed);

// Positive 1-in-3 instance: triples of distinct 1-based variable indices.
struct TripleSystem {
    int num_vars = 0;
    std::vector<std::array<int, 3>> triples;

    friend bool operator==(const TripleSystem&, const TripleSystem&) = default;
};

void validate_triples(const TripleSystem& ts);

// One triple per line, three distinct 1-based indices; '#' comments allowed.
TripleSystem parse_triples(const std::string& text);

} // namespace tempocol

#endif
