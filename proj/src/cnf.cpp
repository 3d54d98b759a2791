#include "tempocol/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tempocol/errors.hpp"

namespace tempocol {

namespace {

// Uniform draw from [0, bound) using raw mt19937_64 words; the engine's
// sequence is pinned by the standard, unlike the distribution adaptors.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    limit -= limit % bound;
    std::uint64_t x = rng();
    while (x >= limit)
        x = rng();
    return x % bound;
}

} // namespace

void validate_formula(const CnfFormula& f) {
    if (f.num_vars < 0)
        throw std::invalid_argument("negative variable count");
    for (const auto& clause : f.clauses)
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw std::invalid_argument("literal outside +-[1, num_vars]");
}

bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment) {
    validate_formula(f);
    if (assignment.size() != static_cast<std::size_t>(f.num_vars))
        throw std::invalid_argument("assignment length does not match variable count");
    for (const auto& clause : f.clauses) {
        bool satisfied = false;
        for (int lit : clause) {
            bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
            if (lit > 0 ? value : !value) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied)
            return false;
    }
    return true;
}

bool is_exact34(const CnfFormula& f) {
    validate_formula(f);
    std::vector<int> occurrences(f.num_vars, 0);
    for (const auto& clause : f.clauses) {
        if (clause.size() != 3)
            return false;
        int a = std::abs(clause[0]), b = std::abs(clause[1]), c = std::abs(clause[2]);
        if (a == b || a == c || b == c)
            return false;
        ++occurrences[a - 1];
        ++occurrences[b - 1];
        ++occurrences[c - 1];
    }
    for (int count : occurrences)
        if (count != 4)
            return false;
    return 3 * static_cast<int>(f.clauses.size()) == 4 * f.num_vars;
}

CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula f;
    long long declared_clauses = -1;
    bool saw_header = false;
    std::vector<int> current;
    int number = 0;
    int last_token_line = 1;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok))
            continue;
        if (tok == "c" || tok[0] == 'c')
            continue;
        if (tok == "p") {
            if (saw_header)
                throw ParseError(number, "duplicate 'p' line");
            std::string kind;
            long long vars = -1, clauses = -1;
            if (!(tokens >> kind >> vars >> clauses) || kind != "cnf" || vars < 0 || clauses < 0)
                throw ParseError(number, "expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (tokens >> extra)
                throw ParseError(number, "trailing tokens after 'p cnf <vars> <clauses>'");
            f.num_vars = static_cast<int>(vars);
            declared_clauses = clauses;
            saw_header = true;
            continue;
        }
        if (!saw_header)
            throw ParseError(number, "clause data before the 'p cnf' header");
        // first token already read; process it and the rest of the line
        while (true) {
            long long lit;
            try {
                std::size_t used = 0;
                lit = std::stoll(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(number, "expected a literal, got '" + tok + "'");
            }
            last_token_line = number;
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > f.num_vars)
                    throw ParseError(number, "literal outside the declared variable range");
                current.push_back(static_cast<int>(lit));
            }
            if (!(tokens >> tok))
                break;
        }
    }
    if (!saw_header)
        throw ParseError(number ? number : 1, "missing 'p cnf' header");
    if (!current.empty())
        throw ParseError(last_token_line, "last clause is not terminated by 0");
    if (declared_clauses != static_cast<long long>(f.clauses.size()))
        throw ParseError(last_token_line, "clause count does not match the header");
    return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
    validate_formula(f);
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

CnfFormula random_exact34(int num_vars, std::uint64_t seed) {
    if (num_vars <= 0 || num_vars % 3 != 0)
        throw std::invalid_argument("variable count must be a positive multiple of 3");
    int num_clauses = 4 * num_vars / 3;
    std::mt19937_64 rng(seed);

    std::vector<int> tokens;
    tokens.reserve(static_cast<std::size_t>(4) * num_vars);
    for (int v = 1; v <= num_vars; ++v)
        for (int copy = 0; copy < 4; ++copy)
            tokens.push_back(v);

    // Re-shuffle until every block of three holds distinct variables.
    while (true) {
        for (std::size_t i = tokens.size() - 1; i > 0; --i)
            std::swap(tokens[i], tokens[bounded_draw(rng, i + 1)]);
        bool ok = true;
        for (int c = 0; c < num_clauses && ok; ++c) {
            int a = tokens[3 * c], b = tokens[3 * c + 1], d = tokens[3 * c + 2];
            ok = a != b && a != d && b != d;
        }
        if (ok)
            break;
    }

    CnfFormula f;
    f.num_vars = num_vars;
    for (int c = 0; c < num_clauses; ++c) {
        std::vector<int> clause;
        for (int j = 0; j < 3; ++j) {
            int var = tokens[3 * c + j];
            clause.push_back(bounded_draw(rng, 2) ? var : -var);
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

void validate_triples(const TripleSystem& ts) {
    if (ts.num_vars < 0)
        throw std::invalid_argument("negative variable count");
    for (const auto& triple : ts.triples) {
        for (int v : triple)
            if (v < 1 || v > ts.num_vars)
                throw std::invalid_argument("triple entry outside [1, num_vars]");
        if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2])
            throw std::invalid_argument("triple with a repeated variable");
    }
}

TripleSystem parse_triples(const std::string& text) {
    TripleSystem ts;
    int number = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++number;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream tokens(line);
        long long a, b, c;
        std::string extra;
        if (!(tokens >> a >> b >> c) || (tokens >> extra))
            throw ParseError(number, "expected exactly three variable indices");
        if (a < 1 || b < 1 || c < 1)
            throw ParseError(number, "variable indices are 1-based and positive");
        if (a == b || a == c || b == c)
            throw ParseError(number, "triple with a repeated variable");
        ts.triples.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
        ts.num_vars = std::max({ts.num_vars, static_cast<int>(a), static_cast<int>(b),
                                static_cast<int>(c)});
    }
    return ts;
}

} // namespace tempocol
