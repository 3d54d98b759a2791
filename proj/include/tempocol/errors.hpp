#ifndef TEMPOCOL_ERRORS_HPP
#define TEMPOCOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tempocol {

// Raised for malformed input text (.tg/.tc/DIMACS/triples). line is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Raised when an enumeration or state cap is hit. Never a wrong answer:
// callers either get a verdict or this.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what_) : std::runtime_error(what_) {}
};

} // namespace tempocol

#endif
