#include "tempocol/coloring.hpp"

#include <set>
#include <stdexcept>

namespace tempocol {

TemporalColoring make_constant_coloring(int n, int lifetime, int k, int color) {
    TemporalColoring col;
    col.n = n;
    col.lifetime = lifetime;
    col.k = k;
    col.cells.assign(static_cast<std::size_t>(n) * lifetime, color);
    return col;
}

int coloring_size(const TemporalColoring& col) {
    std::set<int> used(col.cells.begin(), col.cells.end());
    return static_cast<int>(used.size());
}

void validate_coloring(const TemporalColoring& col) {
    if (col.n < 0 || col.lifetime < 0 || col.k < 1)
        throw std::invalid_argument("coloring needs n >= 0, lifetime >= 0, k >= 1");
    if (col.cells.size() != static_cast<std::size_t>(col.n) * col.lifetime)
        throw std::invalid_argument("coloring cell table has the wrong size");
    for (int c : col.cells)
        if (c < 1 || c > col.k)
            throw std::invalid_argument("color outside [1, k]");
}

} // namespace tempocol
