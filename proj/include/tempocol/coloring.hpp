#ifndef TEMPOCOL_COLORING_HPP
#define TEMPOCOL_COLORING_HPP

#include <vector>

namespace tempocol {

// One color per (slot, vertex) cell; colors are 1..k, slots 1..lifetime,
// vertices 0..n-1. Stored row-major by slot.
struct TemporalColoring {
    int n = 0;
    int lifetime = 0;
    int k = 1;
    std::vector<int> cells; // lifetime*n entries

    int at(int t, int v) const { return cells[static_cast<std::size_t>(t - 1) * n + v]; }
    int& at(int t, int v) { return cells[static_cast<std::size_t>(t - 1) * n + v]; }

    friend bool operator==(const TemporalColoring&, const TemporalColoring&) = default;
};

TemporalColoring make_constant_coloring(int n, int lifetime, int k, int color);

// Number of distinct colors actually used (0 for an empty cell table).
int coloring_size(const TemporalColoring& col);

void validate_coloring(const TemporalColoring& col);

} // namespace tempocol

#endif
