#ifndef TEMPOCOL_TG_IO_HPP
#define TEMPOCOL_TG_IO_HPP

#include <string>
#include <vector>

#include "tempocol/coloring.hpp"
#include "tempocol/errors.hpp"
#include "tempocol/temporal_graph.hpp"

namespace tempocol {

// .tg text format:
//   # comment lines anywhere, blank lines ignored
//   tg 1
//   <n> <T>
//   <u> <v> <t1> ... <tr>     one line per edge, 0 <= u < v < n, labels ascending
//
// Errors carry the offending 1-based line number. A declared lifetime larger
// than the largest label is accepted with a warning.
TemporalGraph parse_temporal_graph(const std::string& text,
                                   std::vector<std::string>* warnings = nullptr);
std::string serialize_temporal_graph(const TemporalGraph& g);

// .tc text format:
//   tc 1
//   <n> <T> <k>
//   T rows of n space-separated colors in [1, k]
TemporalColoring parse_temporal_coloring(const std::string& text);
std::string serialize_temporal_coloring(const TemporalColoring& col);

} // namespace tempocol

#endif
