#pragma once

#include <string>
#include <string_view>

#include "reedlab/graph.hpp"

namespace reedlab {

// DIMACS .col subset: "c" comment lines, one "p edge <n> <m>" header,
// "e <u> <v>" lines with 1-based endpoints. Duplicate edges collapse,
// loops and out-of-range ids are ParseErrors carrying the line number.
Graph parse_dimacs(std::string_view text);

// Plain edge list: first line "<n>", then one "<u> <v>" pair per line,
// 0-based. Same collapsing and error rules as parse_dimacs.
Graph parse_edge_list(std::string_view text);

std::string emit_dimacs(const Graph& g);
std::string emit_edge_list(const Graph& g);

} // namespace reedlab
