#pragma once

#include <string>
#include <string_view>

#include "reedlab/graph.hpp"

namespace reedlab {

// graph6 codec, bit-exact per the de-facto standard: short header for
// n <= 62, '~'-prefixed 18-bit and '~~'-prefixed 36-bit long headers,
// upper-triangle bits in column order packed into 6-bit printable groups.

// Throws ParseError (byte offset) on malformed header, out-of-range bytes,
// truncated or overlong bit vectors, or nonzero padding.
Graph parse_graph6(std::string_view line);

// Canonical encoding: minimal-length header, zero padding bits.
std::string emit_graph6(const Graph& g);

} // namespace reedlab
