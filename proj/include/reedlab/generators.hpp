#pragma once

#include <cstdint>

#include "reedlab/graph.hpp"

namespace reedlab {

Graph cycle(int n);    // n >= 3
Graph complete(int n); // n >= 1
Graph path(int n);     // n >= 1
Graph star(int leaves); // K_{1,leaves}, center is vertex 0; leaves >= 1

// The 12-vertex 4-regular triangle-free graph with chromatic number 4.
Graph chvatal();
Graph petersen();

// Erdos-Renyi G(n, p) drawn edge by edge in lex order from SplitMix64(seed);
// identical output for identical (n, p, seed) on every platform.
Graph gnp(int n, double p, std::uint64_t seed);

} // namespace reedlab
