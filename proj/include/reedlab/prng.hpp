#pragma once

#include <cstdint>

namespace reedlab {

// splitmix64. Fixed algorithm (not std::mt19937_64 plus a distribution) so
// that seeded fixtures come out bit-identical on every platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53 significant bits
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace reedlab
