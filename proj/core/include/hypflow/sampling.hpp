#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hypflow/geometry.hpp"

namespace hypflow {

// Explicit 53-bit mapping instead of std::uniform_real_distribution, whose
// output is implementation-defined; seeds must reproduce bit-for-bit.
inline double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Area-uniform points of the disk r <= r_max.
std::vector<DiskPoint> sample_disk_points(std::uint64_t seed, int count, double r_max);

}  // namespace hypflow
