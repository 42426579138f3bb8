#include "hypflow/sampling.hpp"

#include <cmath>

namespace hypflow {

std::vector<DiskPoint> sample_disk_points(std::uint64_t seed, int count, double r_max) {
    std::mt19937_64 rng(seed);
    std::vector<DiskPoint> pts;
    pts.reserve(count);
    const double two_pi = 6.28318530717958647692;
    for (int i = 0; i < count; ++i) {
        const double r = r_max * std::sqrt(uniform01(rng));
        const double t = two_pi * uniform01(rng);
        pts.emplace_back(r * std::cos(t), r * std::sin(t));
    }
    return pts;
}

}  // namespace hypflow
