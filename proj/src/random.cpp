#include "cyclic/random.hpp"

namespace cyclic {

PointCloud uniform_cloud(std::size_t n, std::size_t d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> coords(n * d);
    for (double& v : coords) {
        v = rng.symmetric();
    }
    return PointCloud(n, d, std::move(coords), 0);
}

} // namespace cyclic
