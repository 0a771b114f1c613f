#pragma once

#include <cstdint>

#include "cyclic/point_cloud.hpp"

namespace cyclic {

/// SplitMix64 (Steele, Lea & Flood 2014): state += 0x9E3779B97F4A7C15, then
/// the 64-bit finalizer. Fixed here so any implementation can reproduce a
/// run from its seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Top 53 bits as a double in [0, 1).
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// 2 * unit() - 1, in [-1, 1).
    double symmetric() noexcept { return 2.0 * unit() - 1.0; }

private:
    std::uint64_t state_;
};

/// n x d cloud with entries uniform on [-1, 1), drawn row-major (point 0
/// axis 0, point 0 axis 1, ...) from SplitMix64(seed).
PointCloud uniform_cloud(std::size_t n, std::size_t d, std::uint64_t seed);

} // namespace cyclic
