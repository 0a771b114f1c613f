#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclic {

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::size_t cases = 0;

    bool passed() const { return max_error <= tolerance; }
};

/// Randomized invariant suite: route equivalence, spectral step, sum-zero,
/// Parseval, round trip, shift equivariance, linearity, axis independence,
/// spectral radius, two-step predictor identity, coefficient projection,
/// radix-2 agreement and serial/parallel kernel agreement. Everything is
/// drawn from `seed`.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed, std::size_t configs = 100);

} // namespace cyclic
