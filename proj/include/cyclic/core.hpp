#pragma once

// The evolution operator: each point is replaced by the vector from itself to
// its cyclic successor, x_l <- x_{l+1 mod n} - x_l, independently per axis.

#include <cstdint>
#include <vector>

#include "cyclic/point_cloud.hpp"

namespace cyclic {

/// Largest step count accepted by evolve_binomial.
inline constexpr std::uint64_t max_binomial_steps = 60;

/// Rescaling window for evolve_iterative: the stored cloud is renormalized
/// whenever its norm leaves [lower, upper].
inline constexpr double rescale_lower = 1e-6;
inline constexpr double rescale_upper = 1e6;

/// One application of the cyclic difference operator; t advances by one.
PointCloud step(const PointCloud& state);

/// Applies step `steps` times on a unit-normalized copy, rescaling as needed
/// and accumulating the factored-out magnitude in logmag. A state that hits
/// exact zero is returned with `degenerate` set.
ScaledState evolve_iterative(const PointCloud& state, std::uint64_t steps);

/// Continues an already-scaled trajectory.
ScaledState evolve_iterative(ScaledState state, std::uint64_t steps);

/// The order-`steps` cyclic difference
///   x_k(t) = (-1)^t sum_i (-1)^i C(t,i) x_{(k+i) mod n}(0)
/// evaluated from the initial coordinates in one pass. Throws steps_too_large
/// above max_binomial_steps.
PointCloud evolve_binomial(const PointCloud& state, std::uint64_t steps);

/// Sum of all points, per axis.
std::vector<double> center_sum(const PointCloud& state);

/// Unit Frobenius norm over all axes jointly; logmag = log of the original
/// norm. Throws degenerate_zero on an all-zero cloud.
ScaledState normalize(const PointCloud& state);

/// As normalize, but an all-zero cloud comes back flagged degenerate.
ScaledState to_scaled(const PointCloud& state);

} // namespace cyclic
