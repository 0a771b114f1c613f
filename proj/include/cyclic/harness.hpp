#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclic/asymptotics.hpp"
#include "cyclic/point_cloud.hpp"

namespace cyclic {

enum class Route { spectral, iterative, binomial };

std::string_view route_name(Route route);
Route parse_route(std::string_view name);

/// Routes are cross-checked at this relative tolerance at every snapshot.
inline constexpr double route_tolerance = 1e-9;

/// Largest step count for which iterative is added to the default routes.
inline constexpr std::uint64_t iterative_default_limit = 2000;

struct RunConfig {
    std::size_t n = 50;
    std::size_t d = 2;
    std::uint64_t steps = 300;
    std::uint64_t snapshot_stride = 100;
    std::uint64_t seed = 0;
    std::vector<Route> routes{Route::spectral};
    std::vector<std::string> outputs;

    static constexpr std::string_view distribution = "uniform[-1,1]";

    bool operator==(const RunConfig&) const = default;
};

/// Spectral plus, for steps <= iterative_default_limit, iterative.
std::vector<Route> default_routes(std::uint64_t steps);

/// Throws invalid_argument on a config that run() would reject.
void validate(const RunConfig& config);

/// 0, every multiple of the stride below steps, and steps.
std::vector<std::uint64_t> snapshot_times(const RunConfig& config);

struct EllipseSample {
    std::uint64_t t = 0;
    double value = 0.0;
    bool operator==(const EllipseSample&) const = default;
};

struct ParitySample {
    std::uint64_t t = 0;
    ParitySeparation separation;
    bool operator==(const ParitySample&) const = default;
};

struct GrowthSample {
    std::uint64_t t_begin = 0;
    std::uint64_t t_end = 0;
    double value = 0.0;
    bool operator==(const GrowthSample&) const = default;
};

/// Asymptotic diagnostics are recorded only past the transient: ellipse and
/// parity metrics for snapshots with t >= n, growth rates for consecutive
/// snapshot pairs starting at t >= 4n.
struct Diagnostics {
    std::vector<EllipseSample> ellipse_residual;
    std::vector<ParitySample> parity_separation;
    std::vector<GrowthSample> growth_rate;
    double max_route_discrepancy = 0.0;
    bool operator==(const Diagnostics&) const = default;
};

struct RunRecord {
    RunConfig config;
    std::vector<Snapshot> snapshots;
    Diagnostics diagnostics;
    AsymptoticModel model;

    const Snapshot* find_snapshot(std::uint64_t t) const;

    bool operator==(const RunRecord&) const = default;
};

/// Compares every result with the first one; returns the largest relative
/// difference and throws route_mismatch if it exceeds route_tolerance.
double check_routes(std::span<const std::pair<Route, ScaledState>> results, std::uint64_t t);

/// Draws the initial cloud from the seed, evolves it with every enabled
/// route, checks them against each other at each snapshot (throws
/// route_mismatch beyond route_tolerance) and records diagnostics.
RunRecord run(const RunConfig& config);

/// Seed of the i-th run in a batch: the i-th output of SplitMix64(batch_seed).
std::vector<std::uint64_t> batch_seeds(std::uint64_t batch_seed, std::size_t count);

/// `count` independent runs of `config` with seeds from batch_seeds, executed
/// in parallel. Results are ordered by run index.
std::vector<RunRecord> run_batch(const RunConfig& config, std::size_t count);

} // namespace cyclic
