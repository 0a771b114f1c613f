#include "cyclic/harness.hpp"

#include <algorithm>
#include <exception>
#include <span>
#include <string>

#include "cyclic/core.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/random.hpp"
#include "cyclic/spectral.hpp"

namespace cyclic {

std::string_view route_name(Route route) {
    switch (route) {
    case Route::spectral:
        return "spectral";
    case Route::iterative:
        return "iterative";
    case Route::binomial:
        return "binomial";
    }
    return "unknown";
}

Route parse_route(std::string_view name) {
    if (name == "spectral") {
        return Route::spectral;
    }
    if (name == "iterative") {
        return Route::iterative;
    }
    if (name == "binomial") {
        return Route::binomial;
    }
    throw invalid_argument("unknown route '" + std::string(name) + "' (expected iterative, binomial or spectral)");
}

std::vector<Route> default_routes(std::uint64_t steps) {
    if (steps <= iterative_default_limit) {
        return {Route::spectral, Route::iterative};
    }
    return {Route::spectral};
}

void validate(const RunConfig& config) {
    if (config.n < 2) {
        throw invalid_argument("n must be at least 2");
    }
    if (config.d < 1) {
        throw invalid_argument("dimension must be at least 1");
    }
    if (config.steps < 1) {
        throw invalid_argument("steps must be at least 1");
    }
    if (config.snapshot_stride < 1) {
        throw invalid_argument("snapshot stride must be at least 1");
    }
    if (config.routes.empty()) {
        throw invalid_argument("at least one route must be enabled");
    }
    const bool binomial = std::find(config.routes.begin(), config.routes.end(), Route::binomial) != config.routes.end();
    if (binomial && config.steps > max_binomial_steps) {
        throw invalid_argument("binomial route supports at most " + std::to_string(max_binomial_steps) +
                               " steps, got " + std::to_string(config.steps));
    }
}

std::vector<std::uint64_t> snapshot_times(const RunConfig& config) {
    std::vector<std::uint64_t> times;
    for (std::uint64_t t = 0; t < config.steps; t += config.snapshot_stride) {
        times.push_back(t);
    }
    times.push_back(config.steps);
    return times;
}

const Snapshot* RunRecord::find_snapshot(std::uint64_t t) const {
    for (const auto& s : snapshots) {
        if (s.t == t) {
            return &s;
        }
    }
    return nullptr;
}

namespace {

bool enabled(const RunConfig& config, Route route) {
    return std::find(config.routes.begin(), config.routes.end(), route) != config.routes.end();
}

void record_diagnostics(RunRecord& record) {
    const RunConfig& config = record.config;
    const std::uint64_t n = config.n;
    const bool odd = n % 2 == 1;
    const bool ellipse_available = odd && config.d == 2 && !record.model.degenerate;

    for (std::size_t i = 0; i < record.snapshots.size(); ++i) {
        const Snapshot& snap = record.snapshots[i];
        if (snap.state.degenerate) {
            continue;
        }
        if (snap.t >= n) {
            if (ellipse_available) {
                const auto ellipse = ellipse_of(record.model, snap.t);
                record.diagnostics.ellipse_residual.push_back({snap.t, ellipse_residual(snap.state, ellipse)});
            }
            if (!odd) {
                record.diagnostics.parity_separation.push_back({snap.t, parity_separation(snap.state.cloud)});
            }
        }
        if (i > 0) {
            const Snapshot& prev = record.snapshots[i - 1];
            if (prev.t >= 4 * n && !prev.state.degenerate) {
                const Snapshot pair[] = {prev, snap};
                record.diagnostics.growth_rate.push_back({prev.t, snap.t, growth_rate(pair)});
            }
        }
    }
}

} // namespace

double check_routes(std::span<const std::pair<Route, ScaledState>> results, std::uint64_t t) {
    double worst = 0.0;
    if (results.empty()) {
        return worst;
    }
    const ScaledState& primary = results.front().second;
    for (std::size_t i = 1; i < results.size(); ++i) {
        const double gap = relative_distance(results[i].second, primary);
        worst = std::max(worst, gap);
        if (!(gap <= route_tolerance)) {
            throw route_mismatch("routes " + std::string(route_name(results.front().first)) + " and " +
                                 std::string(route_name(results[i].first)) + " disagree at t = " +
                                 std::to_string(t) + " (relative difference " + std::to_string(gap) + ")");
        }
    }
    return worst;
}

RunRecord run(const RunConfig& config) {
    validate(config);
    RunRecord record;
    record.config = config;

    const PointCloud initial = uniform_cloud(config.n, config.d, config.seed);
    record.model = coefficients(initial);
    const ScaledState base = to_scaled(initial);

    const bool use_spectral = enabled(config, Route::spectral);
    const bool use_iterative = enabled(config, Route::iterative);
    const bool use_binomial = enabled(config, Route::binomial);

    ScaledState iterated = base;
    for (const std::uint64_t t : snapshot_times(config)) {
        std::vector<std::pair<Route, ScaledState>> results;
        if (use_spectral) {
            results.emplace_back(Route::spectral, evolve_closed_form(base, t));
        }
        if (use_iterative) {
            const std::uint64_t delta = t - iterated.t();
            iterated = evolve_iterative(std::move(iterated), delta);
            results.emplace_back(Route::iterative, iterated);
        }
        if (use_binomial) {
            results.emplace_back(Route::binomial, to_scaled(evolve_binomial(initial, t)));
        }

        const ScaledState& primary = results.front().second;
        record.diagnostics.max_route_discrepancy =
            std::max(record.diagnostics.max_route_discrepancy, check_routes(results, t));
        record.snapshots.push_back({t, primary});
    }
    record_diagnostics(record);
    return record;
}

std::vector<std::uint64_t> batch_seeds(std::uint64_t batch_seed, std::size_t count) {
    SplitMix64 rng(batch_seed);
    std::vector<std::uint64_t> seeds(count);
    for (auto& s : seeds) {
        s = rng.next();
    }
    return seeds;
}

std::vector<RunRecord> run_batch(const RunConfig& config, std::size_t count) {
    validate(config);
    const auto seeds = batch_seeds(config.seed, count);
    std::vector<RunRecord> records(count);
    std::vector<std::exception_ptr> failures(count);
    const auto runs = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < runs; ++i) {
        try {
            RunConfig local = config;
            local.seed = seeds[static_cast<std::size_t>(i)];
            records[static_cast<std::size_t>(i)] = run(local);
        } catch (...) {
            failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    return records;
}

} // namespace cyclic
