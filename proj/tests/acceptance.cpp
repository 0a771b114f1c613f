// End-to-end acceptance checks. One PASS/FAIL line per claim; the exit code is
// the number of failures.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cyclic/asymptotics.hpp"
#include "cyclic/core.hpp"
#include "cyclic/harness.hpp"
#include "cyclic/random.hpp"
#include "cyclic/spectral.hpp"
#include "cyclic/verify.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  %-70s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!ok) {
        ++failures;
    }
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

std::vector<double> flat(const PointCloud& c) { return {c.data().begin(), c.data().end()}; }

void route_equivalence() {
    SplitMix64 rng(1001);
    double worst = 0.0;
    for (int c = 0; c < 100; ++c) {
        const std::size_t n = 2 + rng.next() % 63;
        const std::size_t d = 1 + rng.next() % 3;
        const unsigned t = static_cast<unsigned>(rng.next() % 26);
        const PointCloud x = uniform_cloud(n, d, rng.next());
        const PointCloud it = evolve_iterative(x, t).true_state();
        const PointCloud bi = evolve_binomial(x, t);
        const PointCloud cf = evolve_closed_form(x, t).true_state();
        worst = std::max({worst, relative_distance(it, cf), relative_distance(bi, cf), relative_distance(it, bi)});
        std::vector<double> want;
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t a = 0; a < d; ++a) {
                want.push_back(0.0);
            }
        }
        for (std::size_t a = 0; a < d; ++a) {
            const auto y = oracle::closed_form(x.axis(a), t);
            for (std::size_t l = 0; l < n; ++l) {
                want[l * d + a] = y[l];
            }
        }
        worst = std::max(worst, oracle::rel_error(flat(cf), want));
    }
    report("route equivalence, 100 configs, t <= 25", worst <= 1e-9, fmt("max rel %.2e (tol 1e-9)", worst));
}

void spectral_radius() {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 200; ++n) {
        double largest = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            largest = std::max(largest, std::abs(std::polar(1.0, 2.0 * pi * static_cast<double>(k) / static_cast<double>(n)) - 1.0));
        }
        const double want = (n % 2 == 0) ? 2.0 : 2.0 * std::cos(pi / (2.0 * static_cast<double>(n)));
        const auto eig = eigenvalues(n);
        double library = 0.0;
        for (const auto& e : eig) {
            library = std::max(library, std::abs(e));
        }
        worst = std::max({worst, std::abs(largest - want), std::abs(library - want)});
    }
    report("spectral radius 2 / 2cos(pi/2n), n in [2,200]", worst <= 1e-12, fmt("max abs %.2e (tol 1e-12)", worst));
}

RunRecord seeded_run(std::size_t n, std::uint64_t steps, std::uint64_t stride, std::uint64_t seed) {
    RunConfig c;
    c.n = n;
    c.steps = steps;
    c.snapshot_stride = stride;
    c.seed = seed;
    c.routes = {Route::spectral};
    return run(c);
}

void even_clusters() {
    double worst_diameter = 0.0;
    double worst_gap = 1e300;
    double worst_ratio = 0.0;
    const double bound = 10.0 * std::pow(second_order_rate(50) / 2.0, 1200.0);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const RunRecord r = seeded_run(50, 1500, 300, seed);
        const auto at = [&](std::uint64_t t) { return parity_separation(r.find_snapshot(t)->state.cloud); };
        const ParitySeparation p300 = at(300);
        const ParitySeparation p1500 = at(1500);
        worst_diameter = std::max({worst_diameter, p1500.even_diameter, p1500.odd_diameter});
        worst_gap = std::min(worst_gap, p1500.gap);
        worst_ratio = std::max({worst_ratio, p1500.even_diameter / (bound * p300.even_diameter),
                                p1500.odd_diameter / (bound * p300.odd_diameter)});
    }
    report("even n = 50: cluster diameters <= 1e-4 at t = 1500", worst_diameter <= 1e-4,
           fmt("max diameter %.3e (tol 1e-4)", worst_diameter));
    report("even n = 50: centroid gap >= 1.9 at t = 1500", worst_gap >= 1.9, fmt("min gap %.6f", worst_gap));
    report("even n = 50: diameter(1500) <= 10 (r1/2)^1200 diameter(300)", worst_ratio <= 1.0,
           fmt("max ratio to bound %.3e", worst_ratio));
}

void odd_ellipse() {
    double worst = 0.0;
    bool monotone = true;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const RunRecord r = seeded_run(51, 1500, 300, seed);
        const PointCloud initial = r.find_snapshot(0)->state.true_state();
        const AsymptoticModel m = coefficients_odd(initial);
        const auto residual = [&](std::uint64_t t) {
            const ScaledState s = t == 600 ? evolve_closed_form(initial, 600) : r.find_snapshot(t)->state;
            return ellipse_residual(s, ellipse_of(m, t));
        };
        const double r300 = residual(300);
        const double r600 = residual(600);
        const double r1500 = residual(1500);
        worst = std::max(worst, r1500);
        monotone = monotone && r1500 < r600 && r600 < r300;
    }
    report("odd n = 51: ellipse residual <= 1e-3 at t = 1500", worst <= 1e-3, fmt("max residual %.3e (tol 1e-3)", worst));
    report("odd n = 51: residual(1500) < residual(600) < residual(300)", monotone, "");
}

double growth(const PointCloud& x, std::uint64_t t0, std::uint64_t t1) {
    const Snapshot traj[] = {{t0, evolve_closed_form(x, t0)}, {t1, evolve_closed_form(x, t1)}};
    return growth_rate(traj);
}

void growth_rates() {
    double even = 0.0;
    double odd = 0.0;
    double degenerate = 0.0;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        for (std::size_t n = 2; n <= 10; n += 2) {
            even = std::max(even, std::abs(growth(uniform_cloud(n, 2, seed), 200, 400) - std::log(2.0)));
        }
        for (std::size_t n = 3; n <= 15; n += 2) {
            odd = std::max(odd, std::abs(growth(uniform_cloud(n, 2, seed), 200, 400) - std::log(odd_rate(n))));
        }
        for (std::size_t n : {12U, 16U, 20U}) {
            PointCloud x = uniform_cloud(n, 2, seed);
            for (std::size_t a = 0; a < 2; ++a) {
                double mean = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    mean += (j % 2 == 0 ? 1.0 : -1.0) * x.at(j, a);
                }
                mean /= static_cast<double>(n);
                for (std::size_t j = 0; j < n; ++j) {
                    x.at(j, a) -= (j % 2 == 0 ? 1.0 : -1.0) * mean;
                }
            }
            degenerate = std::max(degenerate, std::abs(growth(x, 200, 400) - std::log(second_order_rate(n))));
        }
    }
    report("growth rate log 2, even n in [2,10], t = 200..400", even <= 1e-9, fmt("max abs %.2e (tol 1e-9)", even));
    report("growth rate log 2cos(pi/2n), odd n in [3,15], t = 200..400", odd <= 1e-9, fmt("max abs %.2e (tol 1e-9)", odd));
    report("growth rate log 2cos(pi/n), zero alternating mean", degenerate <= 1e-6,
           fmt("max abs %.2e (tol 1e-6)", degenerate));
}

void invariants() {
    const auto results = run_invariant_suite(2024, 100);
    const std::vector<std::string> wanted = {"sum-zero", "Parseval", "DFT round trip", "shift", "linearity",
                                             "predictor two-step"};
    bool ok = true;
    std::string detail;
    for (const auto& r : results) {
        const bool relevant = std::any_of(wanted.begin(), wanted.end(),
                                          [&](const std::string& w) { return r.name.find(w) != std::string::npos; });
        if (relevant) {
            ok = ok && r.passed() && r.cases > 0;
            if (!r.passed()) {
                detail += r.name + " ";
            }
        }
    }
    report("invariants: sum-zero, Parseval, round trip, shift, linearity, two-step", ok,
           ok ? "all within tolerance" : detail);
}

void coefficient_oracle() {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 2 + seed;
        const PointCloud x = uniform_cloud(n, 2, 5000 + seed);
        const AsymptoticModel m = coefficients(x);
        for (std::size_t a = 0; a < 2; ++a) {
            const auto axis = x.axis(a);
            std::vector<std::pair<double, double>> pairs;
            if (n % 2 == 1) {
                const auto [A, B] = oracle::mode_pair(axis, (n + 1) / 2);
                pairs = {{m.pair_coeffs[a][0], A}, {m.pair_coeffs[a][1], B}};
            } else {
                pairs = {{m.dominant[a], oracle::dft(axis)[n / 2].real() / std::sqrt(static_cast<double>(n))}};
            }
            for (const auto& [got, want] : pairs) {
                worst = std::max(worst, std::abs(got - want) / std::abs(want));
            }
        }
    }
    report("dominant-mode coefficients equal DFT projection, 50 clouds", worst <= 1e-10,
           fmt("max rel %.2e (tol 1e-10)", worst));
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void determinism() {
    const auto dir = std::filesystem::temp_directory_path() / "cyclic_acceptance";
    std::filesystem::create_directories(dir);
    std::vector<std::string> csv;
    std::vector<std::string> json;
    bool ran = true;
    for (int i = 0; i < 2; ++i) {
        const auto c = dir / ("run" + std::to_string(i) + ".csv");
        const auto j = dir / ("run" + std::to_string(i) + ".json");
        const std::string cmd = std::string("\"") + CYCLIC_CLI + "\" run --n 51 --steps 600 --stride 200 --seed 99 --csv \"" +
                                c.string() + "\" --json \"" + j.string() + "\" > /dev/null";
        ran = ran && std::system(cmd.c_str()) == 0;
        csv.push_back(slurp(c));
        json.push_back(slurp(j));
    }
    std::filesystem::remove_all(dir);
    const bool ok = ran && !csv[0].empty() && !json[0].empty() && csv[0] == csv[1] && json[0] == json[1];
    report("fixed-seed run writes byte-identical CSV and JSON", ok,
           fmt("%.0f + %.0f bytes", static_cast<double>(csv[0].size()), static_cast<double>(json[0].size())));
}

} // namespace

int main() {
    const std::vector<std::function<void()>> checks = {route_equivalence, spectral_radius,   even_clusters,
                                                       odd_ellipse,       growth_rates,      invariants,
                                                       coefficient_oracle, determinism};
    for (const auto& check : checks) {
        check();
    }
    std::printf("%d failed\n", failures);
    return failures;
}
