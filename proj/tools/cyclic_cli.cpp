// Command-line front end: run experiments, verify invariants, print
// asymptotic predictions.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclic/asymptotics.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/export.hpp"
#include "cyclic/harness.hpp"
#include "cyclic/random.hpp"
#include "cyclic/verify.hpp"

namespace {

constexpr int exit_usage = 2;
constexpr int exit_failure = 1;

struct SvgTarget {
    std::string path;
    std::optional<std::uint64_t> t;
};

// PATH or PATH:T, where T is a step count.
SvgTarget parse_svg_target(const std::string& arg) {
    const auto colon = arg.rfind(':');
    if (colon != std::string::npos && colon + 1 < arg.size()) {
        const std::string tail = arg.substr(colon + 1);
        std::uint64_t t = 0;
        const auto res = std::from_chars(tail.data(), tail.data() + tail.size(), t);
        if (res.ec == std::errc{} && res.ptr == tail.data() + tail.size()) {
            return {arg.substr(0, colon), t};
        }
    }
    return {arg, std::nullopt};
}

std::vector<cyclic::Route> parse_routes(const std::string& list) {
    std::vector<cyclic::Route> routes;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            routes.push_back(cyclic::parse_route(item));
        }
    }
    return routes;
}

// Rows of comma- or whitespace-separated numbers, '#' starts a comment.
cyclic::PointCloud read_initial(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw cyclic::io_error("cannot open '" + path + "' for reading");
    }
    std::vector<double> coords;
    std::size_t rows = 0;
    std::size_t width = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        for (char& ch : line) {
            if (ch == ',') {
                ch = ' ';
            }
        }
        std::istringstream fields(line);
        std::vector<double> row;
        std::string token;
        while (fields >> token) {
            double v = 0.0;
            const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
            if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
                throw cyclic::invalid_argument("'" + path + "': not a number: " + token);
            }
            row.push_back(v);
        }
        if (row.empty()) {
            continue;
        }
        if (width == 0) {
            width = row.size();
        } else if (row.size() != width) {
            throw cyclic::invalid_argument("'" + path + "': rows have different lengths");
        }
        coords.insert(coords.end(), row.begin(), row.end());
        ++rows;
    }
    return cyclic::PointCloud(rows, width, std::move(coords));
}

void print_pairs(const char* label, const std::vector<std::array<double, 2>>& rows) {
    for (std::size_t a = 0; a < rows.size(); ++a) {
        std::printf("  %s axis %zu: cos %s  sin %s\n", label, a, cyclic::format_number(rows[a][0]).c_str(),
                    cyclic::format_number(rows[a][1]).c_str());
    }
}

int cmd_run(std::size_t n, std::size_t dim, std::uint64_t steps, std::uint64_t stride, std::uint64_t seed,
            const std::string& routes, const std::string& csv, const std::string& json,
            const std::vector<std::string>& svgs) {
    cyclic::RunConfig config;
    config.n = n;
    config.d = dim;
    config.steps = steps;
    config.snapshot_stride = stride == 0 ? steps : stride;
    config.seed = seed;
    config.routes = routes.empty() ? cyclic::default_routes(steps) : parse_routes(routes);

    std::vector<SvgTarget> svg_targets;
    for (const auto& s : svgs) {
        svg_targets.push_back(parse_svg_target(s));
    }
    if (!csv.empty()) {
        config.outputs.push_back("csv");
    }
    if (!json.empty()) {
        config.outputs.push_back("json");
    }
    for (const auto& s : svg_targets) {
        config.outputs.push_back("svg:" + std::to_string(s.t.value_or(steps)));
    }
    cyclic::validate(config);

    const cyclic::RunRecord record = cyclic::run(config);
    for (const auto& s : svg_targets) {
        if (record.find_snapshot(s.t.value_or(steps)) == nullptr) {
            throw cyclic::no_such_snapshot("no snapshot at t = " + std::to_string(*s.t) +
                                           " (snapshots are multiples of --stride plus 0 and --steps)");
        }
    }

    if (!csv.empty()) {
        cyclic::export_csv(record, csv);
    }
    if (!json.empty()) {
        cyclic::export_json(record, json);
    }
    for (const auto& s : svg_targets) {
        cyclic::emit_svg(record, s.t.value_or(steps), s.path);
    }

    std::printf("n=%zu d=%zu steps=%llu seed=%llu snapshots=%zu\n", n, dim,
                static_cast<unsigned long long>(steps), static_cast<unsigned long long>(seed),
                record.snapshots.size());
    std::printf("max route discrepancy: %.3e\n", record.diagnostics.max_route_discrepancy);
    const auto& diag = record.diagnostics;
    if (!diag.ellipse_residual.empty()) {
        const auto& e = diag.ellipse_residual.back();
        std::printf("ellipse residual at t=%llu: %.6e\n", static_cast<unsigned long long>(e.t), e.value);
    }
    if (!diag.parity_separation.empty()) {
        const auto& p = diag.parity_separation.back();
        std::printf("parity separation at t=%llu: even diameter %.6e, odd diameter %.6e, gap %.6f\n",
                    static_cast<unsigned long long>(p.t), p.separation.even_diameter, p.separation.odd_diameter,
                    p.separation.gap);
    }
    if (!diag.growth_rate.empty()) {
        const auto& g = diag.growth_rate.back();
        std::printf("growth rate over [%llu, %llu]: %.15f (model %.15f)\n", static_cast<unsigned long long>(g.t_begin),
                    static_cast<unsigned long long>(g.t_end), g.value,
                    std::log(record.model.degenerate && record.model.second_order ? record.model.second_order->rate
                                                                                  : record.model.rate));
    }
    return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t configs) {
    const auto results = cyclic::run_invariant_suite(seed, configs);
    bool ok = true;
    std::printf("%-58s %8s %12s %10s  %s\n", "invariant", "cases", "max error", "tolerance", "result");
    for (const auto& r : results) {
        std::printf("%-58s %8zu %12.3e %10.1e  %s\n", r.name.c_str(), r.cases, r.max_error, r.tolerance,
                    r.passed() ? "PASS" : "FAIL");
        ok = ok && r.passed();
    }
    std::printf("%s\n", ok ? "all invariants hold" : "invariant violations found");
    return ok ? 0 : exit_failure;
}

int cmd_predict(std::size_t n, std::size_t dim, std::uint64_t seed, const std::string& initial_path,
                std::uint64_t t) {
    const cyclic::PointCloud initial =
        initial_path.empty() ? cyclic::uniform_cloud(n, dim, seed) : read_initial(initial_path);
    const cyclic::AsymptoticModel model = cyclic::coefficients(initial);
    std::printf("n=%zu d=%zu parity=%s\n", model.n, model.d, model.parity == cyclic::Parity::odd ? "odd" : "even");
    std::printf("dominant rate: %s (log %s)\n", cyclic::format_number(model.rate).c_str(),
                cyclic::format_number(std::log(model.rate)).c_str());
    std::printf("degenerate: %s\n", model.degenerate ? "yes" : "no");
    if (model.parity == cyclic::Parity::odd) {
        print_pairs("dominant", model.pair_coeffs);
        if (model.d == 2) {
            if (model.degenerate) {
                std::printf("ellipse: degenerate (AD - BC vanishes)\n");
            } else {
                const auto e = cyclic::ellipse_of(model, t);
                std::printf("ellipse at t=%llu: %s x^2 + 2*(%s) xy + %s y^2 = exp(%s)\n",
                            static_cast<unsigned long long>(t), cyclic::format_number(e.qxx).c_str(),
                            cyclic::format_number(e.qxy).c_str(), cyclic::format_number(e.qyy).c_str(),
                            cyclic::format_number(e.rhs_log).c_str());
            }
        }
    } else {
        for (std::size_t a = 0; a < model.d; ++a) {
            std::printf("  alternating mean axis %zu: %s\n", a, cyclic::format_number(model.dominant[a]).c_str());
        }
        if (model.second_order) {
            std::printf("second-order rate: %s\n", cyclic::format_number(model.second_order->rate).c_str());
            print_pairs("second-order", model.second_order->by_axis);
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic vector-difference dynamics: experiments, invariant checks and asymptotic predictions"};
    app.require_subcommand(1);

    std::size_t n = 50;
    std::size_t dim = 2;
    std::uint64_t steps = 300;
    std::uint64_t stride = 0;
    std::uint64_t seed = 0;
    std::string routes;
    std::string csv;
    std::string json;
    std::vector<std::string> svgs;

    auto* run = app.add_subcommand("run", "Evolve a seeded random cloud and export snapshots");
    run->add_option("--n", n, "Number of points")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    run->add_option("--dim", dim, "Spatial dimension")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    run->add_option("--steps", steps, "Number of evolution steps");
    run->add_option("--stride", stride, "Snapshot stride (default: only t=0 and t=steps)");
    run->add_option("--seed", seed, "Seed for the initial cloud");
    run->add_option("--routes", routes, "Comma-separated routes: spectral, iterative, binomial");
    run->add_option("--csv", csv, "Write snapshots as CSV");
    run->add_option("--json", json, "Write the full run record as JSON");
    run->add_option("--svg", svgs, "Write a scatter plot, PATH or PATH:T");

    std::uint64_t verify_seed = 0;
    std::size_t configs = 100;
    auto* verify = app.add_subcommand("verify", "Run the randomized invariant suite");
    verify->add_option("--seed", verify_seed, "Seed for the randomized configurations");
    verify->add_option("--configs", configs, "Number of random configurations");

    std::size_t pn = 51;
    std::size_t pdim = 2;
    std::uint64_t pseed = 0;
    std::uint64_t pt = 0;
    std::string initial;
    auto* predict = app.add_subcommand("predict", "Print the asymptotic model of an initial cloud");
    predict->add_option("--n", pn, "Number of points")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    predict->add_option("--dim", pdim, "Spatial dimension")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    predict->add_option("--seed", pseed, "Seed for the initial cloud");
    predict->add_option("--initial", initial, "Read the initial cloud from a file (one point per line)");
    predict->add_option("--t", pt, "Time at which to report the ellipse");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    }

    try {
        if (*run) {
            return cmd_run(n, dim, steps, stride, seed, routes, csv, json, svgs);
        }
        if (*verify) {
            return cmd_verify(verify_seed, configs);
        }
        if (*predict) {
            return cmd_predict(pn, pdim, pseed, initial, pt);
        }
    } catch (const cyclic::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_failure;
    }
    return exit_failure;
}
