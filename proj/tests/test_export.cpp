#include <doctest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>

#include "cyclic/core.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/export.hpp"
#include "cyclic/harness.hpp"

using namespace cyclic;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t hits = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++hits;
    }
    return hits;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    return parts;
}

RunRecord small_run(std::size_t n, std::uint64_t steps, std::uint64_t stride) {
    RunConfig c;
    c.n = n;
    c.steps = steps;
    c.snapshot_stride = stride;
    c.seed = 21;
    c.routes = default_routes(steps);
    return run(c);
}

// Every opening tag has a matching close or is self-closing.
bool tags_balance(const std::string& svg) {
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = svg.find('<', pos)) != std::string::npos) {
        const std::size_t end = svg.find('>', pos);
        if (end == std::string::npos) {
            return false;
        }
        const std::string tag = svg.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.starts_with('?') || tag.starts_with('!') || tag.ends_with('/')) {
            continue;
        }
        const std::string name = tag.substr(tag.starts_with('/') ? 1 : 0, tag.find_first_of(" \n") - (tag.starts_with('/') ? 1 : 0));
        if (tag.starts_with('/')) {
            if (stack.empty() || stack.back() != name) {
                return false;
            }
            stack.pop_back();
        } else {
            stack.push_back(name);
        }
    }
    return stack.empty();
}

} // namespace

TEST_CASE("format_number round-trips") {
    for (double v : {0.0, -0.0, 1.0, 0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, std::numeric_limits<double>::max()}) {
        const std::string s = format_number(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == v);
    }
    CHECK_THROWS_AS(format_number(std::nan("")), cyclic::invalid_argument);
}

TEST_CASE("csv") {
    SUBCASE("n = 2, d = 1, one snapshot") {
        RunRecord r;
        r.config.n = 2;
        r.config.d = 1;
        r.snapshots.push_back({0, to_scaled(PointCloud(2, 1, {0.6, -0.8}))});
        const std::string csv = csv_string(r);
        const auto lines = split(csv, '\n');
        REQUIRE(lines.size() == 3);
        CHECK(lines[0] == "t,label,axis0,logmag");
        CHECK(lines[1].starts_with("0,0,"));
        CHECK(lines[2].starts_with("0,1,"));
        CHECK(csv.find('\r') == std::string::npos);
        CHECK(csv.back() == '\n');
    }
    SUBCASE("values parse back exactly") {
        const RunRecord r = small_run(7, 20, 10);
        const auto lines = split(csv_string(r), '\n');
        CHECK(lines.size() == 1 + 3 * 7);
        for (std::size_t row = 1; row < lines.size(); ++row) {
            const auto fields = split(lines[row], ',');
            REQUIRE(fields.size() == 5);
            const Snapshot& s = r.snapshots[(row - 1) / 7];
            const std::size_t l = (row - 1) % 7;
            CHECK(std::stoull(fields[0]) == s.t);
            CHECK(std::stoull(fields[1]) == l);
            for (std::size_t a = 0; a < 2; ++a) {
                double v = 0.0;
                std::from_chars(fields[2 + a].data(), fields[2 + a].data() + fields[2 + a].size(), v);
                CHECK(v == s.state.cloud.at(l, a));
            }
        }
    }
    SUBCASE("unwritable path names the path") {
        const std::filesystem::path bad = "/nonexistent-dir/out.csv";
        try {
            export_csv(small_run(5, 2, 1), bad);
            FAIL("expected io_error");
        } catch (const io_error& e) {
            CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
        }
    }
}

TEST_CASE("json") {
    SUBCASE("round trip") {
        for (std::size_t n : {6U, 7U}) {
            const RunRecord r = small_run(n, 40, 10);
            CHECK(parse_json(json_string(r)) == r);
        }
    }
    SUBCASE("file round trip") {
        const RunRecord r = small_run(51, 200, 100);
        const auto path = std::filesystem::temp_directory_path() / "cyclic_test_record.json";
        export_json(r, path);
        CHECK(import_json(path) == r);
        std::filesystem::remove(path);
    }
    SUBCASE("empty diagnostics are written as empty arrays") {
        const std::string j = json_string(small_run(5, 1, 1));
        CHECK(j.find("\"schema_version\":\"1\"") != std::string::npos);
        CHECK(j.find("\"ellipse_residual\":[]") != std::string::npos);
        CHECK(j.find("\"growth_rate\":[]") != std::string::npos);
    }
    SUBCASE("full-range seed is kept") {
        RunRecord r = small_run(5, 1, 1);
        r.config.seed = 18446744073709551615ULL;
        const std::string j = json_string(r);
        CHECK(j.find("18446744073709551615") != std::string::npos);
        CHECK(parse_json(j).config.seed == 18446744073709551615ULL);
    }
    SUBCASE("bad input") {
        CHECK_THROWS_AS(parse_json("{"), cyclic::invalid_argument);
        CHECK_THROWS_AS(parse_json("{\"schema_version\": \"9\"}"), cyclic::invalid_argument);
        CHECK_THROWS_AS(import_json("/nonexistent-dir/record.json"), io_error);
    }
}

TEST_CASE("svg") {
    SUBCASE("missing snapshot") {
        CHECK_THROWS_AS(svg_string(small_run(6, 10, 5), 7), no_such_snapshot);
    }
    SUBCASE("even n: two loops, no ellipse") {
        const RunRecord r = small_run(50, 300, 100);
        const std::string svg = svg_string(r, 300);
        CHECK(count(svg, "<circle") == 50);
        CHECK(count(svg, "<polyline") == 2);
        CHECK(count(svg, "<ellipse") == 0);
        CHECK(count(svg, "r=\"3\" fill=\"#1f77b4\"") == 25);
        CHECK(count(svg, "r=\"3\" fill=\"#d62728\"") == 25);
        CHECK(tags_balance(svg));
    }
    SUBCASE("odd n: one loop and the predicted ellipse") {
        const RunRecord r = small_run(51, 300, 100);
        const std::string svg = svg_string(r, 300);
        CHECK(count(svg, "<circle") == 51);
        CHECK(count(svg, "<polyline") == 1);
        CHECK(count(svg, "<ellipse") == 1);
        CHECK(tags_balance(svg));
    }
    SUBCASE("needs two dimensions") {
        RunConfig c;
        c.n = 5;
        c.d = 1;
        c.steps = 3;
        CHECK_THROWS_AS(svg_string(run(c), 3), cyclic::invalid_argument);
    }
}
