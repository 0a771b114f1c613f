#include "cyclic/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cyclic/errors.hpp"

namespace cyclic {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double value) {
    if (!std::isfinite(value)) {
        throw invalid_argument("cannot export a non-finite number");
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return {buf, res.ptr};
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot open '" + path.string() + "' for writing");
    }
    out << contents;
    out.close();
    if (!out) {
        throw io_error("failed writing '" + path.string() + "'");
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Compact JSON with every floating-point value in 17-digit form.
void write_json(const ordered_json& node, std::string& out) {
    switch (node.type()) {
    case ordered_json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [key, value] : node.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            out += ordered_json(key).dump();
            out += ':';
            write_json(value, out);
        }
        out += '}';
        break;
    }
    case ordered_json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& value : node) {
            if (!first) {
                out += ',';
            }
            first = false;
            write_json(value, out);
        }
        out += ']';
        break;
    }
    case ordered_json::value_t::number_float:
        out += format_number(node.get<double>());
        break;
    default:
        out += node.dump();
        break;
    }
}

ordered_json pairs_to_json(const std::vector<std::array<double, 2>>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({r[0], r[1]});
    }
    return arr;
}

std::vector<std::array<double, 2>> pairs_from_json(const ordered_json& arr) {
    std::vector<std::array<double, 2>> rows;
    for (const auto& r : arr) {
        rows.push_back({r.at(0).get<double>(), r.at(1).get<double>()});
    }
    return rows;
}

ordered_json model_to_json(const AsymptoticModel& m) {
    ordered_json j;
    j["parity"] = m.parity == Parity::odd ? "odd" : "even";
    j["n"] = m.n;
    j["d"] = m.d;
    j["rate"] = m.rate;
    j["pair_coefficients"] = pairs_to_json(m.pair_coeffs);
    j["dominant"] = m.dominant;
    if (m.second_order) {
        ordered_json s;
        s["rate"] = m.second_order->rate;
        s["pair_coefficients"] = pairs_to_json(m.second_order->by_axis);
        j["second_order"] = s;
    } else {
        j["second_order"] = nullptr;
    }
    j["degenerate"] = m.degenerate;
    return j;
}

AsymptoticModel model_from_json(const ordered_json& j) {
    AsymptoticModel m;
    const auto parity = j.at("parity").get<std::string>();
    if (parity != "odd" && parity != "even") {
        throw invalid_argument("model parity must be 'odd' or 'even'");
    }
    m.parity = parity == "odd" ? Parity::odd : Parity::even;
    m.n = j.at("n").get<std::size_t>();
    m.d = j.at("d").get<std::size_t>();
    m.rate = j.at("rate").get<double>();
    m.pair_coeffs = pairs_from_json(j.at("pair_coefficients"));
    m.dominant = j.at("dominant").get<std::vector<double>>();
    if (!j.at("second_order").is_null()) {
        const auto& s = j.at("second_order");
        m.second_order = ModeCoefficients{s.at("rate").get<double>(), pairs_from_json(s.at("pair_coefficients"))};
    }
    m.degenerate = j.at("degenerate").get<bool>();
    return m;
}

ordered_json to_json(const RunRecord& record) {
    const RunConfig& c = record.config;
    ordered_json doc;
    doc["schema_version"] = "1";

    ordered_json config;
    config["n"] = c.n;
    config["d"] = c.d;
    config["steps"] = c.steps;
    config["snapshot_stride"] = c.snapshot_stride;
    config["seed"] = c.seed;
    config["distribution"] = RunConfig::distribution;
    ordered_json routes = ordered_json::array();
    for (Route r : c.routes) {
        routes.push_back(route_name(r));
    }
    config["routes"] = routes;
    config["outputs"] = c.outputs;
    doc["config"] = config;

    doc["model"] = model_to_json(record.model);

    ordered_json snapshots = ordered_json::array();
    for (const auto& s : record.snapshots) {
        ordered_json js;
        js["t"] = s.t;
        js["logmag"] = s.state.logmag;
        js["degenerate"] = s.state.degenerate;
        js["axis_norms"] = s.state.axis_norms;
        ordered_json coords = ordered_json::array();
        for (std::size_t l = 0; l < s.state.cloud.n(); ++l) {
            const auto row = s.state.cloud.row(l);
            coords.push_back(std::vector<double>(row.begin(), row.end()));
        }
        js["coords"] = coords;
        snapshots.push_back(js);
    }
    doc["snapshots"] = snapshots;

    const Diagnostics& d = record.diagnostics;
    ordered_json diag;
    diag["max_route_discrepancy"] = d.max_route_discrepancy;
    diag["ellipse_residual"] = ordered_json::array();
    for (const auto& e : d.ellipse_residual) {
        diag["ellipse_residual"].push_back(ordered_json{{"t", e.t}, {"value", e.value}});
    }
    diag["parity_separation"] = ordered_json::array();
    for (const auto& p : d.parity_separation) {
        diag["parity_separation"].push_back(ordered_json{{"t", p.t},
                                                         {"even_diameter", p.separation.even_diameter},
                                                         {"odd_diameter", p.separation.odd_diameter},
                                                         {"gap", p.separation.gap}});
    }
    diag["growth_rate"] = ordered_json::array();
    for (const auto& g : d.growth_rate) {
        diag["growth_rate"].push_back(ordered_json{{"t_begin", g.t_begin}, {"t_end", g.t_end}, {"value", g.value}});
    }
    doc["diagnostics"] = diag;
    return doc;
}

} // namespace

std::string csv_string(const RunRecord& record) {
    const std::size_t d = record.config.d;
    std::string out = "t,label";
    for (std::size_t a = 0; a < d; ++a) {
        out += ",axis" + std::to_string(a);
    }
    out += ",logmag\n";
    for (const auto& s : record.snapshots) {
        const std::string t = std::to_string(s.t);
        const std::string logmag = format_number(s.state.logmag);
        for (std::size_t l = 0; l < s.state.cloud.n(); ++l) {
            out += t;
            out += ',';
            out += std::to_string(l);
            for (double v : s.state.cloud.row(l)) {
                out += ',';
                out += format_number(v);
            }
            out += ',';
            out += logmag;
            out += '\n';
        }
    }
    return out;
}

void export_csv(const RunRecord& record, const std::filesystem::path& path) {
    write_file(path, csv_string(record));
}

std::string json_string(const RunRecord& record) {
    std::string out;
    write_json(to_json(record), out);
    out += '\n';
    return out;
}

void export_json(const RunRecord& record, const std::filesystem::path& path) {
    write_file(path, json_string(record));
}

RunRecord parse_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument(std::string("malformed run record: ") + e.what());
    }
    try {
        if (doc.at("schema_version").get<std::string>() != "1") {
            throw invalid_argument("unsupported run record schema version");
        }
        RunRecord record;
        const auto& c = doc.at("config");
        record.config.n = c.at("n").get<std::size_t>();
        record.config.d = c.at("d").get<std::size_t>();
        record.config.steps = c.at("steps").get<std::uint64_t>();
        record.config.snapshot_stride = c.at("snapshot_stride").get<std::uint64_t>();
        record.config.seed = c.at("seed").get<std::uint64_t>();
        record.config.routes.clear();
        for (const auto& r : c.at("routes")) {
            record.config.routes.push_back(parse_route(r.get<std::string>()));
        }
        record.config.outputs = c.at("outputs").get<std::vector<std::string>>();

        record.model = model_from_json(doc.at("model"));

        const std::size_t n = record.config.n;
        const std::size_t d = record.config.d;
        for (const auto& js : doc.at("snapshots")) {
            Snapshot s;
            s.t = js.at("t").get<std::uint64_t>();
            std::vector<double> coords;
            coords.reserve(n * d);
            for (const auto& row : js.at("coords")) {
                for (const auto& v : row) {
                    coords.push_back(v.get<double>());
                }
            }
            s.state.cloud = PointCloud(n, d, std::move(coords), s.t);
            s.state.logmag = js.at("logmag").get<double>();
            s.state.degenerate = js.at("degenerate").get<bool>();
            s.state.axis_norms = js.at("axis_norms").get<std::vector<double>>();
            record.snapshots.push_back(std::move(s));
        }

        const auto& diag = doc.at("diagnostics");
        record.diagnostics.max_route_discrepancy = diag.at("max_route_discrepancy").get<double>();
        for (const auto& e : diag.at("ellipse_residual")) {
            record.diagnostics.ellipse_residual.push_back({e.at("t").get<std::uint64_t>(), e.at("value").get<double>()});
        }
        for (const auto& p : diag.at("parity_separation")) {
            record.diagnostics.parity_separation.push_back(
                {p.at("t").get<std::uint64_t>(),
                 {p.at("even_diameter").get<double>(), p.at("odd_diameter").get<double>(), p.at("gap").get<double>()}});
        }
        for (const auto& g : diag.at("growth_rate")) {
            record.diagnostics.growth_rate.push_back(
                {g.at("t_begin").get<std::uint64_t>(), g.at("t_end").get<std::uint64_t>(), g.at("value").get<double>()});
        }
        return record;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument(std::string("malformed run record: ") + e.what());
    }
}

RunRecord import_json(const std::filesystem::path& path) {
    return parse_json(read_file(path));
}

namespace {

constexpr double canvas = 600.0;
constexpr const char* even_colour = "#1f77b4";
constexpr const char* odd_colour = "#d62728";

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string svg_string(const RunRecord& record, std::uint64_t t) {
    const Snapshot* snap = record.find_snapshot(t);
    if (snap == nullptr) {
        throw no_such_snapshot("no snapshot at t = " + std::to_string(t));
    }
    const PointCloud& cloud = snap->state.cloud;
    const std::size_t n = cloud.n();
    if (cloud.d() < 2) {
        throw invalid_argument("SVG export needs at least two dimensions");
    }
    const double flip = (t % 2 == 0) ? 1.0 : -1.0;
    std::vector<double> xs(n), ys(n);
    for (std::size_t l = 0; l < n; ++l) {
        xs[l] = flip * cloud.at(l, 0);
        ys[l] = flip * cloud.at(l, 1);
    }

    // Bounding square of the cloud with a 5% margin.
    const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
    const auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
    double span = std::max(*xmax - *xmin, *ymax - *ymin);
    if (span == 0.0) {
        span = 1.0;
    }
    const double cx = 0.5 * (*xmin + *xmax);
    const double cy = 0.5 * (*ymin + *ymax);
    const double half = 0.5 * span * 1.05;
    const double scale = canvas / (2.0 * half);
    auto px = [&](double x) { return (x - (cx - half)) * scale; };
    auto py = [&](double y) { return ((cy + half) - y) * scale; };

    std::string title = "n=" + std::to_string(n) + " d=" + std::to_string(cloud.d()) + " t=" + std::to_string(t) +
                        " seed=" + std::to_string(record.config.seed);
    if (cloud.d() > 2) {
        title += " (projected onto axes 0,1)";
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    out += "<title>" + title + "</title>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";

    auto polyline = [&](std::size_t first, std::size_t stride, const char* colour, const char* cls) {
        out += "<polyline class=\"";
        out += cls;
        out += "\" fill=\"none\" stroke=\"";
        out += colour;
        out += "\" stroke-width=\"0.8\" stroke-opacity=\"0.6\" points=\"";
        for (std::size_t l = first; l < n; l += stride) {
            out += fixed(px(xs[l])) + "," + fixed(py(ys[l])) + " ";
        }
        out += fixed(px(xs[first])) + "," + fixed(py(ys[first]));
        out += "\"/>\n";
    };
    if (n % 2 == 0) {
        polyline(0, 2, even_colour, "loop-even");
        polyline(1, 2, odd_colour, "loop-odd");
    } else {
        polyline(0, 1, "#555555", "loop");
    }

    if (n % 2 == 1 && cloud.d() == 2 && !record.model.degenerate && !snap->state.degenerate) {
        const EllipseQuadratic e = ellipse_of(record.model, t);
        const double rhs = std::exp(e.rhs_log - 2.0 * snap->state.logmag);
        // Principal axes of [[qxx, qxy], [qxy, qyy]].
        const double mean = 0.5 * (e.qxx + e.qyy);
        const double diff = 0.5 * (e.qxx - e.qyy);
        const double root = std::sqrt(diff * diff + e.qxy * e.qxy);
        const double lam1 = mean + root;
        const double lam2 = mean - root;
        if (lam2 > 0.0) {
            const double theta = 0.5 * std::atan2(2.0 * e.qxy, e.qxx - e.qyy);
            const double rx = std::sqrt(rhs / lam1) * scale;
            const double ry = std::sqrt(rhs / lam2) * scale;
            const double degrees = -theta * 180.0 / std::numbers::pi;
            out += "<ellipse class=\"predicted\" cx=\"" + fixed(px(0.0)) + "\" cy=\"" + fixed(py(0.0)) + "\" rx=\"" +
                   fixed(rx) + "\" ry=\"" + fixed(ry) + "\" transform=\"rotate(" + fixed(degrees) + " " +
                   fixed(px(0.0)) + " " + fixed(py(0.0)) +
                   ")\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
        }
    }

    for (std::size_t l = 0; l < n; ++l) {
        out += "<circle cx=\"" + fixed(px(xs[l])) + "\" cy=\"" + fixed(py(ys[l])) + "\" r=\"3\" fill=\"" +
               (l % 2 == 0 ? even_colour : odd_colour) + "\"/>\n";
    }
    out += "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" + title + "</text>\n";
    out += "</svg>\n";
    return out;
}

void emit_svg(const RunRecord& record, std::uint64_t t, const std::filesystem::path& path) {
    write_file(path, svg_string(record, t));
}

} // namespace cyclic
