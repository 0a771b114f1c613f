#include "cyclic/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cyclic/core.hpp"
#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

constexpr double pi = std::numbers::pi;

double alternating(std::size_t j) { return (j % 2 == 0) ? 1.0 : -1.0; }

double max_abs_entry(const PointCloud& cloud) {
    double m = 0.0;
    for (double v : cloud.data()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

// (scale) sum_j (-1)^j (cos(pi f j/n), sin(pi f j/n)) x_j, one row per axis.
// Angles are reduced to (f j mod 2n) before evaluation.
std::vector<std::array<double, 2>> pair_projection(const PointCloud& x, std::size_t f, double scale) {
    const std::size_t n = x.n();
    std::vector<std::array<double, 2>> rows(x.d(), {0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t m = (f * j) % (2 * n);
        const double angle = pi * static_cast<double>(m) / static_cast<double>(n);
        const double c = alternating(j) * std::cos(angle);
        const double s = alternating(j) * std::sin(angle);
        for (std::size_t a = 0; a < x.d(); ++a) {
            rows[a][0] += c * x.at(j, a);
            rows[a][1] += s * x.at(j, a);
        }
    }
    for (auto& r : rows) {
        r[0] *= scale;
        r[1] *= scale;
    }
    return rows;
}

// Determinant of M^T M for a d x 2 matrix; equals (AD - BC)^2 when d = 2.
double gram_determinant(const std::vector<std::array<double, 2>>& m) {
    double g00 = 0.0, g01 = 0.0, g11 = 0.0;
    for (const auto& r : m) {
        g00 += r[0] * r[0];
        g01 += r[0] * r[1];
        g11 += r[1] * r[1];
    }
    return g00 * g11 - g01 * g01;
}

// Sign (-1)^{l+t}.
double label_time_sign(std::size_t label, std::uint64_t t) {
    return ((label + t) % 2 == 0) ? 1.0 : -1.0;
}

// (cos, sin) of pi * (2l + t) / (den * n), reduced exactly mod 2 * den * n.
std::array<double, 2> phase_unit(std::size_t label, std::uint64_t t, std::size_t n, std::size_t den) {
    const std::uint64_t period = 2 * den * n;
    const std::uint64_t m = (2 * (label % n) + t % period) % period;
    const double angle = pi * static_cast<double>(m) / static_cast<double>(den * n);
    return {std::cos(angle), std::sin(angle)};
}

void require_label(const AsymptoticModel& model, std::size_t label) {
    if (label >= model.n) {
        throw invalid_argument("label " + std::to_string(label) + " out of range for n = " +
                               std::to_string(model.n));
    }
}

} // namespace

double odd_rate(std::size_t n) { return 2.0 * std::cos(pi / (2.0 * static_cast<double>(n))); }

double second_order_rate(std::size_t n) { return 2.0 * std::cos(pi / static_cast<double>(n)); }

AsymptoticModel coefficients_odd(const PointCloud& initial) {
    const std::size_t n = initial.n();
    if (n % 2 == 0) {
        throw wrong_parity("coefficients_odd needs odd n, got " + std::to_string(n));
    }
    AsymptoticModel model;
    model.parity = Parity::odd;
    model.n = n;
    model.d = initial.d();
    model.rate = odd_rate(n);
    model.pair_coeffs = pair_projection(initial, 1, 2.0 / static_cast<double>(n));

    double largest = 0.0;
    for (const auto& r : model.pair_coeffs) {
        largest = std::max({largest, std::abs(r[0]), std::abs(r[1])});
    }
    const double scale = max_abs_entry(initial);
    if (largest <= degeneracy_tolerance * scale) {
        model.degenerate = true;
    } else if (model.d >= 2) {
        // |AD - BC| <= tol * max|coef|^2, compared in squared form.
        const double tol = degeneracy_tolerance * largest * largest;
        model.degenerate = gram_determinant(model.pair_coeffs) <= tol * tol;
    }
    return model;
}

AsymptoticModel coefficients_even(const PointCloud& initial) {
    const std::size_t n = initial.n();
    if (n % 2 != 0) {
        throw wrong_parity("coefficients_even needs even n, got " + std::to_string(n));
    }
    AsymptoticModel model;
    model.parity = Parity::even;
    model.n = n;
    model.d = initial.d();
    model.rate = 2.0;
    model.dominant.assign(initial.d(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t a = 0; a < initial.d(); ++a) {
            model.dominant[a] += alternating(j) * initial.at(j, a);
        }
    }
    for (double& v : model.dominant) {
        v /= static_cast<double>(n);
    }
    if (n >= 4) {
        model.second_order = ModeCoefficients{second_order_rate(n),
                                              pair_projection(initial, 2, 2.0 / static_cast<double>(n))};
    }
    double largest = 0.0;
    for (double v : model.dominant) {
        largest = std::max(largest, std::abs(v));
    }
    model.degenerate = largest <= degeneracy_tolerance * max_abs_entry(initial);
    return model;
}

AsymptoticModel coefficients(const PointCloud& initial) {
    return initial.n() % 2 == 0 ? coefficients_even(initial) : coefficients_odd(initial);
}

PredictedPoint predict_odd(const AsymptoticModel& model, std::size_t label, std::uint64_t t) {
    if (model.parity != Parity::odd) {
        throw wrong_parity("predict_odd needs an odd-n model");
    }
    require_label(model, label);
    const auto [c, s] = phase_unit(label, t, model.n, 2);
    const double sign = label_time_sign(label, t);
    PredictedPoint p;
    p.logmag = static_cast<double>(t) * std::log(model.rate);
    p.coords.resize(model.d);
    for (std::size_t a = 0; a < model.d; ++a) {
        p.coords[a] = sign * (model.pair_coeffs[a][0] * c + model.pair_coeffs[a][1] * s);
    }
    return p;
}

PredictedPoint predict_even(const AsymptoticModel& model, std::size_t label, std::uint64_t t,
                            bool include_second_order) {
    if (model.parity != Parity::even) {
        throw wrong_parity("predict_even needs an even-n model");
    }
    require_label(model, label);
    const double sign = label_time_sign(label, t);
    PredictedPoint p;
    p.coords.assign(model.d, 0.0);

    std::array<double, 2> unit{0.0, 0.0};
    if (model.second_order) {
        unit = phase_unit(label, t, model.n, 1);
    }
    auto second = [&](std::size_t a) {
        const auto& row = model.second_order->by_axis[a];
        return row[0] * unit[0] + row[1] * unit[1];
    };

    if (model.degenerate) {
        if (!model.second_order || model.second_order->rate <= 0.0) {
            return p;
        }
        p.logmag = static_cast<double>(t) * std::log(model.second_order->rate);
        for (std::size_t a = 0; a < model.d; ++a) {
            p.coords[a] = sign * second(a);
        }
        return p;
    }

    p.logmag = static_cast<double>(t) * std::log(2.0);
    const bool with_second = include_second_order && model.second_order;
    const double relative = with_second ? std::pow(model.second_order->rate / 2.0, static_cast<double>(t)) : 0.0;
    for (std::size_t a = 0; a < model.d; ++a) {
        double v = model.dominant[a];
        if (with_second) {
            v += relative * second(a);
        }
        p.coords[a] = sign * v;
    }
    return p;
}

PredictedPoint predict(const AsymptoticModel& model, std::size_t label, std::uint64_t t) {
    return model.parity == Parity::odd ? predict_odd(model, label, t) : predict_even(model, label, t);
}

ScaledState predict_cloud(const AsymptoticModel& model, std::uint64_t t) {
    PointCloud cloud(model.n, model.d, t);
    double logmag = 0.0;
    for (std::size_t l = 0; l < model.n; ++l) {
        auto p = predict(model, l, t);
        logmag = p.logmag;
        for (std::size_t a = 0; a < model.d; ++a) {
            cloud.at(l, a) = p.coords[a];
        }
    }
    ScaledState out = to_scaled(cloud);
    if (!out.degenerate) {
        out.logmag += logmag;
    }
    return out;
}

EllipseQuadratic ellipse_of(const AsymptoticModel& model, std::uint64_t t) {
    if (model.parity != Parity::odd) {
        throw wrong_parity("the limiting ellipse exists only for odd n");
    }
    if (model.d != 2) {
        throw invalid_argument("ellipse_of needs d = 2, got d = " + std::to_string(model.d));
    }
    const double A = model.pair_coeffs[0][0];
    const double B = model.pair_coeffs[0][1];
    const double C = model.pair_coeffs[1][0];
    const double D = model.pair_coeffs[1][1];
    const double det = A * D - B * C;
    const double largest = std::max({std::abs(A), std::abs(B), std::abs(C), std::abs(D)});
    if (std::abs(det) <= degeneracy_tolerance * largest * largest) {
        throw degenerate_ellipse("AD - BC vanishes; the dominant mode does not span an ellipse");
    }
    EllipseQuadratic e;
    e.qxx = C * C + D * D;
    e.qxy = -(A * C + B * D);
    e.qyy = A * A + B * B;
    e.rhs_log = 2.0 * std::log(std::abs(det)) + 2.0 * static_cast<double>(t) * std::log(model.rate);
    return e;
}

double ellipse_residual(const ScaledState& state, const EllipseQuadratic& ellipse) {
    const PointCloud& cloud = state.cloud;
    if (cloud.d() != 2) {
        throw invalid_argument("ellipse_residual needs d = 2");
    }
    if (state.degenerate) {
        throw degenerate_zero("ellipse_residual of an all-zero state");
    }
    const double rhs = std::exp(ellipse.rhs_log - 2.0 * state.logmag);
    double sum = 0.0;
    for (std::size_t l = 0; l < cloud.n(); ++l) {
        const double q = ellipse.evaluate(cloud.at(l, 0), cloud.at(l, 1)) / rhs - 1.0;
        sum += q * q;
    }
    return std::sqrt(sum / static_cast<double>(cloud.n()));
}

ParitySeparation parity_separation(const PointCloud& cloud) {
    const std::size_t n = cloud.n();
    const std::size_t d = cloud.d();
    if (n % 2 != 0) {
        throw wrong_parity("parity separation needs even n, got " + std::to_string(n));
    }
    double mean_sq = 0.0;
    for (double v : cloud.data()) {
        mean_sq += v * v;
    }
    mean_sq /= static_cast<double>(n);
    ParitySeparation out;
    if (mean_sq == 0.0) {
        return out;
    }
    const double inv_radius = 1.0 / std::sqrt(mean_sq);

    auto distance = [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (std::size_t a = 0; a < d; ++a) {
            const double e = cloud.at(i, a) - cloud.at(j, a);
            s += e * e;
        }
        return std::sqrt(s) * inv_radius;
    };
    auto diameter = [&](std::size_t first) {
        double best = 0.0;
        for (std::size_t i = first; i < n; i += 2) {
            for (std::size_t j = i + 2; j < n; j += 2) {
                best = std::max(best, distance(i, j));
            }
        }
        return best;
    };
    out.even_diameter = diameter(0);
    out.odd_diameter = diameter(1);

    std::vector<double> even(d, 0.0), odd(d, 0.0);
    for (std::size_t l = 0; l < n; ++l) {
        auto& target = (l % 2 == 0) ? even : odd;
        for (std::size_t a = 0; a < d; ++a) {
            target[a] += cloud.at(l, a);
        }
    }
    const double half = static_cast<double>(n / 2);
    double gap = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        const double e = (even[a] - odd[a]) / half;
        gap += e * e;
    }
    out.gap = std::sqrt(gap) * inv_radius;
    return out;
}

double growth_rate(std::span<const Snapshot> trajectory) {
    if (trajectory.size() < 2) {
        throw insufficient_snapshots("growth_rate needs at least two snapshots, got " +
                                     std::to_string(trajectory.size()));
    }
    const Snapshot& first = trajectory.front();
    const Snapshot& last = trajectory.back();
    if (last.t <= first.t) {
        throw insufficient_snapshots("growth_rate needs increasing snapshot times");
    }
    if (first.state.degenerate || last.state.degenerate) {
        throw insufficient_snapshots("growth_rate is undefined on a zero state");
    }
    return (last.state.logmag - first.state.logmag) / static_cast<double>(last.t - first.t);
}

PointCloud sign_aligned(const PointCloud& cloud) {
    PointCloud out = cloud;
    for (std::size_t l = 0; l < out.n(); ++l) {
        const double sign = label_time_sign(l, out.t());
        for (double& v : out.row(l)) {
            v *= sign;
        }
    }
    return out;
}

} // namespace cyclic
