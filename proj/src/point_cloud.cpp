#include "cyclic/point_cloud.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

PointCloud::PointCloud(std::size_t n, std::size_t d, std::uint64_t t)
    : PointCloud(n, d, std::vector<double>(n * d, 0.0), t) {}

PointCloud::PointCloud(std::size_t n, std::size_t d, std::vector<double> coords, std::uint64_t t)
    : n_(n), d_(d), t_(t), coords_(std::move(coords)) {
    if (n_ < 2) {
        throw invalid_argument("point cloud needs at least 2 points, got " + std::to_string(n_));
    }
    if (d_ < 1) {
        throw invalid_argument("point cloud dimension must be at least 1");
    }
    if (coords_.size() != n_ * d_) {
        throw invalid_argument("coordinate array has " + std::to_string(coords_.size()) +
                               " entries, expected " + std::to_string(n_ * d_));
    }
    for (double v : coords_) {
        if (!std::isfinite(v)) {
            throw invalid_argument("point cloud coordinates must be finite");
        }
    }
}

std::vector<double> PointCloud::axis(std::size_t a) const {
    std::vector<double> out(n_);
    for (std::size_t l = 0; l < n_; ++l) {
        out[l] = at(l, a);
    }
    return out;
}

void PointCloud::set_axis(std::size_t a, std::span<const double> values) {
    if (values.size() != n_) {
        throw invalid_argument("axis length does not match point count");
    }
    for (std::size_t l = 0; l < n_; ++l) {
        at(l, a) = values[l];
    }
}

double PointCloud::frobenius_norm() const {
    // Scaled accumulation so that norms of clouds near the overflow threshold
    // stay finite.
    double scale = 0.0;
    for (double v : coords_) {
        scale = std::max(scale, std::abs(v));
    }
    if (scale == 0.0) {
        return 0.0;
    }
    double sum = 0.0;
    for (double v : coords_) {
        const double s = v / scale;
        sum += s * s;
    }
    return scale * std::sqrt(sum);
}

bool PointCloud::is_zero() const {
    for (double v : coords_) {
        if (v != 0.0) {
            return false;
        }
    }
    return true;
}

PointCloud ScaledState::true_state() const {
    PointCloud out = cloud;
    const double factor = std::exp(logmag);
    for (double& v : out.data()) {
        v *= factor;
    }
    return out;
}

PointCloud ScaledState::per_axis_normalized() const {
    PointCloud out = cloud;
    for (std::size_t a = 0; a < out.d(); ++a) {
        double norm = 0.0;
        for (std::size_t l = 0; l < out.n(); ++l) {
            norm += out.at(l, a) * out.at(l, a);
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            continue;
        }
        for (std::size_t l = 0; l < out.n(); ++l) {
            out.at(l, a) /= norm;
        }
    }
    return out;
}

double relative_distance(const ScaledState& a, const ScaledState& b) {
    if (a.degenerate && b.degenerate) {
        return 0.0;
    }
    if (b.degenerate) {
        return std::numeric_limits<double>::infinity();
    }
    if (a.degenerate) {
        return 1.0;
    }
    const auto x = a.cloud.data();
    const auto y = b.cloud.data();
    if (x.size() != y.size()) {
        throw invalid_argument("relative_distance: shape mismatch");
    }
    const double ratio = std::exp(a.logmag - b.logmag);
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = ratio * x[i] - y[i];
        diff += e * e;
        ref += y[i] * y[i];
    }
    return std::sqrt(diff / ref);
}

double relative_distance(const PointCloud& a, const PointCloud& b) {
    const auto x = a.data();
    const auto y = b.data();
    if (x.size() != y.size()) {
        throw invalid_argument("relative_distance: shape mismatch");
    }
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        diff += (x[i] - y[i]) * (x[i] - y[i]);
        ref += y[i] * y[i];
    }
    if (ref == 0.0) {
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::sqrt(diff / ref);
}

} // namespace cyclic
