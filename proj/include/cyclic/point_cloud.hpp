#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cyclic {

/// n labelled points in d dimensions at one time step.
///
/// Coordinates are stored row-major: row l holds the d coordinates of point
/// p_l, so at(l, a) is the a-th coordinate of the l-th point. Labels are the
/// row indices 0..n-1 and are read cyclically (label n is label 0).
class PointCloud {
public:
    PointCloud() = default;

    /// Zero cloud of n points in d dimensions at time t.
    PointCloud(std::size_t n, std::size_t d, std::uint64_t t = 0);

    /// Takes ownership of row-major coordinates; throws invalid_argument if
    /// the size does not match n*d, n < 2, d < 1 or an entry is not finite.
    PointCloud(std::size_t n, std::size_t d, std::vector<double> coords, std::uint64_t t = 0);

    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }
    std::uint64_t t() const noexcept { return t_; }
    void set_t(std::uint64_t t) noexcept { t_ = t; }

    double& at(std::size_t l, std::size_t a) { return coords_[l * d_ + a]; }
    double at(std::size_t l, std::size_t a) const { return coords_[l * d_ + a]; }

    std::span<double> row(std::size_t l) { return {coords_.data() + l * d_, d_}; }
    std::span<const double> row(std::size_t l) const { return {coords_.data() + l * d_, d_}; }

    std::span<double> data() noexcept { return coords_; }
    std::span<const double> data() const noexcept { return coords_; }

    /// Values of one coordinate axis, gathered across all points.
    std::vector<double> axis(std::size_t a) const;
    void set_axis(std::size_t a, std::span<const double> values);

    double frobenius_norm() const;
    bool is_zero() const;

    bool operator==(const PointCloud&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::uint64_t t_ = 0;
    std::vector<double> coords_;
};

/// A PointCloud stored as a unit-norm shape times exp(logmag).
///
/// The true state is exp(logmag) * cloud. When the true state is identically
/// zero, `degenerate` is set, the cloud is all zeros and logmag is 0.
/// axis_norms[a] is the norm of axis a of the stored cloud; dividing axis a by
/// it gives the per-axis normalization used for plotting.
struct ScaledState {
    PointCloud cloud;
    double logmag = 0.0;
    std::vector<double> axis_norms;
    bool degenerate = false;

    std::uint64_t t() const noexcept { return cloud.t(); }

    /// exp(logmag) * cloud. Overflows for large logmag; meant for tests and
    /// small step counts.
    PointCloud true_state() const;

    /// Cloud with each axis scaled to unit norm separately.
    PointCloud per_axis_normalized() const;

    bool operator==(const ScaledState&) const = default;
};

/// Relative Frobenius distance ||a - b|| / ||b|| between the true states of
/// two scaled states, evaluated without leaving the log domain. Two
/// degenerate states are at distance 0.
double relative_distance(const ScaledState& a, const ScaledState& b);

/// Same, for unscaled clouds.
double relative_distance(const PointCloud& a, const PointCloud& b);

} // namespace cyclic
