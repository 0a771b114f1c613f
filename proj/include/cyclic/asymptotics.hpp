#pragma once

// Large-t behaviour of the evolution. The largest |lambda_k| is
//   r  = 2 cos(pi / 2n) at k = (n +- 1)/2   for odd n,
//   2                  at k = n/2           for even n,
// so after the transient the cloud is governed by that mode pair (odd n:
// points on an ellipse) or that single mode (even n: two antipodal clusters,
// one per label parity). The even case carries a second shell at
// r1 = 2 cos(pi / n), k = n/2 +- 1.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclic/point_cloud.hpp"

namespace cyclic {

enum class Parity { even, odd };

/// Mode-pair coefficients: row a holds (cos, sin) coefficients for axis a,
/// i.e. the (A, B) / (C, D) pairs for x / y in two dimensions.
struct ModeCoefficients {
    double rate = 0.0;                             // |lambda| of the shell
    std::vector<std::array<double, 2>> by_axis;    // d rows

    bool operator==(const ModeCoefficients&) const = default;
};

struct AsymptoticModel {
    Parity parity = Parity::odd;
    std::size_t n = 0;
    std::size_t d = 0;
    double rate = 0.0;

    // Odd n: one (cos, sin) pair per axis. Even n: unused.
    std::vector<std::array<double, 2>> pair_coeffs;
    // Even n: alternating means (A, C, ...). Odd n: unused.
    std::vector<double> dominant;
    // Even n with n >= 4: the r1 shell.
    std::optional<ModeCoefficients> second_order;

    bool degenerate = false;

    bool operator==(const AsymptoticModel&) const = default;
};

/// A predicted true position stored as exp(logmag) * coords.
struct PredictedPoint {
    double logmag = 0.0;
    std::vector<double> coords;
};

/// Conic qxx x^2 + 2 qxy xy + qyy y^2 = exp(rhs_log).
struct EllipseQuadratic {
    double qxx = 0.0;
    double qxy = 0.0;
    double qyy = 0.0;
    double rhs_log = 0.0;

    double evaluate(double x, double y) const { return qxx * x * x + 2.0 * qxy * x * y + qyy * y * y; }
};

struct ParitySeparation {
    double even_diameter = 0.0;
    double odd_diameter = 0.0;
    double gap = 0.0;

    bool operator==(const ParitySeparation&) const = default;
};

/// A scaled state tagged with the step it was taken at.
struct Snapshot {
    std::uint64_t t = 0;
    ScaledState state;

    bool operator==(const Snapshot&) const = default;
};

/// Coefficients below this fraction of the initial cloud's largest entry (or
/// its square, for AD - BC) count as zero.
inline constexpr double degeneracy_tolerance = 1e-12;

double odd_rate(std::size_t n);         // 2 cos(pi / 2n)
double second_order_rate(std::size_t n); // 2 cos(pi / n)

/// (2/n) sum_j (-1)^j (cos(pi j/n), sin(pi j/n)) x_j per axis.
AsymptoticModel coefficients_odd(const PointCloud& initial);

/// (1/n) sum_j (-1)^j x_j per axis, plus the r1 shell
/// (2/n) sum_j (-1)^j (cos(2 pi j/n), sin(2 pi j/n)) x_j when n >= 4.
AsymptoticModel coefficients_even(const PointCloud& initial);

/// Dispatches on the parity of n.
AsymptoticModel coefficients(const PointCloud& initial);

/// r^t (-1)^{l+t} (A cos phi + B sin phi, ...), phi = pi (l + t/2) / n.
PredictedPoint predict_odd(const AsymptoticModel& model, std::size_t label, std::uint64_t t);

/// 2^t (-1)^{l+t} [(A, C, ...) + (r1/2)^t M1 (cos phi, sin phi)],
/// phi = 2 pi (l + t/2) / n. When the dominant means vanish the prediction is
/// the r1 term alone, with logmag t log r1.
PredictedPoint predict_even(const AsymptoticModel& model, std::size_t label, std::uint64_t t,
                            bool include_second_order = true);

PredictedPoint predict(const AsymptoticModel& model, std::size_t label, std::uint64_t t);

/// The whole predicted cloud at time t, as a unit-norm ScaledState.
ScaledState predict_cloud(const AsymptoticModel& model, std::uint64_t t);

/// (C^2+D^2) x^2 - 2(AC+BD) xy + (A^2+B^2) y^2 = (AD-BC)^2 r^{2t}.
/// Requires odd n and d = 2; throws degenerate_ellipse when AD - BC vanishes.
EllipseQuadratic ellipse_of(const AsymptoticModel& model, std::uint64_t t);

/// RMS over points of Q(x_l)/rhs - 1 on the stored unit cloud, with rhs
/// rescaled by exp(-2 logmag). Zero when every point is on the ellipse.
double ellipse_residual(const ScaledState& state, const EllipseQuadratic& ellipse);

/// Diameters of the even- and odd-label point sets and the distance between
/// their centroids, measured on the cloud rescaled to unit RMS point radius.
/// Requires even n.
ParitySeparation parity_separation(const PointCloud& cloud);

/// (logmag(t2) - logmag(t1)) / (t2 - t1) using the first and last snapshots.
double growth_rate(std::span<const Snapshot> trajectory);

/// Multiplies point l by (-1)^{l+t}.
PointCloud sign_aligned(const PointCloud& cloud);

} // namespace cyclic
