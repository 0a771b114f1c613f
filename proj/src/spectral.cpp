#include "cyclic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cyclic/core.hpp"
#include "cyclic/errors.hpp"
#include "twiddle.hpp"

namespace cyclic {

namespace {

constexpr std::size_t parallel_threshold = 1 << 14;

// Direct sum, one mode per iteration. sign = -1 for the forward transform.
std::vector<complex> direct_transform(std::span<const complex> x, int sign) {
    const std::size_t n = x.size();
    if (n == 0) {
        throw invalid_argument("transform of an empty vector");
    }
    const auto unit = detail::unit_roots(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<complex> out(n);
    const auto modes = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (n * n >= parallel_threshold)
    for (std::int64_t ki = 0; ki < modes; ++ki) {
        const auto k = static_cast<std::size_t>(ki);
        complex acc{0.0, 0.0};
        std::size_t m = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += x[j] * (sign < 0 ? std::conj(unit[m]) : unit[m]);
            m += k;
            if (m >= n) {
                m -= n;
            }
        }
        out[k] = acc * scale;
    }
    return out;
}

std::vector<complex> to_complex(std::span<const double> values) {
    return {values.begin(), values.end()};
}

} // namespace

std::vector<complex> dft(std::span<const double> values) {
    const auto x = to_complex(values);
    return direct_transform(x, -1);
}

std::vector<complex> dft(std::span<const complex> values) {
    return direct_transform(values, -1);
}

std::vector<complex> fft_radix2(std::span<const complex> values) {
    const std::size_t n = values.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw invalid_argument("fft_radix2 needs a power-of-two length, got " + std::to_string(n));
    }
    std::vector<complex> a(values.begin(), values.end());
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    const auto unit = detail::unit_roots(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const complex w = std::conj(unit[j * stride]);
                const complex u = a[i + j];
                const complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& v : a) {
        v *= scale;
    }
    return a;
}

std::vector<complex> idft_complex(std::span<const complex> coeffs) {
    return direct_transform(coeffs, +1);
}

std::vector<double> idft(std::span<const complex> coeffs) {
    const auto z = idft_complex(coeffs);
    double total = 0.0;
    double imag = 0.0;
    for (const auto& v : z) {
        total += std::norm(v);
        imag += v.imag() * v.imag();
    }
    if (std::sqrt(imag) > conjugate_symmetry_tolerance * std::sqrt(total)) {
        throw not_conjugate_symmetric("inverse transform has imaginary residue " +
                                      std::to_string(std::sqrt(imag / total)) +
                                      " relative to its norm; coefficients are not conjugate-symmetric");
    }
    std::vector<double> out(z.size());
    std::transform(z.begin(), z.end(), out.begin(), [](const complex& v) { return v.real(); });
    return out;
}

std::vector<complex> eigenvalues(std::size_t n) {
    if (n < 2) {
        throw invalid_argument("eigenvalues need n >= 2");
    }
    const auto unit = detail::unit_roots(n);
    std::vector<complex> lambda(n);
    lambda[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        lambda[k] = unit[k] - 1.0;
    }
    return lambda;
}

double log_eigenvalue_magnitude(std::size_t n, std::size_t k) {
    if (k % n == 0) {
        return -std::numeric_limits<double>::infinity();
    }
    const double s = std::sin(std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n));
    return std::log(2.0 * s);
}

double eigenvalue_power_phase(std::size_t n, std::size_t k, std::uint64_t t) {
    // lambda_k = 2 sin(pi k/n) exp(i pi (n + 2k) / (2n)); the phase of the
    // t-th power is pi * m / (2n) with m = t (n + 2k) mod 4n.
    const std::uint64_t period = 4 * static_cast<std::uint64_t>(n);
    const std::uint64_t base = (static_cast<std::uint64_t>(n) + 2 * (k % n)) % period;
    std::uint64_t m = ((t % period) * base) % period;
    double angle = std::numbers::pi * static_cast<double>(m) / (2.0 * static_cast<double>(n));
    if (angle > std::numbers::pi) {
        angle -= 2.0 * std::numbers::pi;
    }
    return angle;
}

SpectrumView spectrum(const PointCloud& cloud) {
    SpectrumView view;
    view.n = cloud.n();
    view.omega = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(cloud.n()));
    view.eigenvalues = eigenvalues(cloud.n());
    view.coeffs.reserve(cloud.d());
    for (std::size_t a = 0; a < cloud.d(); ++a) {
        const auto axis = cloud.axis(a);
        view.coeffs.push_back(dft(axis));
    }
    return view;
}

ScaledState evolve_closed_form(const PointCloud& state, std::uint64_t steps) {
    return evolve_closed_form(to_scaled(state), steps);
}

ScaledState evolve_closed_form(const ScaledState& state, std::uint64_t steps) {
    const std::size_t n = state.cloud.n();
    const std::size_t d = state.cloud.d();
    if (state.degenerate) {
        ScaledState out = state;
        out.cloud.set_t(state.t() + steps);
        return out;
    }

    std::vector<std::vector<complex>> coeffs(d);
    for (std::size_t a = 0; a < d; ++a) {
        coeffs[a] = dft(state.cloud.axis(a));
    }

    // Log-magnitude of each mode multiplier; lambda_0^0 = 1, lambda_0^t = 0.
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    std::vector<double> log_gain(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (steps == 0) {
            log_gain[k] = 0.0;
        } else if (k == 0) {
            log_gain[k] = neg_inf;
        } else {
            log_gain[k] = static_cast<double>(steps) * log_eigenvalue_magnitude(n, k);
        }
    }

    // Factor out the largest surviving mode so the inverse transform works
    // with magnitudes near one.
    double shift = neg_inf;
    for (std::size_t k = 0; k < n; ++k) {
        if (log_gain[k] == neg_inf) {
            continue;
        }
        double largest = 0.0;
        for (std::size_t a = 0; a < d; ++a) {
            largest = std::max(largest, std::abs(coeffs[a][k]));
        }
        if (largest > 0.0) {
            shift = std::max(shift, log_gain[k] + std::log(largest));
        }
    }
    if (shift == neg_inf) {
        return to_scaled(PointCloud(n, d, state.t() + steps));
    }

    PointCloud evolved(n, d, state.t() + steps);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t k = 0; k < n; ++k) {
            if (log_gain[k] == neg_inf) {
                coeffs[a][k] = 0.0;
                continue;
            }
            const double phase = (steps == 0) ? 0.0 : eigenvalue_power_phase(n, k, steps);
            coeffs[a][k] *= std::polar(std::exp(log_gain[k] - shift), phase);
        }
        evolved.set_axis(a, idft(coeffs[a]));
    }

    ScaledState out = to_scaled(evolved);
    if (!out.degenerate) {
        out.logmag += state.logmag + shift;
    }
    return out;
}

} // namespace cyclic
