#include "cyclic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "cyclic/asymptotics.hpp"
#include "cyclic/core.hpp"
#include "cyclic/random.hpp"
#include "cyclic/serial.hpp"
#include "cyclic/spectral.hpp"

namespace cyclic {

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

double rel(std::span<const double> a, std::span<const double> b) {
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += (a[i] - b[i]) * (a[i] - b[i]);
        ref += b[i] * b[i];
    }
    if (ref == 0.0) {
        return std::sqrt(diff);
    }
    return std::sqrt(diff / ref);
}

double rel_complex(std::span<const complex> a, std::span<const complex> b) {
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += std::norm(a[i] - b[i]);
        ref += std::norm(b[i]);
    }
    return ref == 0.0 ? std::sqrt(diff) : std::sqrt(diff / ref);
}

PointCloud rotate_labels(const PointCloud& x) {
    PointCloud out(x.n(), x.d(), x.t());
    for (std::size_t l = 0; l < x.n(); ++l) {
        for (std::size_t a = 0; a < x.d(); ++a) {
            out.at(l, a) = x.at((l + 1) % x.n(), a);
        }
    }
    return out;
}

struct Sampler {
    SplitMix64 rng;
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng.next() % bound); }
    std::size_t n_in(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
};

} // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed, std::size_t configs) {
    Sampler s{SplitMix64(seed)};
    CheckResult routes{"route equivalence (iterative/binomial/closed form, t<=25)", 0.0, 1e-9, 0};
    CheckResult spectral_step{"spectral step equals core step", 0.0, 1e-10, 0};
    CheckResult sum_zero{"sum-zero after t>=1 (relative to norm)", 0.0, 1e-12, 0};
    CheckResult parseval{"Parseval", 0.0, 1e-12, 0};
    CheckResult round_trip{"DFT round trip", 0.0, 1e-12, 0};
    CheckResult shift{"shift equivariance", 0.0, 1e-15, 0};
    CheckResult linear{"linearity (t<=20)", 0.0, 1e-10, 0};
    CheckResult axes{"axis independence", 0.0, 1e-15, 0};
    CheckResult radius{"spectral radius 2 / 2cos(pi/2n), n in [2,200]", 0.0, 1e-12, 0};
    CheckResult two_step{"predictor two-step identity", 0.0, 1e-10, 0};
    CheckResult projection{"coefficients equal DFT projection", 0.0, 1e-10, 0};
    CheckResult radix2{"radix-2 FFT equals direct DFT", 0.0, 1e-12, 0};
    CheckResult kernels{"OpenMP kernels equal serial reference", 0.0, 0.0, 0};

    for (std::size_t c = 0; c < configs; ++c) {
        const std::size_t n = s.n_in(2, 64);
        const std::size_t d = s.n_in(1, 3);
        const std::uint64_t t = s.n_in(0, 25);
        const PointCloud x = uniform_cloud(n, d, s.rng.next());

        const ScaledState it = evolve_iterative(x, t);
        const ScaledState bi = to_scaled(evolve_binomial(x, t));
        const ScaledState cf = evolve_closed_form(x, t);
        routes.max_error = std::max({routes.max_error, relative_distance(it, cf), relative_distance(bi, cf),
                                     relative_distance(it, bi)});
        ++routes.cases;

        const PointCloud stepped = step(x);
        for (std::size_t a = 0; a < d; ++a) {
            const auto axis = x.axis(a);
            auto coeffs = dft(axis);
            const auto lambda = eigenvalues(n);
            const double coeff_norm = [&] {
                double v = 0.0;
                for (const auto& z : coeffs) {
                    v += std::norm(z);
                }
                return std::sqrt(v);
            }();
            parseval.max_error = std::max(parseval.max_error, std::abs(coeff_norm - norm2(axis)) / norm2(axis));
            round_trip.max_error = std::max(round_trip.max_error, rel(idft(coeffs), axis));
            for (std::size_t k = 0; k < n; ++k) {
                coeffs[k] *= lambda[k];
            }
            spectral_step.max_error = std::max(spectral_step.max_error, rel(idft(coeffs), stepped.axis(a)));

            // Evolving one axis alone equals that axis of the joint evolution.
            PointCloud single(n, 1, axis, 0);
            const PointCloud alone = evolve_binomial(single, std::min<std::uint64_t>(t, 20));
            const PointCloud joint = evolve_binomial(x, std::min<std::uint64_t>(t, 20));
            axes.max_error = std::max(axes.max_error, rel(alone.axis(0), joint.axis(a)));
        }
        ++parseval.cases;
        ++round_trip.cases;
        ++spectral_step.cases;
        ++axes.cases;

        if (t >= 1) {
            const PointCloud evolved = evolve_binomial(x, t);
            const auto sums = center_sum(evolved);
            sum_zero.max_error = std::max(sum_zero.max_error, norm2(sums) / evolved.frobenius_norm());
            ++sum_zero.cases;
        }

        shift.max_error = std::max(shift.max_error, rel(step(rotate_labels(x)).data(), rotate_labels(step(x)).data()));
        ++shift.cases;

        {
            const PointCloud y = uniform_cloud(n, d, s.rng.next());
            const double scalar = 3.0 * s.rng.symmetric();
            std::vector<double> mix(n * d);
            for (std::size_t i = 0; i < mix.size(); ++i) {
                mix[i] = scalar * x.data()[i] + y.data()[i];
            }
            const std::uint64_t tl = std::min<std::uint64_t>(t, 20);
            const PointCloud lhs = evolve_binomial(PointCloud(n, d, mix), tl);
            const PointCloud ex = evolve_binomial(x, tl);
            const PointCloud ey = evolve_binomial(y, tl);
            std::vector<double> rhs(n * d);
            for (std::size_t i = 0; i < rhs.size(); ++i) {
                rhs[i] = scalar * ex.data()[i] + ey.data()[i];
            }
            linear.max_error = std::max(linear.max_error, rel(lhs.data(), rhs));
            ++linear.cases;
        }

        {
            const AsymptoticModel model = coefficients(x);
            const double root_n = std::sqrt(static_cast<double>(n));
            auto coeff_rel = [](double got, double want, double scale) {
                return std::abs(got - want) / std::max(std::abs(want), scale);
            };
            const double scale = 1e-3;
            for (std::size_t a = 0; a < d; ++a) {
                const auto c = dft(x.axis(a));
                if (n % 2 == 1) {
                    const complex mode = c[(n + 1) / 2];
                    projection.max_error = std::max({projection.max_error,
                                                     coeff_rel(model.pair_coeffs[a][0], 2.0 * mode.real() / root_n, scale),
                                                     coeff_rel(model.pair_coeffs[a][1], -2.0 * mode.imag() / root_n, scale)});
                } else {
                    projection.max_error = std::max(projection.max_error,
                                                    coeff_rel(model.dominant[a], c[n / 2].real() / root_n, scale));
                    if (model.second_order) {
                        const complex mode = c[n / 2 + 1];
                        const auto& row = model.second_order->by_axis[a];
                        projection.max_error = std::max({projection.max_error,
                                                         coeff_rel(row[0], 2.0 * mode.real() / root_n, scale),
                                                         coeff_rel(row[1], -2.0 * mode.imag() / root_n, scale)});
                    }
                }
            }
            ++projection.cases;

            if (n % 2 == 1) {
                for (std::size_t l = 0; l < n; ++l) {
                    const std::uint64_t tp = s.n_in(0, 400);
                    const PredictedPoint later = predict_odd(model, l, tp + 2);
                    const PredictedPoint now = predict_odd(model, (l + 1) % n, tp);
                    const double r2 = model.rate * model.rate;
                    // Compare exp(logmag) * coords without overflow: bring both
                    // onto the scale of `now`.
                    const double ratio = std::exp(later.logmag - now.logmag);
                    std::vector<double> lhs(d), rhs(d);
                    for (std::size_t a = 0; a < d; ++a) {
                        lhs[a] = ratio * later.coords[a];
                        rhs[a] = -r2 * now.coords[a];
                    }
                    two_step.max_error = std::max(two_step.max_error, rel(lhs, rhs));
                    ++two_step.cases;
                }
            }
        }

        {
            std::vector<double> a(x.data().begin(), x.data().end()), b(a.size());
            serial::step(x.data(), b, n, d);
            kernels.max_error = std::max(kernels.max_error, rel(step(x).data(), b));
            const PointCloud sb = serial::binomial(x, t);
            kernels.max_error = std::max(kernels.max_error, rel(evolve_binomial(x, t).data(), sb.data()));
            ++kernels.cases;
        }
    }

    for (std::size_t n = 2; n <= 200; ++n) {
        const auto lambda = eigenvalues(n);
        double largest = 0.0;
        for (const auto& v : lambda) {
            largest = std::max(largest, std::abs(v));
        }
        const double expected = (n % 2 == 0) ? 2.0 : 2.0 * std::cos(std::numbers::pi / (2.0 * static_cast<double>(n)));
        radius.max_error = std::max(radius.max_error, std::abs(largest - expected));
        ++radius.cases;
    }

    for (std::size_t p = 1; p <= 10; ++p) {
        const std::size_t n = std::size_t{1} << p;
        const PointCloud x = uniform_cloud(n, 1, s.rng.next());
        const auto axis = x.axis(0);
        const std::vector<complex> z(axis.begin(), axis.end());
        radix2.max_error = std::max(radix2.max_error, rel_complex(fft_radix2(z), dft(z)));
        ++radix2.cases;
    }

    return {routes, spectral_step, sum_zero, parseval, round_trip, shift, linear,
            axes,   radius,        two_step, projection, radix2,   kernels};
}

} // namespace cyclic
