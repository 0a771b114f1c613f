#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cyclic/asymptotics.hpp"
#include "cyclic/core.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/random.hpp"
#include "cyclic/serial.hpp"
#include "cyclic/spectral.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

double complex_rel(const std::vector<complex>& a, const std::vector<complex>& b) {
    double diff = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += std::norm(a[i] - b[i]);
        ref += std::norm(b[i]);
    }
    return std::sqrt(diff / ref);
}

} // namespace

TEST_CASE("dft of a constant vector lands in mode 0") {
    for (std::size_t n : {2U, 3U, 8U, 17U}) {
        const std::vector<double> x(n, 1.5);
        const auto c = dft(x);
        CHECK(c[0].real() == doctest::Approx(1.5 * std::sqrt(static_cast<double>(n))).epsilon(1e-14));
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(std::abs(c[k]) < 1e-14);
        }
        const auto back = idft(c);
        for (double v : back) {
            CHECK(v == doctest::Approx(1.5).epsilon(1e-14));
        }
    }
}

TEST_CASE("two-point dft") {
    const auto c = dft(std::vector<double>{1.0, 0.0});
    CHECK(c[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::abs(c[0].imag()) < 1e-16);
    CHECK(std::abs(c[1].imag()) < 1e-16);
}

TEST_CASE("dft matches the long-double textbook sum and round-trips") {
    for (std::size_t n = 2; n <= 128; n += 7) {
        const PointCloud x = uniform_cloud(n, 1, n);
        const auto axis = x.axis(0);
        CHECK(complex_rel(dft(axis), oracle::dft(axis)) < 1e-13);
        CHECK(oracle::rel_error(idft(dft(axis)), axis) < 1e-12);

        double lhs = 0.0, rhs = 0.0;
        for (const auto& v : dft(axis)) {
            lhs += std::norm(v);
        }
        for (double v : axis) {
            rhs += v * v;
        }
        CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    }
}

TEST_CASE("radix-2 path agrees with the direct transform") {
    for (std::size_t n = 1; n <= 1024; n *= 2) {
        std::vector<complex> z(n);
        SplitMix64 rng(n);
        for (auto& v : z) {
            v = {rng.symmetric(), rng.symmetric()};
        }
        CHECK(complex_rel(fft_radix2(z), dft(z)) < 1e-12);
    }
    CHECK_THROWS_AS(fft_radix2(std::vector<complex>(6)), cyclic::invalid_argument);
}

TEST_CASE("parallel dft agrees with the serial reference") {
    const PointCloud x = uniform_cloud(300, 1, 42);
    const auto axis = x.axis(0);
    const std::vector<complex> z(axis.begin(), axis.end());
    std::vector<complex> ref(z.size());
    serial::dft(z, ref);
    CHECK(dft(z) == ref);
    std::vector<complex> back(z.size());
    serial::idft(ref, back);
    CHECK(idft_complex(ref) == back);
}

TEST_CASE("idft rejects coefficients that are not conjugate-symmetric") {
    std::vector<complex> c(4, 0.0);
    c[1] = {1.0, 0.0};
    CHECK_THROWS_AS(idft(c), not_conjugate_symmetric);
    // Rounding-level asymmetry is tolerated.
    auto good = dft(std::vector<double>{1, 2, 3, 4});
    good[1] += complex{0.0, 1e-13};
    CHECK_NOTHROW(idft(good));
}

TEST_CASE("eigenvalues") {
    for (std::size_t n = 2; n <= 200; ++n) {
        const auto lambda = eigenvalues(n);
        CHECK(lambda[0] == complex{0.0, 0.0});
        double largest = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double expected = 2.0 * std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
            CHECK(std::abs(std::abs(lambda[k]) - expected) < 1e-12);
            largest = std::max(largest, std::abs(lambda[k]));
        }
        if (n % 2 == 0) {
            CHECK(std::abs(lambda[n / 2] - complex{-2.0, 0.0}) < 1e-12);
            CHECK(std::abs(largest - 2.0) < 1e-12);
        } else {
            const double r = 2.0 * std::cos(std::numbers::pi / (2.0 * static_cast<double>(n)));
            CHECK(std::abs(std::abs(lambda[(n - 1) / 2]) - r) < 1e-12);
            CHECK(std::abs(std::abs(lambda[(n + 1) / 2]) - r) < 1e-12);
            CHECK(std::abs(largest - r) < 1e-12);
        }
    }
}

TEST_CASE("power phase matches t * arg(lambda) for moderate t") {
    for (std::size_t n : {2U, 5U, 12U, 51U}) {
        const auto lambda = eigenvalues(n);
        for (std::size_t k = 1; k < n; ++k) {
            for (std::uint64_t t : {0ULL, 1ULL, 2ULL, 7ULL, 33ULL}) {
                const double direct = static_cast<double>(t) * std::arg(lambda[k]);
                const double reduced = eigenvalue_power_phase(n, k, t);
                CHECK(std::abs(std::remainder(direct - reduced, 2.0 * std::numbers::pi)) < 1e-11);
            }
        }
    }
}

TEST_CASE("one spectral step equals one core step") {
    for (std::size_t n = 2; n <= 128; n += 9) {
        const PointCloud x = uniform_cloud(n, 1, 7 * n);
        auto c = dft(x.axis(0));
        const auto lambda = eigenvalues(n);
        for (std::size_t k = 0; k < n; ++k) {
            c[k] *= lambda[k];
        }
        CHECK(oracle::rel_error(idft(c), step(x).axis(0)) < 1e-10);
    }
}

TEST_CASE("evolve_closed_form") {
    const PointCloud x(3, 1, {1, 0, 0});
    SUBCASE("zero steps is the identity") {
        const ScaledState s = evolve_closed_form(x, 0);
        CHECK(relative_distance(s.true_state(), x) < 1e-15);
    }
    SUBCASE("two steps from a unit impulse") {
        const PointCloud truth = evolve_closed_form(x, 2).true_state();
        CHECK(oracle::rel_error(truth.axis(0), {1, 1, -2}) < 1e-14);
    }
    SUBCASE("agrees with iteration and the long-double oracle up to t = 200") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const std::size_t n = 2 + seed * 3;
            const PointCloud y = uniform_cloud(n, 2, seed);
            for (unsigned t : {1U, 17U, 64U, 200U}) {
                const ScaledState cf = evolve_closed_form(y, t);
                CHECK(relative_distance(evolve_iterative(y, t), cf) < 1e-9);
                CHECK(oracle::rel_error(cf.true_state().axis(1), oracle::closed_form(y.axis(1), t)) < 1e-9);
            }
        }
    }
    SUBCASE("imaginary residue stays at rounding level") {
        const PointCloud y = uniform_cloud(33, 1, 8);
        auto c = dft(y.axis(0));
        c[0] = 0.0;
        for (std::size_t k = 1; k < 33; ++k) {
            c[k] *= std::polar(1.0, eigenvalue_power_phase(33, k, 12345));
        }
        double imag = 0.0, total = 0.0;
        for (const auto& v : idft_complex(c)) {
            imag += v.imag() * v.imag();
            total += std::norm(v);
        }
        CHECK(std::sqrt(imag / total) < 1e-10);
    }
    SUBCASE("a million steps for n = 50") {
        const PointCloud y = uniform_cloud(50, 2, 123);
        const ScaledState s = evolve_closed_form(y, 1000000);
        CHECK(!s.degenerate);
        CHECK(std::isfinite(s.logmag));
        const ScaledState predicted = predict_cloud(coefficients_even(y), 1000000);
        CHECK(oracle::rel_error(std::vector<double>(s.cloud.data().begin(), s.cloud.data().end()),
                                std::vector<double>(predicted.cloud.data().begin(), predicted.cloud.data().end())) <
              1e-9);
        CHECK(std::abs(s.logmag - predicted.logmag) < 1e-9 * s.logmag);
    }
    SUBCASE("continuing from a scaled state") {
        const PointCloud y = uniform_cloud(21, 3, 9);
        const ScaledState direct = evolve_closed_form(y, 900);
        const ScaledState chained = evolve_closed_form(evolve_closed_form(y, 400), 500);
        CHECK(relative_distance(chained, direct) < 1e-9);
        CHECK(chained.t() == 900);
    }
    SUBCASE("zero input stays degenerate") {
        CHECK(evolve_closed_form(PointCloud(5, 2), 10).degenerate);
    }
}

TEST_CASE("spectrum view") {
    const PointCloud x = uniform_cloud(7, 2, 1);
    const SpectrumView v = spectrum(x);
    CHECK(v.n == 7);
    CHECK(v.coeffs.size() == 2);
    CHECK(std::abs(v.omega - std::polar(1.0, 2.0 * std::numbers::pi / 7.0)) < 1e-15);
    CHECK(v.eigenvalues[0] == complex{0.0, 0.0});
    CHECK(complex_rel(v.coeffs[1], oracle::dft(x.axis(1))) < 1e-13);
}
