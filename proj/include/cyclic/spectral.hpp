#pragma once

// Fourier diagonalization of the evolution. Under the unitary transform
//   c_k = n^{-1/2} sum_j x_j w^{-jk},  w = exp(2 pi i / n),
// one step multiplies mode k by lambda_k = w^k - 1, so t steps multiply it by
// lambda_k^t and any time can be reached without iterating.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclic/point_cloud.hpp"

namespace cyclic {

using complex = std::complex<double>;

/// Maximum imaginary residue, relative to the output norm, that idft
/// discards silently.
inline constexpr double conjugate_symmetry_tolerance = 1e-9;

/// Per-axis transform of a cloud together with the mode multipliers.
struct SpectrumView {
    std::size_t n = 0;
    complex omega;                            // exp(2 pi i / n)
    std::vector<std::vector<complex>> coeffs; // coeffs[a][k]
    std::vector<complex> eigenvalues;         // w^k - 1
};

/// Unitary DFT of a real vector (direct O(n^2) sum, OpenMP over modes).
std::vector<complex> dft(std::span<const double> values);
std::vector<complex> dft(std::span<const complex> values);

/// Radix-2 FFT with the same convention; n must be a power of two.
std::vector<complex> fft_radix2(std::span<const complex> values);

/// Inverse transform back to a real vector. Throws not_conjugate_symmetric if
/// the imaginary part of the result exceeds conjugate_symmetry_tolerance
/// times its norm.
std::vector<double> idft(std::span<const complex> coeffs);

/// Inverse transform without the reality check.
std::vector<complex> idft_complex(std::span<const complex> coeffs);

/// lambda_k = w^k - 1 for k = 0..n-1.
std::vector<complex> eigenvalues(std::size_t n);

/// log |lambda_k| = log(2 sin(pi k / n)); -inf for k = 0.
double log_eigenvalue_magnitude(std::size_t n, std::size_t k);

/// arg(lambda_k^t) reduced to (-pi, pi], computed from the exact rational
/// angle pi (n + 2k) / (2n) so that it stays accurate for very large t.
double eigenvalue_power_phase(std::size_t n, std::size_t k, std::uint64_t t);

SpectrumView spectrum(const PointCloud& cloud);

/// State after `steps` steps via the closed form lambda_k^t c_k, with the
/// powers taken in log-polar form and the largest mode magnitude factored
/// into logmag. Valid for arbitrarily large step counts.
ScaledState evolve_closed_form(const PointCloud& state, std::uint64_t steps);
ScaledState evolve_closed_form(const ScaledState& state, std::uint64_t steps);

} // namespace cyclic
