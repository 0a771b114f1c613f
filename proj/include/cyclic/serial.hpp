#pragma once

// Single-threaded reference kernels. The OpenMP kernels in core.hpp and
// spectral.hpp must agree with these; the tests and bench_kernels compare the
// two paths directly.

#include <complex>
#include <cstdint>
#include <span>

#include "cyclic/point_cloud.hpp"

namespace cyclic::serial {

/// out[l][a] = in[(l+1) mod n][a] - in[l][a] over a row-major n x d buffer.
void step(std::span<const double> in, std::span<double> out, std::size_t n, std::size_t d);

/// Direct O(n^2) unitary DFT: out_k = n^{-1/2} sum_j x_j exp(-2 pi i jk/n).
void dft(std::span<const std::complex<double>> x, std::span<std::complex<double>> out);

/// Inverse of dft: out_l = n^{-1/2} sum_k c_k exp(2 pi i lk/n).
void idft(std::span<const std::complex<double>> c, std::span<std::complex<double>> out);

/// Higher-order cyclic difference of order `steps` evaluated in one pass.
PointCloud binomial(const PointCloud& initial, std::uint64_t steps);

} // namespace cyclic::serial
