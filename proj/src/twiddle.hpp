#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace cyclic::detail {

// unit[m] = exp(2 pi i m / n). Exponents are reduced mod n before lookup so
// that large products j*k lose no accuracy.
inline std::vector<std::complex<double>> unit_roots(std::size_t n) {
    std::vector<std::complex<double>> unit(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        unit[m] = {std::cos(angle), std::sin(angle)};
    }
    return unit;
}

// Exact binomial row C(t, 0..t) for t <= 66 (fits in uint64).
inline std::vector<double> binomial_row(std::uint64_t t) {
    std::vector<std::uint64_t> row(t + 1, 0);
    row[0] = 1;
    for (std::uint64_t r = 1; r <= t; ++r) {
        for (std::uint64_t i = r; i > 0; --i) {
            row[i] += row[i - 1];
        }
    }
    return {row.begin(), row.end()};
}

} // namespace cyclic::detail
