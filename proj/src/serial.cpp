#include "cyclic/serial.hpp"

#include <cmath>

#include "cyclic/errors.hpp"
#include "twiddle.hpp"

namespace cyclic::serial {

void step(std::span<const double> in, std::span<double> out, std::size_t n, std::size_t d) {
    for (std::size_t l = 0; l < n; ++l) {
        const std::size_t next = (l + 1 == n) ? 0 : l + 1;
        for (std::size_t a = 0; a < d; ++a) {
            out[l * d + a] = in[next * d + a] - in[l * d + a];
        }
    }
}

void dft(std::span<const std::complex<double>> x, std::span<std::complex<double>> out) {
    const std::size_t n = x.size();
    const auto unit = detail::unit_roots(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        std::size_t m = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += x[j] * std::conj(unit[m]);
            m += k;
            if (m >= n) {
                m -= n;
            }
        }
        out[k] = acc * scale;
    }
}

void idft(std::span<const std::complex<double>> c, std::span<std::complex<double>> out) {
    const std::size_t n = c.size();
    const auto unit = detail::unit_roots(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t l = 0; l < n; ++l) {
        std::complex<double> acc{0.0, 0.0};
        std::size_t m = 0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += c[k] * unit[m];
            m += l;
            if (m >= n) {
                m -= n;
            }
        }
        out[l] = acc * scale;
    }
}

PointCloud binomial(const PointCloud& initial, std::uint64_t steps) {
    const std::size_t n = initial.n();
    const std::size_t d = initial.d();
    const auto coeff = detail::binomial_row(steps);
    PointCloud out(n, d, initial.t() + steps);
    const double outer = (steps % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < d; ++a) {
            double acc = 0.0;
            for (std::uint64_t i = 0; i <= steps; ++i) {
                const double sign = (i % 2 == 0) ? 1.0 : -1.0;
                acc += sign * coeff[i] * initial.at((k + i) % n, a);
            }
            out.at(k, a) = outer * acc;
        }
    }
    return out;
}

} // namespace cyclic::serial
