#include "cyclic/core.hpp"

#include <cmath>
#include <string>

#include "cyclic/errors.hpp"
#include "twiddle.hpp"

namespace cyclic {

namespace {

// Below this many coordinates the OpenMP fork costs more than the loop.
constexpr std::size_t parallel_threshold = 1 << 14;

void step_kernel(std::span<const double> in, std::span<double> out, std::size_t n, std::size_t d) {
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (n * d >= parallel_threshold)
    for (std::int64_t li = 0; li < rows; ++li) {
        const auto l = static_cast<std::size_t>(li);
        const std::size_t next = (l + 1 == n) ? 0 : l + 1;
        for (std::size_t a = 0; a < d; ++a) {
            out[l * d + a] = in[next * d + a] - in[l * d + a];
        }
    }
}

std::vector<double> axis_norms_of(const PointCloud& cloud) {
    std::vector<double> norms(cloud.d(), 0.0);
    for (std::size_t l = 0; l < cloud.n(); ++l) {
        for (std::size_t a = 0; a < cloud.d(); ++a) {
            norms[a] += cloud.at(l, a) * cloud.at(l, a);
        }
    }
    for (double& v : norms) {
        v = std::sqrt(v);
    }
    return norms;
}

// Divides by the current norm and moves it into logmag.
void rescale(ScaledState& s, double norm) {
    for (double& v : s.cloud.data()) {
        v /= norm;
    }
    s.logmag += std::log(norm);
}

ScaledState degenerate_state(const PointCloud& shape) {
    ScaledState s;
    s.cloud = PointCloud(shape.n(), shape.d(), shape.t());
    s.logmag = 0.0;
    s.axis_norms.assign(shape.d(), 0.0);
    s.degenerate = true;
    return s;
}

} // namespace

PointCloud step(const PointCloud& state) {
    PointCloud out(state.n(), state.d(), state.t() + 1);
    step_kernel(state.data(), out.data(), state.n(), state.d());
    return out;
}

ScaledState to_scaled(const PointCloud& state) {
    const double norm = state.frobenius_norm();
    if (norm == 0.0) {
        return degenerate_state(state);
    }
    ScaledState s;
    s.cloud = state;
    s.logmag = 0.0;
    rescale(s, norm);
    s.axis_norms = axis_norms_of(s.cloud);
    return s;
}

ScaledState normalize(const PointCloud& state) {
    if (state.is_zero()) {
        throw degenerate_zero("cannot normalize an all-zero point cloud");
    }
    return to_scaled(state);
}

ScaledState evolve_iterative(const PointCloud& state, std::uint64_t steps) {
    return evolve_iterative(to_scaled(state), steps);
}

ScaledState evolve_iterative(ScaledState state, std::uint64_t steps) {
    if (state.degenerate) {
        state.cloud.set_t(state.cloud.t() + steps);
        return state;
    }
    const std::size_t n = state.cloud.n();
    const std::size_t d = state.cloud.d();
    PointCloud scratch(n, d);
    for (std::uint64_t i = 0; i < steps; ++i) {
        step_kernel(state.cloud.data(), scratch.data(), n, d);
        std::swap(state.cloud, scratch);
        state.cloud.set_t(scratch.t() + 1);
        const double norm = state.cloud.frobenius_norm();
        if (norm == 0.0) {
            state.cloud.set_t(state.cloud.t() + (steps - i - 1));
            return degenerate_state(state.cloud);
        }
        if (norm < rescale_lower || norm > rescale_upper) {
            rescale(state, norm);
        }
    }
    const double norm = state.cloud.frobenius_norm();
    if (norm != 1.0) {
        rescale(state, norm);
    }
    state.axis_norms = axis_norms_of(state.cloud);
    return state;
}

PointCloud evolve_binomial(const PointCloud& state, std::uint64_t steps) {
    if (steps > max_binomial_steps) {
        throw steps_too_large("binomial route supports at most " + std::to_string(max_binomial_steps) +
                              " steps, got " + std::to_string(steps));
    }
    const std::size_t n = state.n();
    const std::size_t d = state.d();
    const auto coeff = detail::binomial_row(steps);
    PointCloud out(n, d, state.t() + steps);
    const double outer = (steps % 2 == 0) ? 1.0 : -1.0;
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (n * d * (steps + 1) >= parallel_threshold)
    for (std::int64_t ki = 0; ki < rows; ++ki) {
        const auto k = static_cast<std::size_t>(ki);
        for (std::size_t a = 0; a < d; ++a) {
            double acc = 0.0;
            std::size_t idx = k;
            for (std::uint64_t i = 0; i <= steps; ++i) {
                const double term = coeff[i] * state.at(idx, a);
                acc += (i % 2 == 0) ? term : -term;
                idx = (idx + 1 == n) ? 0 : idx + 1;
            }
            out.at(k, a) = outer * acc;
        }
    }
    return out;
}

std::vector<double> center_sum(const PointCloud& state) {
    std::vector<double> sum(state.d(), 0.0);
    for (std::size_t l = 0; l < state.n(); ++l) {
        for (std::size_t a = 0; a < state.d(); ++a) {
            sum[a] += state.at(l, a);
        }
    }
    return sum;
}

} // namespace cyclic
