// Serial reference kernels against the OpenMP ones. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "cyclic/core.hpp"
#include "cyclic/harness.hpp"
#include "cyclic/random.hpp"
#include "cyclic/serial.hpp"
#include "cyclic/spectral.hpp"

namespace {

using complex = std::complex<double>;

std::vector<complex> complex_signal(std::size_t n) {
    const cyclic::PointCloud x = cyclic::uniform_cloud(n, 1, 1);
    return {x.data().begin(), x.data().end()};
}

void step_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const cyclic::PointCloud x = cyclic::uniform_cloud(n, 2, 1);
    std::vector<double> out(x.data().size());
    for (auto _ : state) {
        cyclic::serial::step(x.data(), out, n, 2);
        benchmark::DoNotOptimize(out.data());
    }
}

void step_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const cyclic::PointCloud x = cyclic::uniform_cloud(n, 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclic::step(x));
    }
}

void dft_serial(benchmark::State& state) {
    const auto x = complex_signal(static_cast<std::size_t>(state.range(0)));
    std::vector<complex> out(x.size());
    for (auto _ : state) {
        cyclic::serial::dft(x, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void dft_parallel(benchmark::State& state) {
    const auto x = complex_signal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclic::dft(std::span<const complex>(x)));
    }
}

void binomial_serial(benchmark::State& state) {
    const cyclic::PointCloud x = cyclic::uniform_cloud(static_cast<std::size_t>(state.range(0)), 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclic::serial::binomial(x, 60));
    }
}

void binomial_parallel(benchmark::State& state) {
    const cyclic::PointCloud x = cyclic::uniform_cloud(static_cast<std::size_t>(state.range(0)), 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclic::evolve_binomial(x, 60));
    }
}

void batch(benchmark::State& state) {
    cyclic::RunConfig config;
    config.steps = 300;
    config.routes = {cyclic::Route::spectral};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclic::run_batch(config, static_cast<std::size_t>(state.range(0))));
    }
}

} // namespace

BENCHMARK(step_serial)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(step_parallel)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(dft_serial)->Arg(256)->Arg(2048);
BENCHMARK(dft_parallel)->Arg(256)->Arg(2048);
BENCHMARK(binomial_serial)->Arg(256)->Arg(4096);
BENCHMARK(binomial_parallel)->Arg(256)->Arg(4096);
BENCHMARK(batch)->Arg(8);

BENCHMARK_MAIN();
