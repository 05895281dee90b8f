// Serial reference against OpenMP kernels. Thread count follows EXPWELL_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "expwell/oracle.hpp"
#include "expwell/spectrum.hpp"
#include "expwell/wavefunc.hpp"

namespace {

using namespace expwell;

const PhysParams kParams{};

std::vector<double> spectrum_grid() {
    return energy_grid(1e-6 * kParams.energy_unit(), default_scan_floor(kParams), 400);
}

void BM_SampleSpectrum(benchmark::State& state, Exec exec) {
    const auto grid = spectrum_grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_spectrum(kParams, grid, exec));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

void BM_SampleMismatch(benchmark::State& state, Exec exec) {
    const auto grid = energy_grid(1e-2, -3.0, 20);
    const oracle::ShootingConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::sample_mismatch(kParams, grid, cfg, exec));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

void BM_Sweep(benchmark::State& state, Exec exec) {
    std::vector<double> v0;
    for (double v = -0.5; v >= -4.0; v -= 0.5) v0.push_back(v);
    SweepOptions opts;
    opts.exec = exec;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_v0(kParams, v0, opts));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(v0.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_SampleSpectrum, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SampleSpectrum, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SampleMismatch, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SampleMismatch, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
