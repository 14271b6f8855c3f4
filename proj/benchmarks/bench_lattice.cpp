#include <benchmark/benchmark.h>

#include "fraclap/lattice.hpp"
#include "fraclap/grid.hpp"

using namespace fraclap;

static void BM_LatticePowerSum1D(benchmark::State& state) {
    std::array<double, 3> w{1.234, 0.0, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(lattice_power_sum(1, 2.0, w, kTwoPi));
}
BENCHMARK(BM_LatticePowerSum1D);

static void BM_LatticePowerSumEwald2D(benchmark::State& state) {
    std::array<double, 3> w{1.234, -0.7, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(lattice_power_sum(2, 3.0, w, kTwoPi));
}
BENCHMARK(BM_LatticePowerSumEwald2D);

static void BM_EpsteinContinuation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(epstein_zeta(2, 1.0));
}
BENCHMARK(BM_EpsteinContinuation);
