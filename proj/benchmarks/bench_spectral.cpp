#include <benchmark/benchmark.h>

#include "fraclap/spectral.hpp"

using namespace fraclap;

static void BM_Analyze(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int N = static_cast<int>(state.range(1));
    TorusGrid g(n, N);
    SpectralFunction v = random_band_limited(n, 4, 1);
    TorusFunction vg = synthesize(v, g);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(vg, N / 2 - 1));
}
BENCHMARK(BM_Analyze)->Args({1, 64})->Args({1, 128})->Args({2, 32})->Args({2, 64});

static void BM_Synthesize(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int N = static_cast<int>(state.range(1));
    TorusGrid g(n, N);
    SpectralFunction v = random_band_limited(n, N / 2 - 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(synthesize(v, g));
}
BENCHMARK(BM_Synthesize)->Args({1, 128})->Args({2, 32});

static void BM_Multiplier(benchmark::State& state) {
    SpectralFunction v = random_band_limited(2, 31, 1);
    FracOrder order(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(frac_laplacian_spectral(v, order));
}
BENCHMARK(BM_Multiplier);
