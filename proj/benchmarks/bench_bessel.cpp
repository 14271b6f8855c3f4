#include <benchmark/benchmark.h>

#include "fraclap/extension.hpp"
#include "fraclap/special_functions.hpp"

using namespace fraclap;

static void BM_BesselK(benchmark::State& state) {
    double z = state.range(0) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(bessel_k_integral(0.3, z));
}
BENCHMARK(BM_BesselK)->Arg(1)->Arg(10)->Arg(100)->Arg(300);

static void BM_ExtensionMultiplier(benchmark::State& state) {
    FracOrder order(0.7);
    double s = 0.0;
    for (auto _ : state) {
        s += 1e-4;
        benchmark::DoNotOptimize(extension_multiplier(order, 0.5 + s));
    }
}
BENCHMARK(BM_ExtensionMultiplier);
