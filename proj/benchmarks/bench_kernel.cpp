#include <benchmark/benchmark.h>

#include "fraclap/kernel.hpp"

using namespace fraclap;

static void BM_KernelEval(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PeriodizedKernel ker(n, FracOrder(0.5));
    std::array<double, 3> x{1.1, 0.7, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(ker.eval(x));
}
BENCHMARK(BM_KernelEval)->Arg(1)->Arg(2);

static void BM_PointwiseApply(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    TorusGrid g(1, N);
    SpectralFunction v = random_band_limited(1, 4, 3);
    TorusFunction vg = synthesize(v, g);
    FracOrder order(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(frac_laplacian_pointwise(vg, order));
}
BENCHMARK(BM_PointwiseApply)->Arg(64)->Arg(128);

static void BM_DirichletSolve(benchmark::State& state) {
    TorusGrid g(1, 64);
    NonlocalDirichletProblem p;
    p.grid = g;
    p.order = FracOrder(0.5);
    p.interior.assign(g.total_nodes(), 0);
    p.exterior_data.assign(g.total_nodes(), 1.0);
    for (std::size_t i = 0; i < g.total_nodes(); ++i)
        if (std::abs(g.node(i)[0]) < 0.5 * kPi) p.interior[i] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_solve(p));
}
BENCHMARK(BM_DirichletSolve);
