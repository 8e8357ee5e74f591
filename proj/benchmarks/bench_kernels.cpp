#include <benchmark/benchmark.h>

#include <cmath>

#include "nbie/kernels.hpp"

static void BM_Erf(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        x += 6.0 / 1024.0;
        if (x > 6.0) x -= 6.0;
        benchmark::DoNotOptimize(nbie::erf(x));
    }
}
BENCHMARK(BM_Erf);

static void BM_ShapeFifth(benchmark::State& state) {
    double rho = 0.0;
    for (auto _ : state) {
        rho += 6.0 / 1024.0;
        if (rho > 6.0) rho -= 6.0;
        benchmark::DoNotOptimize(nbie::shape_fifth(rho));
    }
}
BENCHMARK(BM_ShapeFifth);

static void BM_SingleLayerShape(benchmark::State& state) {
    double rho = 0.0;
    for (auto _ : state) {
        rho += 6.0 / 1024.0;
        if (rho > 6.0) rho -= 6.0;
        benchmark::DoNotOptimize(nbie::single_layer_shape(rho));
    }
}
BENCHMARK(BM_SingleLayerShape);

BENCHMARK_MAIN();
