#include <benchmark/benchmark.h>

#include "nbie/analytic_cases.hpp"
#include "nbie/layer_potentials.hpp"

namespace {

const nbie::QuadratureRule& rule() {
    static const nbie::QuadratureRule r =
        nbie::generate_points(nbie::Surface::unit_sphere(), 1.0 / 16, 70.0 * M_PI / 180.0);
    return r;
}

} // namespace

static void BM_GeneratePoints(benchmark::State& state) {
    const nbie::Surface s = nbie::Surface::unit_sphere();
    const double h = 1.0 / state.range(0);
    for (auto _ : state) {
        auto r = nbie::generate_points(s, h, 70.0 * M_PI / 180.0);
        benchmark::DoNotOptimize(r.total_weight);
    }
}
BENCHMARK(BM_GeneratePoints)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_ApplyAdjointFifth(benchmark::State& state) {
    const auto& r = rule();
    const nbie::SurfaceField f = nbie::sample(nbie::spherical_harmonic_f, r);
    const nbie::KernelConfig cfg =
        nbie::KernelConfig{nbie::KernelMode::FifthOrder, nbie::DeltaRule::multiple_of_h(3.0), 0.0}
            .resolved_for(r.h);
    for (auto _ : state) {
        auto v = nbie::apply_adjoint_operator(r, f, cfg, 1);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * r.size() * r.size());
}
BENCHMARK(BM_ApplyAdjointFifth)->Unit(benchmark::kMillisecond);

static void BM_ApplyAdjointUnregularized(benchmark::State& state) {
    const auto& r = rule();
    const nbie::SurfaceField f = nbie::sample(nbie::spherical_harmonic_f, r);
    const nbie::KernelConfig cfg{nbie::KernelMode::Unregularized,
                                 nbie::DeltaRule::multiple_of_h(1.0), 0.0};
    for (auto _ : state) {
        auto v = nbie::apply_adjoint_operator(r, f, cfg, 1);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * r.size() * r.size());
}
BENCHMARK(BM_ApplyAdjointUnregularized)->Unit(benchmark::kMillisecond);

static void BM_SingleLayerField(benchmark::State& state) {
    const auto& r = rule();
    const nbie::SurfaceField f = nbie::sample(nbie::spherical_harmonic_f, r);
    for (auto _ : state) {
        auto u = nbie::eval_single_layer_surface_field(r, f, 3.0 * r.h, 1);
        benchmark::DoNotOptimize(u.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * r.size() * r.size());
}
BENCHMARK(BM_SingleLayerField)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
