#include <benchmark/benchmark.h>

#include "ruled/algebra.hpp"
#include "ruled/frenet.hpp"
#include "ruled/invariants.hpp"
#include "ruled/surfaces.hpp"
#include "ruled/verify.hpp"

using namespace ruled;

static void BM_FrenetAt(benchmark::State& state) {
    const LieAlgebra3 so3 = builtin("so3");
    const Curve h = helix_curve(0.8, 0.6);
    double s = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(frenet_at(so3, h, s));
        s += 1e-3;
    }
}
BENCHMARK(BM_FrenetAt);

static void BM_Grid(benchmark::State& state) {
    const auto spec = make_family_surface(builtin("so3"), helix_curve(0.8, 0.6), Family::Binormal);
    const SurfaceGrid grid{{0.0, 6.0, 40}, {-1.0, 1.0, 20}};
    const auto pipeline = state.range(0) == 0 ? Pipeline::Definitional : Pipeline::ClosedForm;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_grid(spec, grid, pipeline, static_cast<unsigned>(state.range(1))));
    }
    state.SetItemsProcessed(state.iterations() * 800);
}
BENCHMARK(BM_Grid)->ArgsProduct({{0, 1}, {1, 4}})->Unit(benchmark::kMillisecond);

static void BM_PropertySuite(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(property_suite(kDefaultSeed, 20, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_PropertySuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
