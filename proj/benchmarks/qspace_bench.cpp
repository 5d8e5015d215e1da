#include <benchmark/benchmark.h>

#include "qspace/carleson.hpp"
#include "qspace/constructions.hpp"
#include "qspace/seminorms.hpp"

using namespace qspace;

static void BM_ArcDoubleIntegral(benchmark::State& state) {
    QuadratureSpec q;
    q.M = static_cast<std::size_t>(state.range(0));
    const BoundaryFunction f = closed::cos_mode(3);
    for (auto _ : state) benchmark::DoNotOptimize(arc_double_integral(f, Arc(0.5, 1.0), 2.0, 0.5, q));
}
BENCHMARK(BM_ArcDoubleIntegral)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_BoundarySeminorm(benchmark::State& state) {
    SupSearchSpec search;
    search.J_max = static_cast<int>(state.range(0));
    const BoundaryFunction f = closed::exp_mode(1);
    for (auto _ : state) benchmark::DoNotOptimize(qps_boundary_seminorm(f, SpaceParams{}, search, QuadratureSpec{}));
}
BENCHMARK(BM_BoundarySeminorm)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_MobiusTerm(benchmark::State& state) {
    const BoundaryFunction f = closed::cos_mode(2);
    const DiskPoint a(cplx(0.9, 0.2));
    for (auto _ : state) benchmark::DoNotOptimize(qps_mobius_term(f, a, SpaceParams{}, QuadratureSpec{}));
}
BENCHMARK(BM_MobiusTerm)->Unit(benchmark::kMillisecond);

static void BM_GradientForm(benchmark::State& state) {
    SupSearchSpec search;
    search.J_max = 6;
    const BoundaryFunction f = closed::cos_mode(1);
    for (auto _ : state) benchmark::DoNotOptimize(carleson_gradient_form(f, SpaceParams{}, search, QuadratureSpec{}));
}
BENCHMARK(BM_GradientForm)->Unit(benchmark::kMillisecond);

static void BM_SectorCarleson(benchmark::State& state) {
    const PointSequence seq = kc_sequence(KCParams(0.8, 0.4, 0.5, 0.3, 0.0, static_cast<std::size_t>(state.range(0))));
    const DiscretePointMeasure mu = blaschke_zero_measure(seq.points, 0.8);
    for (auto _ : state) benchmark::DoNotOptimize(sector_carleson_sup(mu, 0.8, SupSearchSpec{}));
}
BENCHMARK(BM_SectorCarleson)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_MobiusCarleson(benchmark::State& state) {
    const PointSequence seq = kc_sequence(KCParams(0.8, 0.4, 0.5, 0.3, 0.0, 1000));
    const DiscretePointMeasure mu = blaschke_zero_measure(seq.points, 0.8);
    for (auto _ : state) benchmark::DoNotOptimize(mobius_carleson_sup(mu, 0.8, SupSearchSpec{}));
}
BENCHMARK(BM_MobiusCarleson)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
