#include <benchmark/benchmark.h>

#include "hypflow/ball3d.hpp"
#include "hypflow/euler.hpp"
#include "hypflow/growth.hpp"
#include "hypflow/navier_stokes.hpp"

using namespace hypflow;

namespace {

BoundaryData data_with_modes(int n) {
    BoundaryData d;
    d.a.resize(n);
    d.b.resize(n);
    for (int k = 0; k < n; ++k) {
        d.a[k] = 1.0 / (k + 1.0);
        d.b[k] = 0.5 / (k + 1.0);
    }
    return d;
}

void BM_HarmonicGradient(benchmark::State& state) {
    const HarmonicPotential pot(data_with_modes(static_cast<int>(state.range(0))));
    const DiskPoint p(0.37, -0.52);
    for (auto _ : state) benchmark::DoNotOptimize(pot.gradient(p));
}
BENCHMARK(BM_HarmonicGradient)->Arg(4)->Arg(16)->Arg(64);

void BM_EulerResidual(benchmark::State& state) {
    const SteadySolution sol = build_steady(data_with_modes(8));
    const DiskPoint p(0.37, -0.52);
    for (auto _ : state) benchmark::DoNotOptimize(euler_residual(sol, p));
}
BENCHMARK(BM_EulerResidual);

void BM_NSResidualTerms(benchmark::State& state) {
    const NSSolution sol(data_with_modes(8), TimeProfile::exponential(2.0));
    const DiskPoint p(0.37, -0.52);
    for (auto _ : state) benchmark::DoNotOptimize(ns_residual_terms(sol, 0.5, p));
}
BENCHMARK(BM_NSResidualTerms);

void BM_L2Norms(benchmark::State& state) {
    const HarmonicPotential pot(data_with_modes(16));
    const DiskRule rule = DiskRule::for_degree(34);
    for (auto _ : state) benchmark::DoNotOptimize(l2_norms(pot, rule));
}
BENCHMARK(BM_L2Norms);

void BM_BallGradient(benchmark::State& state) {
    const BallPotential3D pot([](const Vec3& xi) { return xi.z; },
                              static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)));
    const Vec3 x{0.0, 0.0, 0.99};
    for (auto _ : state) benchmark::DoNotOptimize(pot.gradient(x));
}
BENCHMARK(BM_BallGradient)->Arg(12)->Arg(24)->Arg(48);

void BM_GrowthCurve2D(benchmark::State& state) {
    const HarmonicPotential pot(data_with_modes(4));
    const AngularEnergy s = circle_energy(pot, 16);
    for (auto _ : state)
        benchmark::DoNotOptimize(truncated_energy_growth(s, 2, uniform_radii(10.0, 40), 8, 4.0));
}
BENCHMARK(BM_GrowthCurve2D);

}  // namespace

BENCHMARK_MAIN();
