#include "ricci/compactify.hpp"
#include "ricci/curvature.hpp"
#include "ricci/flowfield.hpp"
#include "ricci/integrate.hpp"
#include "ricci/rootfind.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_RicciGeneral(benchmark::State& state)
{
    const auto iso = ricci::catalog_lookup(ricci::SpaceSpec::flag(ricci::FlagId::E8a3));
    const ricci::Metric g{1.0, 0.9, 1.2, 1.4};
    for (auto _ : state) {
        auto rd = ricci::ricci_general(iso, g);
        benchmark::DoNotOptimize(rd.scalar);
    }
}
BENCHMARK(BM_RicciGeneral);

void BM_RicciCompiled(benchmark::State& state)
{
    const auto iso = ricci::catalog_lookup(ricci::SpaceSpec::flag(ricci::FlagId::E8a3));
    const ricci::CompiledIsotropy fast(iso);
    const ricci::Metric g{1.0, 0.9, 1.2, 1.4};
    std::vector<double> r(4);
    for (auto _ : state) {
        fast.components(g, r);
        benchmark::DoNotOptimize(r[0]);
    }
}
BENCHMARK(BM_RicciCompiled);

void BM_PolynomialSystem(benchmark::State& state)
{
    const auto spec = ricci::SpaceSpec::stiefel_block(6, 2);
    for (auto _ : state) {
        auto field = ricci::polynomial_system(spec);
        benchmark::DoNotOptimize(field.degree());
    }
}
BENCHMARK(BM_PolynomialSystem);

void BM_CompactifyFlag(benchmark::State& state)
{
    const auto field = ricci::polynomial_system(ricci::SpaceSpec::flag(ricci::FlagId::E8a6));
    const ricci::Chart u1{ricci::ChartKind::U, 1, 4};
    for (auto _ : state) {
        auto cf = ricci::compactified_field(field, u1);
        benchmark::DoNotOptimize(cf.degree());
    }
}
BENCHMARK(BM_CompactifyFlag);

void BM_FindFixedPointsGws7(benchmark::State& state)
{
    const auto spec = ricci::SpaceSpec::gws(7);
    for (auto _ : state) {
        auto fps = ricci::find_fixed_points(spec);
        benchmark::DoNotOptimize(fps.size());
    }
}
BENCHMARK(BM_FindFixedPointsGws7);

void BM_IntegrateFlow(benchmark::State& state)
{
    const auto spec = ricci::SpaceSpec::gws(7);
    const ricci::Metric x0{1.0, 0.9, 1.1};
    for (auto _ : state) {
        auto traj = ricci::integrate_flow(spec, x0, -20.0, 1e-9);
        benchmark::DoNotOptimize(traj.times.size());
    }
}
BENCHMARK(BM_IntegrateFlow);

}  // namespace

BENCHMARK_MAIN();
