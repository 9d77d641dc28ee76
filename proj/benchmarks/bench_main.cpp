#include "gtprobe/classifier.hpp"
#include "gtprobe/gt_polytope.hpp"
#include "gtprobe/probes.hpp"

#include <benchmark/benchmark.h>

using namespace gtprobe;

namespace {

OrbitSpec orbit_of(std::initializer_list<long> xs)
{
    std::vector<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return OrbitSpec(v);
}

RationalVector point(long a, long b, long c, long den)
{
    return {Rational(Integer(a), Integer(den)), Rational(Integer(b), Integer(den)), Rational(Integer(c), Integer(den))};
}

void BM_VerticesGT4(benchmark::State& state)
{
    const OrbitSpec o = orbit_of({7, 3, -2, -8});
    for (auto _ : state) benchmark::DoNotOptimize(build_gt_polytope(o).vertices().size());
}
BENCHMARK(BM_VerticesGT4)->Unit(benchmark::kMillisecond);

void BM_VerticesGT5(benchmark::State& state)
{
    const OrbitSpec o = orbit_of({9, 5, 1, -4, -11});
    for (auto _ : state) benchmark::DoNotOptimize(build_gt_polytope(o).vertices().size());
}
BENCHMARK(BM_VerticesGT5)->Unit(benchmark::kMillisecond);

void BM_ProbeSearchDisplaceable(benchmark::State& state)
{
    const HPolytope p = su3_polytope(orbit_of({3, -1, -2}));
    const RationalVector u = point(7, -7, 0, 4);
    for (auto _ : state) benchmark::DoNotOptimize(displacing_probe_search(p, u).has_value());
}
BENCHMARK(BM_ProbeSearchDisplaceable);

void BM_Certificate(benchmark::State& state)
{
    const HPolytope p = su3_polytope(orbit_of({3, -1, -2}));
    const RationalVector u = point(3, -3, 0, 2);
    for (auto _ : state) benchmark::DoNotOptimize(certify_not_probe_displaceable(p, u).facets.size());
}
BENCHMARK(BM_Certificate);

void BM_Sweep(benchmark::State& state)
{
    const OrbitSpec o = orbit_of({3, 1, -4});
    const auto den = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sweep_w_segment(o, den).entries.size());
}
BENCHMARK(BM_Sweep)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
