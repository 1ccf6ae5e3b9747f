#include <benchmark/benchmark.h>

#include "weierforge/builder.hpp"
#include "weierforge/periods.hpp"
#include "weierforge/runge.hpp"
#include "weierforge/weierstrass.hpp"

using namespace weierforge;

namespace {

void BM_ResidueCircle(benchmark::State& s) {
  const OneForm w(HoloFunction::laurent_about(0.0, {{-1, 1.0}, {3, 0.5}}));
  const Path c = Path::circle(0.0, 1.0, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(integrate(w, c));
}
BENCHMARK(BM_ResidueCircle)->Arg(64)->Arg(256)->Arg(1024);

void BM_RungeTaylor(benchmark::State& s) {
  const CompactSet disk = CompactSet::disk(0.0, 1.0);
  const HoloFunction f = HoloFunction::laurent_about(2.0, {{-1, 1.0}});
  RungeOptions o;
  o.fixed_degree = static_cast<int>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(approx_with_divisor(f, disk, Divisor({{0.0, 2}}), 1.0, o));
}
BENCHMARK(BM_RungeTaylor)->Arg(21)->Arg(40);

void BM_SampleGrid(benchmark::State& s) {
  const CompactSet K = CompactSet::disk(0.0, 1.5);
  Immersion im;
  im.triple = from_spin_data({HoloFunction::identity(), OneForm(HoloFunction::identity())}, K);
  im.domain = K;
  const auto xs = linspace(-1.0, 1.0, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(sample_grid(im, xs, xs));
}
BENCHMARK(BM_SampleGrid)->Arg(32)->Arg(128);

void BM_SolvePeriods(benchmark::State& s) {
  const PeriodProblem pp = catenoid_problem({1.0, 2.0, 3.0}, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(solve_periods(pp));
}
BENCHMARK(BM_SolvePeriods)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_InitStage(benchmark::State& s) {
  StageConfig cfg;
  cfg.nx = cfg.ny = static_cast<int>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(init_stage(cfg));
}
BENCHMARK(BM_InitStage)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
