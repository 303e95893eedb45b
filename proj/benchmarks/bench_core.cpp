#include <benchmark/benchmark.h>

#include "latfree/constructions.hpp"
#include "latfree/functionals.hpp"
#include "latfree/inequalities.hpp"
#include "latfree/lattice.hpp"
#include "latfree/random.hpp"
#include "latfree/search.hpp"

namespace latfree {
namespace {

ConvexPolygon regular(int n, double radius) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * 3.14159265358979323846 * i / n;
    pts.push_back({0.5 + radius * std::cos(t), 0.5 + radius * std::sin(t)});
  }
  return ConvexPolygon(std::move(pts));
}

void BM_Report(benchmark::State& state) {
  const ConvexPolygon p = regular(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(report(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Report)->RangeMultiplier(4)->Range(4, 256)->Complexity(benchmark::oNCubed);

void BM_Circumcircle(benchmark::State& state) {
  const ConvexPolygon p = regular(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(circumcircle(p));
}
BENCHMARK(BM_Circumcircle)->RangeMultiplier(4)->Range(4, 4096);

void BM_IsLatticeFreeStrip(benchmark::State& state) {
  const ConvexPolygon p = kn_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_lattice_free(p));
}
BENCHMARK(BM_IsLatticeFreeStrip)->RangeMultiplier(10)->Range(1, 100000);

void BM_MaxLatticeFreeScale(benchmark::State& state) {
  const ConvexPolygon p = regular(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(max_lattice_free_scale(p, {0.5, 0.5}));
}
BENCHMARK(BM_MaxLatticeFreeScale)->Arg(4)->Arg(16)->Arg(64);

void BM_EvaluateAll(benchmark::State& state) {
  const ConvexPolygon p = random_lattice_free(1, 8);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_all(p));
}
BENCHMARK(BM_EvaluateAll);

void BM_GridSearchLr(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(grid_search_lr(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GridSearchLr)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_VerifyBatch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_batch(static_cast<std::size_t>(state.range(0)), 7));
}
BENCHMARK(BM_VerifyBatch)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_AnnealPR(benchmark::State& state) {
  SearchConfig config;
  config.objective = Objective::kPerimeterMinusFourCircumradii;
  config.iterations = static_cast<int>(state.range(0));
  config.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(anneal(config));
}
BENCHMARK(BM_AnnealPR)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace latfree

BENCHMARK_MAIN();
