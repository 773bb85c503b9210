#include <benchmark/benchmark.h>

#include "ramsey_lab/arrow_checker.hpp"
#include "ramsey_lab/bounds.hpp"
#include "ramsey_lab/constructions.hpp"
#include "ramsey_lab/random_models.hpp"
#include "ramsey_lab/threshold_solver.hpp"

namespace {

using namespace ramsey_lab;

void BM_EvalF(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_f(t, 123456, 654321));
}
BENCHMARK(BM_EvalF)->DenseRange(2, 6);

void BM_RegularMinDensity(benchmark::State& state) {
  RegularSolveOptions options;
  options.grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(regular_min_density(95412, options));
}
BENCHMARK(BM_RegularMinDensity)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_ExactFirstMoment(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(exact_first_moment(m, 6, 4, Rational(1, 2)));
}
BENCHMARK(BM_ExactFirstMoment)->RangeMultiplier(2)->Range(10, 80)->Unit(benchmark::kMicrosecond);

void BM_LeafTree(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_leaf_tree(state.range(0)));
}
BENCHMARK(BM_LeafTree)->RangeMultiplier(10)->Range(10, 100'000);

void BM_SamplePairing(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_pairing(static_cast<Vertex>(state.range(0)), 3, seed++));
  }
}
BENCHMARK(BM_SamplePairing)->Arg(1000)->Arg(10'000);

void BM_HoleExact(benchmark::State& state) {
  const Graph g = sample_gnp(static_cast<Vertex>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_hole_exact(g, 4));
}
BENCHMARK(BM_HoleExact)->Arg(30)->Arg(50)->Unit(benchmark::kMicrosecond);

void BM_HoleHeuristic(benchmark::State& state) {
  const Graph g = sample_gnp(400, 63.9 / 400, 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_hole_heuristic(g, 40, state.range(0), 1));
}
BENCHMARK(BM_HoleHeuristic)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ArrowK6Triangles(benchmark::State& state) {
  const Graph k6 = complete_graph(6);
  const auto targets = TargetSpec::parse("C3,C3");
  for (auto _ : state) benchmark::DoNotOptimize(arrows(k6, targets));
}
BENCHMARK(BM_ArrowK6Triangles)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
