#include <benchmark/benchmark.h>

#include "bratteli/cylinder_algebra.hpp"
#include "bratteli/diagonal.hpp"
#include "bratteli/normalization.hpp"
#include "bratteli/path_space.hpp"

using namespace bratteli;

namespace {

BratteliDiagram example() {
  return BratteliDiagram({{3, 5}, {11, 10}, {21, 21}},
                         {MultiplicityMatrix{{1, 1}, {0, 2}}, MultiplicityMatrix{{1, 1}, {1, 1}}});
}

BratteliDiagram doubling(std::size_t depth) {
  return extend(BratteliDiagram({{1}}, {}, MultiplicityMatrix{{2}}), depth - 1);
}

void BM_NormalizeDrinen(benchmark::State& state) {
  const BratteliDiagram d({{3, 5}, {11 + state.range(0), 10}, {21 + state.range(0), 21 + state.range(0)}},
                          {MultiplicityMatrix{{1, 1}, {0, 2}}, MultiplicityMatrix{{1, 1}, {1, 1}}});
  for (auto _ : state) benchmark::DoNotOptimize(normalize(d, Strategy::drinen));
}
BENCHMARK(BM_NormalizeDrinen)->Arg(0)->Arg(16)->Arg(64);

void BM_CountPathsDeep(benchmark::State& state) {
  const auto d = doubling(static_cast<std::size_t>(state.range(0)));
  const PointSet s{{0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(count_paths(d, s));
}
BENCHMARK(BM_CountPathsDeep)->Arg(64)->Arg(512);

void BM_Tower(benchmark::State& state) {
  const auto d = normalize(example(), Strategy::drinen);
  const auto s = compute_point_set(d, Strategy::drinen);
  for (auto _ : state) benchmark::DoNotOptimize(verify_tower(d, s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Tower)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Masa(benchmark::State& state) {
  const auto d = normalize(example(), Strategy::drinen);
  const auto s = compute_point_set(d, Strategy::drinen);
  for (auto _ : state) benchmark::DoNotOptimize(verify_masa(d, s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Masa)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
