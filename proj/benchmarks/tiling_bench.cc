// Copyright 2026 The quotlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "benchmark/benchmark.h"
#include "quotlift/hierarchy.h"
#include "quotlift/quasitile.h"
#include "quotlift/tower.h"

namespace quotlift {
namespace {

// Same chain as the large-target acceptance run; the argument is |A|.
void BM_QuasiTileZ(benchmark::State& state) {
  const MarkedGroup g = MarkedGroup::Z();
  const std::vector<ElemSet> chain{IntegerInterval(0, 216), IntegerInterval(0, 2), IntegerInterval(0, 1)};
  const ElemSet a = IntegerInterval(0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(QuasiTile(g, a, chain, Rational(9, 10)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QuasiTileZ)->RangeMultiplier(3)->Range(12000, 108000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_CheckTilingZ2(benchmark::State& state) {
  const MarkedGroup g = MarkedGroup::Z2();
  const std::vector<ElemSet> chain{Box2(0, 216, 0, 1), Box2(0, 2, 0, 1), Box2(0, 1, 0, 1)};
  const QuasiTileResult r = QuasiTile(g, Box2(0, state.range(0), 0, 16), chain, Rational(9, 10));
  for (auto _ : state) benchmark::DoNotOptimize(CheckTiling(g, r.tiling));
}
BENCHMARK(BM_CheckTilingZ2)->Arg(1500)->Arg(6000)->Unit(benchmark::kMillisecond);

void BM_BuildHierarchyZ(benchmark::State& state) {
  const std::vector<Rational> eps{Rational(1, 16), Rational(1, 32), Rational(1, 64), Rational(1, 128)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildHierarchy(MarkedGroup::Z(), eps, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildHierarchyZ)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BuildTowerZ(benchmark::State& state) {
  const MarkedGroup g = MarkedGroup::Z();
  const int stages = static_cast<int>(state.range(0));
  const TilingHierarchy h =
      BuildHierarchy(g, {Rational(1, 16), Rational(1, 32), Rational(1, 64), Rational(1, 128)}, stages);
  for (auto _ : state) benchmark::DoNotOptimize(BuildTower(g, h, stages));
}
BENCHMARK(BM_BuildTowerZ)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace quotlift

BENCHMARK_MAIN();
