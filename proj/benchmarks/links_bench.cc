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

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "quotlift/automorphism.h"
#include "quotlift/link.h"
#include "quotlift_cli/generator.h"

namespace quotlift {
namespace {

std::vector<Instance> Batch(int size, int index) {
  std::vector<Instance> out;
  for (uint64_t seed = 0; seed < 64; ++seed) out.push_back(cli::GenerateInstance(seed, {size, index, 2}));
  return out;
}

void BM_LinkFiniteIndex(benchmark::State& state) {
  const auto batch = Batch(static_cast<int>(state.range(0)), 4);
  size_t i = 0;
  for (auto _ : state) {
    const auto& inst = batch[i++ % batch.size()];
    benchmark::DoNotOptimize(LinkFiniteIndex(inst.e, *inst.f, inst.gens));
  }
}
BENCHMARK(BM_LinkFiniteIndex)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_VerifyLink(benchmark::State& state) {
  const auto batch = Batch(static_cast<int>(state.range(0)), 4);
  std::vector<FinEqrel> links;
  for (const auto& inst : batch) links.push_back(LinkFiniteIndex(inst.e, *inst.f, inst.gens));
  size_t i = 0;
  for (auto _ : state) {
    const size_t k = i++ % batch.size();
    benchmark::DoNotOptimize(VerifyLink(batch[k].e, *batch[k].f, links[k]));
  }
}
BENCHMARK(BM_VerifyLink)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ExtendByGroup(benchmark::State& state) {
  const auto batch = Batch(static_cast<int>(state.range(0)), 4);
  size_t i = 0;
  for (auto _ : state) {
    const auto& inst = batch[i++ % batch.size()];
    benchmark::DoNotOptimize(ExtendByGroup(inst.e, inst.gens));
  }
}
BENCHMARK(BM_ExtendByGroup)->Arg(16)->Arg(64);

}  // namespace
}  // namespace quotlift

BENCHMARK_MAIN();
