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

#include "quotlift_cli/generator.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "quotlift/automorphism.h"
#include "quotlift/errors.h"

namespace quotlift::cli {
namespace {

std::vector<int> Shuffled(std::mt19937_64& rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(v[i], v[Draw(rng, i + 1)]);
  return v;
}

}  // namespace

uint64_t Draw(std::mt19937_64& rng, uint64_t n) {
  if (n == 0) throw PreconditionError("Draw needs a positive bound");
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

Instance GenerateInstance(uint64_t seed, const GenParams& params) {
  if (params.size < 1 || params.size > 64) throw InputError("gen: |X| must lie in [1, 64]");
  if (params.index < 1 || params.index > params.size) {
    throw InputError("gen: index must lie in [1, |X|]");
  }
  if (params.gens < 1 || params.gens > 8) throw InputError("gen: generator count must lie in [1, 8]");
  std::mt19937_64 rng(seed);

  // blocks[b] = list of classes, each a list of points.
  std::vector<std::vector<std::vector<int>>> blocks;
  int next = 0;
  for (bool first = true; next < params.size; first = false) {
    int remaining = params.size - next;
    int kmax = std::min(params.index, remaining);
    int k = first ? kmax : 1 + static_cast<int>(Draw(rng, kmax));
    int smax = std::min(3, remaining / k);
    int s = 1 + static_cast<int>(Draw(rng, smax));
    std::vector<std::vector<int>> block(k);
    for (auto& cls : block)
      for (int j = 0; j < s; ++j) cls.push_back(next++);
    blocks.push_back(std::move(block));
  }

  std::vector<Perm> gens;
  for (int gi = 0; gi < params.gens; ++gi) {
    Perm t(params.size);
    for (const auto& block : blocks) {
      const int k = static_cast<int>(block.size());
      std::vector<int> sigma(k);
      if (gi == 0) {
        for (int c = 0; c < k; ++c) sigma[c] = (c + 1) % k;
      } else {
        sigma = Shuffled(rng, k);
      }
      for (int c = 0; c < k; ++c) {
        const auto& from = block[c];
        const auto& to = block[sigma[c]];
        std::vector<int> match = Shuffled(rng, static_cast<int>(from.size()));
        for (size_t j = 0; j < from.size(); ++j) t[from[j]] = to[match[j]];
      }
    }
    gens.push_back(std::move(t));
  }

  std::vector<int> relabel = Shuffled(rng, params.size);
  std::vector<std::vector<int>> classes;
  for (const auto& block : blocks) {
    for (const auto& cls : block) {
      std::vector<int> c;
      for (int x : cls) c.push_back(relabel[x]);
      classes.push_back(std::move(c));
    }
  }
  for (auto& t : gens) {
    Perm u(params.size);
    for (int x = 0; x < params.size; ++x) u[relabel[x]] = relabel[t[x]];
    t = std::move(u);
  }
  Instance inst{FinEqrel::FromClasses(params.size, classes), std::nullopt, gens};
  ExtensionResult ext = ExtendByGroup(inst.e, gens);
  if (!ext.normal) throw ConstraintViolation("generator", "gen produced a non-automorphism");
  inst.f = ext.extended;
  return inst;
}

}  // namespace quotlift::cli
