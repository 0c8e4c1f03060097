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

#ifndef QUOTLIFT_HIERARCHY_H_
#define QUOTLIFT_HIERARCHY_H_

#include <vector>

#include "json.hpp"
#include "quotlift/ledger.h"
#include "quotlift/marked_group.h"
#include "quotlift/quasitile.h"

namespace quotlift {

struct HierarchyLevel {
  std::vector<ElemSet> family;  // 𝒜_n
  std::vector<Rational> p;      // p^n, a probability distribution on 𝒜_n
  // For n ≥ 1: an (𝒜_{n−1}, ε_{n−1})-quasi-tiling of each A ∈ 𝒜_n
  // satisfying p^{n−1}, with disjointness witnesses.
  std::vector<QuasiTiling> tilings;
  Elem enumerated{0, 0};        // g_{n−1}, which every A ∈ 𝒜_n contains
  int64_t radius = 0;           // built-in provider: A = [−radius, radius]^d
};

struct TilingHierarchy {
  std::vector<Rational> eps;    // ε_n used between levels n and n+1
  std::vector<HierarchyLevel> levels;
  ConstraintLedger ledger;      // provenance of every invariance and tiling check
  nlohmann::json ToJson(const MarkedGroup& g) const;
};

inline constexpr int64_t kFolnerSizeCap = 1000000;

// Builds 𝒜_0 = {{1}}, …, 𝒜_levels on ℤ or ℤ². Each later level is a single
// centered box, the least one that contains g_{n}, is at least twice as wide
// as the previous box, is (B, ε_n)-invariant for the previous box B, and has
// an (𝒜_n, ε_n)-quasi-tiling by exact translates of B. Throws
// ConstraintViolation("folner-cap") when no box below `size_cap` elements
// works.
TilingHierarchy BuildHierarchy(const MarkedGroup& g, const std::vector<Rational>& eps_seq,
                               int levels, int64_t size_cap = kFolnerSizeCap);

// Re-verifies conditions (i)–(iii) on every level and (iv) up to g_{levels−1}.
ConstraintLedger CheckHierarchy(const MarkedGroup& g, const TilingHierarchy& h);

}  // namespace quotlift

#endif  // QUOTLIFT_HIERARCHY_H_
