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

#ifndef QUOTLIFT_EQUIDECOMPOSE_H_
#define QUOTLIFT_EQUIDECOMPOSE_H_

#include <optional>
#include <span>
#include <vector>

#include "quotlift/eqrel.h"

namespace quotlift {

// A bijection source[i] ↦ target[i] whose graph lies inside E. `source` is
// sorted.
struct EquidecompWitness {
  std::vector<int> source;
  std::vector<int> target;
};

// A witness for A ∼_E B, built by matching A ∩ C with B ∩ C in increasing
// order for every class C, or nullopt when some class counts differ.
std::optional<EquidecompWitness> Equidecompose(const FinEqrel& e, std::span<const int> a,
                                               std::span<const int> b);

// Checks bijectivity onto B and that every pair is E-related.
bool VerifyEquidecomposition(const FinEqrel& e, std::span<const int> a, std::span<const int> b,
                             const EquidecompWitness& w);

// n disjoint copies of A inside the space of ProductWithFull(E, n):
// {x·n + k : x ∈ A, k < n}.
PointSet DisjointCopies(std::span<const int> a, int n);

}  // namespace quotlift

#endif  // QUOTLIFT_EQUIDECOMPOSE_H_
