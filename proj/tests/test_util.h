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

#ifndef QUOTLIFT_TESTS_TEST_UTIL_H_
#define QUOTLIFT_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "quotlift/eqrel.h"
#include "quotlift/group.h"

namespace quotlift::testing {

inline int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline FinEqrel RandomEqrel(std::mt19937_64& rng, int n, int max_classes) {
  std::vector<int> labels(n);
  for (int& x : labels) x = Uniform(rng, 0, max_classes - 1);
  return FinEqrel::FromLabels(labels);
}

inline PointSet RandomSubset(std::mt19937_64& rng, int n) {
  PointSet s;
  for (int x = 0; x < n; ++x)
    if (Uniform(rng, 0, 1)) s.push_back(x);
  return s;
}

inline Perm RandomPerm(std::mt19937_64& rng, int n) {
  Perm p = IdentityPerm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Pairs (x, y) with x ~ y, as a set. Independent of the class layout.
inline std::set<std::pair<int, int>> Graph(const FinEqrel& e) {
  std::set<std::pair<int, int>> out;
  for (int x = 0; x < e.size(); ++x)
    for (int y = 0; y < e.size(); ++y)
      if (e.Related(x, y)) out.insert({x, y});
  return out;
}

// Transitive closure of a symmetric edge list by repeated relaxation.
inline std::vector<int> ClosureLabels(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) label[x] = x;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : edges) {
      int m = std::min(label[a], label[b]);
      if (label[a] != m || label[b] != m) {
        label[a] = label[b] = m;
        changed = true;
      }
    }
  }
  return label;
}

}  // namespace quotlift::testing

#endif  // QUOTLIFT_TESTS_TEST_UTIL_H_
