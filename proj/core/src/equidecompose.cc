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

#include "quotlift/equidecompose.h"

#include <algorithm>

#include "quotlift/errors.h"

namespace quotlift {

std::optional<EquidecompWitness> Equidecompose(const FinEqrel& e, std::span<const int> a,
                                               std::span<const int> b) {
  ValidatePointSet(e.size(), a);
  ValidatePointSet(e.size(), b);
  std::vector<std::vector<int>> in_a(e.num_classes()), in_b(e.num_classes());
  for (int x : a) in_a[e.class_of(x)].push_back(x);
  for (int x : b) in_b[e.class_of(x)].push_back(x);
  for (int c = 0; c < e.num_classes(); ++c)
    if (in_a[c].size() != in_b[c].size()) return std::nullopt;
  std::vector<int> image(e.size(), -1);
  for (int c = 0; c < e.num_classes(); ++c)
    for (size_t i = 0; i < in_a[c].size(); ++i) image[in_a[c][i]] = in_b[c][i];
  EquidecompWitness w;
  for (int x : a) {
    w.source.push_back(x);
    w.target.push_back(image[x]);
  }
  return w;
}

bool VerifyEquidecomposition(const FinEqrel& e, std::span<const int> a, std::span<const int> b,
                             const EquidecompWitness& w) {
  if (w.source.size() != w.target.size()) return false;
  if (!std::equal(w.source.begin(), w.source.end(), a.begin(), a.end())) return false;
  std::vector<int> t = w.target;
  std::sort(t.begin(), t.end());
  if (!std::equal(t.begin(), t.end(), b.begin(), b.end())) return false;
  if (std::adjacent_find(t.begin(), t.end()) != t.end()) return false;
  for (size_t i = 0; i < w.source.size(); ++i)
    if (!e.Related(w.source[i], w.target[i])) return false;
  return true;
}

PointSet DisjointCopies(std::span<const int> a, int n) {
  if (n < 1) throw InputError("number of copies must be positive");
  PointSet out;
  for (int x : a)
    for (int k = 0; k < n; ++k) out.push_back(x * n + k);
  return out;
}

}  // namespace quotlift
