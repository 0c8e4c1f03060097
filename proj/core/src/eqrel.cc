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

#include "quotlift/eqrel.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "quotlift/errors.h"

namespace quotlift {

DisjointSets::DisjointSets(int n) : parent_(n), rank_size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::Find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::Union(int x, int y) {
  x = Find(x);
  y = Find(y);
  if (x == y) return false;
  if (rank_size_[x] < rank_size_[y]) std::swap(x, y);
  parent_[y] = x;
  rank_size_[x] += rank_size_[y];
  return true;
}

FinEqrel FinEqrel::FromLabels(std::span<const int> labels) {
  if (labels.empty()) throw InputError("space must have at least one point");
  FinEqrel r;
  const int n = static_cast<int>(labels.size());
  r.class_of_.assign(n, -1);
  // Scanning points in increasing order assigns ids by minimum element.
  std::vector<int> sorted_labels(labels.begin(), labels.end());
  std::sort(sorted_labels.begin(), sorted_labels.end());
  sorted_labels.erase(std::unique(sorted_labels.begin(), sorted_labels.end()),
                      sorted_labels.end());
  std::vector<int> id_of_label(sorted_labels.size(), -1);
  for (int x = 0; x < n; ++x) {
    auto pos = std::lower_bound(sorted_labels.begin(), sorted_labels.end(), labels[x]) -
               sorted_labels.begin();
    if (id_of_label[pos] < 0) {
      id_of_label[pos] = static_cast<int>(r.classes_.size());
      r.classes_.emplace_back();
    }
    r.class_of_[x] = id_of_label[pos];
    r.classes_[id_of_label[pos]].push_back(x);
  }
  return r;
}

FinEqrel FinEqrel::FromClasses(int n, const std::vector<std::vector<int>>& classes) {
  if (n < 1) throw InputError("space size must be positive");
  std::vector<int> label(n, -1);
  for (size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw InputError("class " + std::to_string(c) + " is empty");
    }
    for (int x : classes[c]) {
      if (x < 0 || x >= n) {
        throw InputError("point " + std::to_string(x) + " out of range [0, " +
                         std::to_string(n) + ")");
      }
      if (label[x] >= 0) {
        throw InputError("point " + std::to_string(x) + " in two classes");
      }
      label[x] = static_cast<int>(c);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (label[x] < 0) {
      throw InputError("point " + std::to_string(x) + " is in no class");
    }
  }
  return FromLabels(label);
}

FinEqrel FinEqrel::FromDisjointSets(DisjointSets& sets) {
  std::vector<int> label(sets.size());
  for (int x = 0; x < sets.size(); ++x) label[x] = sets.Find(x);
  return FromLabels(label);
}

FinEqrel FinEqrel::Identity(int n) {
  if (n < 1) throw InputError("space size must be positive");
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  return FromLabels(label);
}

FinEqrel FinEqrel::Full(int n) {
  if (n < 1) throw InputError("space size must be positive");
  return FromLabels(std::vector<int>(n, 0));
}

bool FinEqrel::IsSubrelationOf(const FinEqrel& other) const {
  if (other.size() != size()) return false;
  for (const auto& cls : classes_) {
    const int target = other.class_of(cls.front());
    for (int x : cls) {
      if (other.class_of(x) != target) return false;
    }
  }
  return true;
}

namespace {

void RequireSameSpace(const FinEqrel& e, const FinEqrel& f) {
  if (e.size() != f.size()) {
    throw InputError("space mismatch: " + std::to_string(e.size()) + " vs " +
                     std::to_string(f.size()) + " points");
  }
}

}  // namespace

FinEqrel Join(const FinEqrel& e, const FinEqrel& f) {
  RequireSameSpace(e, f);
  DisjointSets sets(e.size());
  for (const FinEqrel* r : {&e, &f}) {
    for (const auto& cls : r->classes()) {
      for (int x : cls) sets.Union(cls.front(), x);
    }
  }
  return FinEqrel::FromDisjointSets(sets);
}

FinEqrel Meet(const FinEqrel& e, const FinEqrel& f) {
  RequireSameSpace(e, f);
  std::vector<int> label(e.size());
  for (int x = 0; x < e.size(); ++x) label[x] = e.class_of(x) * f.num_classes() + f.class_of(x);
  return FinEqrel::FromLabels(label);
}

void ValidatePointSet(int n, std::span<const int> a) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= n) {
      throw InputError("point " + std::to_string(a[i]) + " out of range [0, " +
                       std::to_string(n) + ")");
    }
    if (i > 0 && a[i] <= a[i - 1]) {
      throw InputError("point set must be sorted and duplicate-free");
    }
  }
}

PointSet Saturate(const FinEqrel& e, std::span<const int> a) {
  std::vector<char> hit(e.num_classes(), 0);
  for (int x : a) {
    if (x < 0 || x >= e.size()) {
      throw InputError("point " + std::to_string(x) + " out of range");
    }
    hit[e.class_of(x)] = 1;
  }
  PointSet out;
  for (int x = 0; x < e.size(); ++x) {
    if (hit[e.class_of(x)]) out.push_back(x);
  }
  return out;
}

PointSet Complement(int n, std::span<const int> a) {
  std::vector<char> in(n, 0);
  for (int x : a) {
    if (x < 0 || x >= n) throw InputError("point " + std::to_string(x) + " out of range");
    in[x] = 1;
  }
  PointSet out;
  for (int x = 0; x < n; ++x) {
    if (!in[x]) out.push_back(x);
  }
  return out;
}

PointSet Hull(const FinEqrel& e, std::span<const int> a) {
  PointSet outside = Complement(e.size(), a);
  return Complement(e.size(), Saturate(e, outside));
}

PointSet Transversal(const FinEqrel& e) {
  PointSet out;
  out.reserve(e.num_classes());
  for (const auto& cls : e.classes()) out.push_back(cls.front());
  return out;
}

FinEqrel Restrict(const FinEqrel& e, std::span<const int> subset) {
  ValidatePointSet(e.size(), subset);
  if (subset.empty()) throw InputError("cannot restrict to the empty set");
  std::vector<int> label(subset.size());
  for (size_t i = 0; i < subset.size(); ++i) label[i] = e.class_of(subset[i]);
  return FinEqrel::FromLabels(label);
}

FinEqrel ExtendFromSubset(int n, std::span<const int> subset, const FinEqrel& on_subset) {
  ValidatePointSet(n, subset);
  if (static_cast<int>(subset.size()) != on_subset.size()) {
    throw InputError("relation does not match the subset size");
  }
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) label[x] = on_subset.num_classes() + x;
  for (size_t i = 0; i < subset.size(); ++i) label[subset[i]] = on_subset.class_of(i);
  return FinEqrel::FromLabels(label);
}

std::vector<int> IndexProfile(const FinEqrel& e, const FinEqrel& f) {
  if (!e.IsSubrelationOf(f)) throw PreconditionError("IndexProfile requires E ⊆ F");
  std::vector<int> count(f.num_classes(), 0);
  for (const auto& cls : e.classes()) ++count[f.class_of(cls.front())];
  return count;
}

FinEqrel SplitAlong(const FinEqrel& coarse, std::span<const int> region) {
  std::vector<char> in(coarse.size(), 0);
  for (int x : region) in[x] = 1;
  std::vector<int> label(coarse.size());
  for (int x = 0; x < coarse.size(); ++x) label[x] = 2 * coarse.class_of(x) + in[x];
  return FinEqrel::FromLabels(label);
}

FinEqrel ProductWithFull(const FinEqrel& e, int m) {
  if (m < 1) throw InputError("amplification factor must be positive");
  std::vector<int> label(static_cast<size_t>(e.size()) * m);
  for (int x = 0; x < e.size(); ++x) {
    for (int k = 0; k < m; ++k) label[x * m + k] = e.class_of(x);
  }
  return FinEqrel::FromLabels(label);
}

}  // namespace quotlift
