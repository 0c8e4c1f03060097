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

#ifndef QUOTLIFT_EQREL_H_
#define QUOTLIFT_EQREL_H_

#include <span>
#include <vector>

namespace quotlift {

// A sorted, duplicate-free list of points.
using PointSet = std::vector<int>;

// Union-find over 0..n-1 with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int Find(int x);
  // Returns true when x and y were in different sets.
  bool Union(int x, int y);
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_size_;
};

// An equivalence relation on the finite space {0, ..., n-1}, stored as a
// partition. Class ids are assigned in order of minimum element and each
// class is sorted, so two equal relations have identical representations.
class FinEqrel {
 public:
  // Validates that `classes` are nonempty, pairwise disjoint and cover
  // {0..n-1}. Throws InputError naming the offending point otherwise.
  static FinEqrel FromClasses(int n, const std::vector<std::vector<int>>& classes);

  // Any labelling of the points; equal labels mean related points.
  static FinEqrel FromLabels(std::span<const int> labels);

  static FinEqrel FromDisjointSets(DisjointSets& sets);

  // Equality relation (every class a singleton).
  static FinEqrel Identity(int n);
  // The full relation I_X (one class).
  static FinEqrel Full(int n);

  int size() const { return static_cast<int>(class_of_.size()); }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int x) const { return class_of_[x]; }
  const std::vector<int>& class_members(int c) const { return classes_[c]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<int>& labels() const { return class_of_; }

  bool Related(int x, int y) const { return class_of_[x] == class_of_[y]; }

  // this ⊆ other, as sets of pairs.
  bool IsSubrelationOf(const FinEqrel& other) const;

  friend bool operator==(const FinEqrel& a, const FinEqrel& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  FinEqrel() = default;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
};

// Smallest equivalence relation containing both. Throws InputError when the
// spaces differ.
FinEqrel Join(const FinEqrel& e, const FinEqrel& f);

// Intersection of the two relations.
FinEqrel Meet(const FinEqrel& e, const FinEqrel& f);

// Union of the classes meeting `a`.
PointSet Saturate(const FinEqrel& e, std::span<const int> a);

// Largest invariant subset contained in `a`: the complement of the
// saturation of the complement.
PointSet Hull(const FinEqrel& e, std::span<const int> a);

// The minimum element of every class.
PointSet Transversal(const FinEqrel& e);

// The relation restricted to `subset` (sorted), reindexed so that
// subset[i] becomes point i.
FinEqrel Restrict(const FinEqrel& e, std::span<const int> subset);

// Pulls a relation on a subset back to the whole space of size n: points
// outside the subset become singletons.
FinEqrel ExtendFromSubset(int n, std::span<const int> subset, const FinEqrel& on_subset);

// For every class of `f` (by id), the number of `e`-classes it contains.
// Requires e ⊆ f.
std::vector<int> IndexProfile(const FinEqrel& e, const FinEqrel& f);

// Relation whose classes are those of `coarse` restricted to `region` plus
// those of `coarse` restricted to the complement. Useful for splitting a
// relation along an invariant set.
FinEqrel SplitAlong(const FinEqrel& coarse, std::span<const int> region);

// Sorted complement of `a` in {0..n-1}.
PointSet Complement(int n, std::span<const int> a);

// Checks sortedness, uniqueness and range. Throws InputError.
void ValidatePointSet(int n, std::span<const int> a);

// Product E × I_m on {0..n·m-1}, where (x, k) is encoded as x·m + k.
FinEqrel ProductWithFull(const FinEqrel& e, int m);

}  // namespace quotlift

#endif  // QUOTLIFT_EQREL_H_
