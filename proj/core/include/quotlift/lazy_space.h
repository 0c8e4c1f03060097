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

#ifndef QUOTLIFT_LAZY_SPACE_H_
#define QUOTLIFT_LAZY_SPACE_H_

#include <cstdint>
#include <vector>

#include "quotlift/eqrel.h"

namespace quotlift {

// A point (x, m) of X × ℕ.
struct LazyPoint {
  int base = 0;
  int64_t index = 0;
  friend bool operator==(const LazyPoint&, const LazyPoint&) = default;
  friend auto operator<=>(const LazyPoint&, const LazyPoint&) = default;
};

// The amplified pair (E × I_ℕ, F × I_ℕ) over a finite base pair E ⊆ F,
// observed through the window {(x, m) : m < depth}. Membership queries are
// total on the window and hard errors outside it.
class LazyAmplification {
 public:
  // Throws PreconditionError unless E ⊆ F, InputError unless depth ≥ 1.
  LazyAmplification(FinEqrel e, FinEqrel f, int64_t depth);

  // Window depth giving roughly 10^4 points in total.
  static int64_t DefaultDepth(int base_size);

  const FinEqrel& base_e() const { return e_; }
  const FinEqrel& base_f() const { return f_; }
  int64_t depth() const { return depth_; }
  int64_t window_size() const { return depth_ * e_.size(); }

  bool InWindow(LazyPoint p) const;
  // Both throw WindowError when either point lies outside the window.
  bool RelatedE(LazyPoint p, LazyPoint q) const;
  bool RelatedF(LazyPoint p, LazyPoint q) const;

  // Window points ordered by (index, base).
  std::vector<LazyPoint> WindowPoints() const;

 private:
  void RequireWindow(LazyPoint p) const;

  FinEqrel e_;
  FinEqrel f_;
  int64_t depth_;
};

}  // namespace quotlift

#endif  // QUOTLIFT_LAZY_SPACE_H_
