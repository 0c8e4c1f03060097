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

#include "quotlift/lazy_space.h"

#include <algorithm>
#include <string>

#include "quotlift/errors.h"

namespace quotlift {

LazyAmplification::LazyAmplification(FinEqrel e, FinEqrel f, int64_t depth)
    : e_(std::move(e)), f_(std::move(f)), depth_(depth) {
  if (!e_.IsSubrelationOf(f_)) {
    throw PreconditionError("lazy amplification requires E ⊆ F on the same space");
  }
  if (depth_ < 1) throw InputError("window depth must be at least 1");
}

int64_t LazyAmplification::DefaultDepth(int base_size) {
  return std::max<int64_t>(1, 10000 / std::max(1, base_size));
}

bool LazyAmplification::InWindow(LazyPoint p) const {
  return p.base >= 0 && p.base < e_.size() && p.index >= 0 && p.index < depth_;
}

void LazyAmplification::RequireWindow(LazyPoint p) const {
  if (!InWindow(p)) {
    throw WindowError("point (" + std::to_string(p.base) + ", " + std::to_string(p.index) +
                      ") is outside the window of depth " + std::to_string(depth_));
  }
}

bool LazyAmplification::RelatedE(LazyPoint p, LazyPoint q) const {
  RequireWindow(p);
  RequireWindow(q);
  return e_.Related(p.base, q.base);
}

bool LazyAmplification::RelatedF(LazyPoint p, LazyPoint q) const {
  RequireWindow(p);
  RequireWindow(q);
  return f_.Related(p.base, q.base);
}

std::vector<LazyPoint> LazyAmplification::WindowPoints() const {
  std::vector<LazyPoint> out;
  out.reserve(static_cast<size_t>(window_size()));
  for (int64_t m = 0; m < depth_; ++m) {
    for (int x = 0; x < e_.size(); ++x) out.push_back({x, m});
  }
  return out;
}

}  // namespace quotlift
