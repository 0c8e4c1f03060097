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

#ifndef QUOTLIFT_INTERVAL_H_
#define QUOTLIFT_INTERVAL_H_

#include <optional>
#include <vector>

#include "json.hpp"
#include "quotlift/rational.h"

namespace quotlift {

// Half-open [lo, hi) with 0 ≤ lo < hi ≤ 1.
struct Interval {
  Rational lo;
  Rational hi;
  Rational length() const { return hi - lo; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

// A finite union of half-open rational subintervals of [0, 1), kept sorted,
// disjoint and with touching intervals merged. Stands for an element of the
// measure algebra with Lebesgue length as the measure.
class IntervalSet {
 public:
  IntervalSet() = default;
  // Accepts any list of intervals inside [0, 1); overlaps are merged.
  static IntervalSet FromIntervals(std::vector<Interval> parts);
  static IntervalSet Unit();
  static IntervalSet Of(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  Rational Measure() const;

  IntervalSet Union(const IntervalSet& o) const;
  IntervalSet Intersect(const IntervalSet& o) const;
  IntervalSet Difference(const IntervalSet& o) const;
  bool Contains(const IntervalSet& o) const { return o.Difference(*this).empty(); }
  bool Disjoint(const IntervalSet& o) const { return Intersect(o).empty(); }
  bool operator==(const IntervalSet& o) const { return parts_ == o.parts_; }

  nlohmann::json ToJson() const;
  static IntervalSet FromJson(const nlohmann::json& j);

 private:
  std::vector<Interval> parts_;
};

// One translation piece: [lo, hi) ↦ [lo + shift, hi + shift).
struct Piece {
  Rational lo;
  Rational hi;
  Rational shift;
  bool operator==(const Piece& o) const {
    return lo == o.lo && hi == o.hi && shift == o.shift;
  }
};

// A partial measure-preserving injection of [0, 1) that translates each of
// finitely many intervals. Sources are pairwise disjoint, targets are
// pairwise disjoint, and pieces are sorted by source with neighbours of equal
// shift merged, so equal maps compare equal.
class IntervalMap {
 public:
  IntervalMap() = default;
  // Validates disjointness of sources and targets inside [0, 1); throws
  // InputError otherwise.
  static IntervalMap FromPieces(std::vector<Piece> pieces);
  static IntervalMap Identity(const IntervalSet& domain);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  IntervalSet Domain() const;
  IntervalSet Image() const;
  Rational DomainMeasure() const;
  // Image of a point, or nullopt outside the domain.
  std::optional<Rational> Apply(const Rational& x) const;
  IntervalSet ImageOf(const IntervalSet& s) const;

  IntervalMap Inverse() const;
  IntervalMap Restrict(const IntervalSet& s) const;
  bool IsIdentity() const;
  bool operator==(const IntervalMap& o) const { return pieces_ == o.pieces_; }

  nlohmann::json ToJson() const;

 private:
  static IntervalMap Normalized(std::vector<Piece> pieces);
  std::vector<Piece> pieces_;
};

// after ∘ before, defined on before^{-1}(Domain(after)).
IntervalMap Compose(const IntervalMap& after, const IntervalMap& before);

// Union of maps with disjoint domains and disjoint images; throws
// ConstraintViolation("disjoint-union") otherwise.
IntervalMap DisjointUnion(const IntervalMap& a, const IntervalMap& b);
IntervalMap DisjointUnion(const std::vector<IntervalMap>& maps);

// μ{x ∈ dom a ∩ dom b : a(x) = b(x)}.
Rational AgreementMeasure(const IntervalMap& a, const IntervalMap& b);

// Greedy left-to-right prefix of `a` with measure exactly r. Throws
// PreconditionError when r is negative or exceeds μ(a).
IntervalSet SubsetOfMeasure(const IntervalSet& a, const Rational& r);

// Repeated SubsetOfMeasure on a shrinking set: each Take(r) returns
// SubsetOfMeasure(remaining, r) and removes it from `remaining`, in time
// proportional to the parts consumed.
class MeasureAllocator {
 public:
  explicit MeasureAllocator(const IntervalSet& free);
  IntervalSet Take(const Rational& r);
  Rational Remaining() const { return remaining_; }

 private:
  std::vector<Interval> parts_;
  size_t next_ = 0;
  Rational remaining_;
};

// A map from `a` onto `b` built by sweeping both sets left to right, or
// nullopt when the measures differ.
std::optional<IntervalMap> PartialBijectionBetween(const IntervalSet& a, const IntervalSet& b);

}  // namespace quotlift

#endif  // QUOTLIFT_INTERVAL_H_
