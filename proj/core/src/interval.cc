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

#include "quotlift/interval.h"

#include <algorithm>

#include "quotlift/errors.h"

namespace quotlift {
namespace {

void ValidateInterval(const Rational& lo, const Rational& hi, const char* what) {
  if (lo < 0 || hi > 1 || lo >= hi) {
    throw InputError(std::string(what) + " [" + ToString(lo) + ", " + ToString(hi) +
                     ") is not a non-empty subinterval of [0, 1)");
  }
}

// Checks that sorted half-open intervals do not overlap.
bool SortedDisjoint(const std::vector<Interval>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i].lo < v[i - 1].hi) return false;
  return true;
}

std::vector<Interval> SortedTargets(const std::vector<Piece>& pieces) {
  std::vector<Interval> t;
  t.reserve(pieces.size());
  for (const auto& p : pieces) t.push_back({p.lo + p.shift, p.hi + p.shift});
  std::sort(t.begin(), t.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return t;
}

}  // namespace

IntervalSet IntervalSet::FromIntervals(std::vector<Interval> parts) {
  for (const auto& p : parts) ValidateInterval(p.lo, p.hi, "interval");
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet s;
  for (auto& p : parts) {
    if (!s.parts_.empty() && p.lo <= s.parts_.back().hi) {
      if (p.hi > s.parts_.back().hi) s.parts_.back().hi = p.hi;
    } else {
      s.parts_.push_back(std::move(p));
    }
  }
  return s;
}

IntervalSet IntervalSet::Unit() { return Of(0, 1); }

IntervalSet IntervalSet::Of(const Rational& lo, const Rational& hi) {
  return FromIntervals({{lo, hi}});
}

Rational IntervalSet::Measure() const {
  Rational m = 0;
  for (const auto& p : parts_) m += p.length();
  return m;
}

IntervalSet IntervalSet::Union(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return FromIntervals(std::move(all));
}

IntervalSet IntervalSet::Intersect(const IntervalSet& o) const {
  IntervalSet out;
  size_t i = 0, j = 0;
  while (i < parts_.size() && j < o.parts_.size()) {
    const Rational& lo = std::max(parts_[i].lo, o.parts_[j].lo);
    const Rational& hi = std::min(parts_[i].hi, o.parts_[j].hi);
    if (lo < hi) out.parts_.push_back({lo, hi});
    if (parts_[i].hi < o.parts_[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

IntervalSet IntervalSet::Difference(const IntervalSet& o) const {
  IntervalSet out;
  size_t j = 0;
  for (const auto& p : parts_) {
    Rational cur = p.lo;
    while (j < o.parts_.size() && o.parts_[j].hi <= cur) ++j;
    size_t k = j;
    while (k < o.parts_.size() && o.parts_[k].lo < p.hi) {
      if (o.parts_[k].lo > cur) out.parts_.push_back({cur, o.parts_[k].lo});
      if (o.parts_[k].hi > cur) cur = o.parts_[k].hi;
      ++k;
    }
    if (cur < p.hi) out.parts_.push_back({cur, p.hi});
  }
  return out;
}

nlohmann::json IntervalSet::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : parts_) out.push_back({quotlift::ToJson(p.lo), quotlift::ToJson(p.hi)});
  return out;
}

IntervalSet IntervalSet::FromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("interval set must be an array of [lo, hi] pairs");
  std::vector<Interval> parts;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw InputError("interval must be [lo, hi]");
    parts.push_back({RationalFromJson(e[0]), RationalFromJson(e[1])});
  }
  return FromIntervals(std::move(parts));
}

IntervalMap IntervalMap::Normalized(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  IntervalMap m;
  for (auto& p : pieces) {
    if (!m.pieces_.empty() && m.pieces_.back().hi == p.lo && m.pieces_.back().shift == p.shift) {
      m.pieces_.back().hi = p.hi;
    } else {
      m.pieces_.push_back(std::move(p));
    }
  }
  return m;
}

IntervalMap IntervalMap::FromPieces(std::vector<Piece> pieces) {
  for (const auto& p : pieces) {
    ValidateInterval(p.lo, p.hi, "piece source");
    ValidateInterval(p.lo + p.shift, p.hi + p.shift, "piece target");
  }
  IntervalMap m = Normalized(std::move(pieces));
  std::vector<Interval> sources;
  for (const auto& p : m.pieces_) sources.push_back({p.lo, p.hi});
  if (!SortedDisjoint(sources)) throw InputError("interval map sources overlap");
  if (!SortedDisjoint(SortedTargets(m.pieces_))) throw InputError("interval map targets overlap");
  return m;
}

IntervalMap IntervalMap::Identity(const IntervalSet& domain) {
  IntervalMap m;
  for (const auto& p : domain.parts()) m.pieces_.push_back({p.lo, p.hi, 0});
  return m;
}

IntervalSet IntervalMap::Domain() const {
  std::vector<Interval> v;
  for (const auto& p : pieces_) v.push_back({p.lo, p.hi});
  return IntervalSet::FromIntervals(std::move(v));
}

IntervalSet IntervalMap::Image() const {
  return IntervalSet::FromIntervals(SortedTargets(pieces_));
}

Rational IntervalMap::DomainMeasure() const {
  Rational m = 0;
  for (const auto& p : pieces_) m += p.hi - p.lo;
  return m;
}

std::optional<Rational> IntervalMap::Apply(const Rational& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& v, const Piece& p) { return v < p.lo; });
  if (it == pieces_.begin()) return std::nullopt;
  --it;
  if (x >= it->hi) return std::nullopt;
  return Rational(x + it->shift);
}

IntervalSet IntervalMap::ImageOf(const IntervalSet& s) const {
  return Restrict(s).Image();
}

IntervalMap IntervalMap::Inverse() const {
  std::vector<Piece> inv;
  inv.reserve(pieces_.size());
  for (const auto& p : pieces_) inv.push_back({p.lo + p.shift, p.hi + p.shift, -p.shift});
  return Normalized(std::move(inv));
}

IntervalMap IntervalMap::Restrict(const IntervalSet& s) const {
  IntervalMap out;
  const auto& parts = s.parts();
  size_t j = 0;
  for (const auto& p : pieces_) {
    while (j < parts.size() && parts[j].hi <= p.lo) ++j;
    for (size_t k = j; k < parts.size() && parts[k].lo < p.hi; ++k) {
      Rational lo = std::max(p.lo, parts[k].lo), hi = std::min(p.hi, parts[k].hi);
      if (lo < hi) out.pieces_.push_back({lo, hi, p.shift});
    }
  }
  return Normalized(std::move(out.pieces_));
}

bool IntervalMap::IsIdentity() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.shift == 0; });
}

nlohmann::json IntervalMap::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pieces_) {
    out.push_back({{"source", {quotlift::ToJson(p.lo), quotlift::ToJson(p.hi)}},
                   {"target", {quotlift::ToJson(p.lo + p.shift), quotlift::ToJson(p.hi + p.shift)}}});
  }
  return out;
}

IntervalMap Compose(const IntervalMap& after, const IntervalMap& before) {
  std::vector<Piece> out;
  const auto& ap = after.pieces();
  for (const auto& p : before.pieces()) {
    Rational tlo = p.lo + p.shift, thi = p.hi + p.shift;
    auto it = std::upper_bound(ap.begin(), ap.end(), tlo,
                               [](const Rational& v, const Piece& q) { return v < q.lo; });
    if (it != ap.begin()) --it;
    for (; it != ap.end() && it->lo < thi; ++it) {
      Rational lo = std::max(tlo, it->lo), hi = std::min(thi, it->hi);
      if (lo < hi) out.push_back({lo - p.shift, hi - p.shift, p.shift + it->shift});
    }
  }
  // Sources stay disjoint and targets stay disjoint: both maps are injective.
  return IntervalMap::FromPieces(std::move(out));
}

IntervalMap DisjointUnion(const std::vector<IntervalMap>& maps) {
  std::vector<Piece> all;
  for (const auto& m : maps) all.insert(all.end(), m.pieces().begin(), m.pieces().end());
  try {
    return IntervalMap::FromPieces(std::move(all));
  } catch (const InputError& e) {
    throw ConstraintViolation("disjoint-union", std::string("cannot glue partial lifts: ") + e.what());
  }
}

IntervalMap DisjointUnion(const IntervalMap& a, const IntervalMap& b) {
  return DisjointUnion(std::vector<IntervalMap>{a, b});
}

Rational AgreementMeasure(const IntervalMap& a, const IntervalMap& b) {
  Rational total = 0;
  const auto& pa = a.pieces();
  const auto& pb = b.pieces();
  size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].shift == pb[j].shift) {
      const Rational& lo = std::max(pa[i].lo, pb[j].lo);
      const Rational& hi = std::min(pa[i].hi, pb[j].hi);
      if (lo < hi) total += hi - lo;
    }
    if (pa[i].hi < pb[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

IntervalSet SubsetOfMeasure(const IntervalSet& a, const Rational& r) {
  if (r < 0) throw PreconditionError("subset_of_measure: negative measure " + ToString(r));
  Rational have = a.Measure();
  if (r > have) {
    throw PreconditionError("subset_of_measure: requested " + ToString(r) + " exceeds μ(A) = " +
                            ToString(have));
  }
  std::vector<Interval> out;
  Rational need = r;
  for (const auto& p : a.parts()) {
    if (need == 0) break;
    Rational len = p.length();
    if (len <= need) {
      out.push_back(p);
      need -= len;
    } else {
      out.push_back({p.lo, p.lo + need});
      need = 0;
    }
  }
  return IntervalSet::FromIntervals(std::move(out));
}

MeasureAllocator::MeasureAllocator(const IntervalSet& free)
    : parts_(free.parts()), remaining_(free.Measure()) {}

IntervalSet MeasureAllocator::Take(const Rational& r) {
  if (r < 0) throw PreconditionError("subset_of_measure: negative measure " + ToString(r));
  if (r > remaining_) {
    throw PreconditionError("subset_of_measure: requested " + ToString(r) + " exceeds μ(A) = " +
                            ToString(remaining_));
  }
  std::vector<Interval> out;
  Rational need = r;
  while (need > 0) {
    Interval& p = parts_[next_];
    Rational len = p.length();
    if (len <= need) {
      out.push_back(p);
      need -= len;
      ++next_;
    } else {
      out.push_back({p.lo, p.lo + need});
      p.lo += need;
      need = 0;
    }
  }
  remaining_ -= r;
  return IntervalSet::FromIntervals(std::move(out));
}

std::optional<IntervalMap> PartialBijectionBetween(const IntervalSet& a, const IntervalSet& b) {
  if (a.Measure() != b.Measure()) return std::nullopt;
  std::vector<Piece> out;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  size_t i = 0, j = 0;
  Rational xa = pa.empty() ? Rational(0) : pa[0].lo;
  Rational xb = pb.empty() ? Rational(0) : pb[0].lo;
  while (i < pa.size() && j < pb.size()) {
    Rational step = std::min<Rational>(pa[i].hi - xa, pb[j].hi - xb);
    out.push_back({xa, xa + step, xb - xa});
    xa += step;
    xb += step;
    if (xa == pa[i].hi && ++i < pa.size()) xa = pa[i].lo;
    if (xb == pb[j].hi && ++j < pb.size()) xb = pb[j].lo;
  }
  return IntervalMap::FromPieces(std::move(out));
}

}  // namespace quotlift
