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

#include "quotlift/marked_group.h"

#include <algorithm>

#include "grid.h"
#include "quotlift/errors.h"

namespace quotlift {

MarkedGroup MarkedGroup::Z() { return MarkedGroup(GroupKind::kZ); }
MarkedGroup MarkedGroup::Z2() { return MarkedGroup(GroupKind::kZ2); }

MarkedGroup MarkedGroup::Finite(FinGroup group) {
  MarkedGroup g(GroupKind::kFinite);
  g.rank_of_.assign(group.order(), 0);
  const auto& order = group.shortlex_order();
  for (size_t r = 0; r < order.size(); ++r) g.rank_of_[order[r]] = static_cast<int>(r);
  g.finite_.emplace(std::move(group));
  return g;
}

MarkedGroup MarkedGroup::FromName(const std::string& name) {
  if (name == "z") return Z();
  if (name == "z2") return Z2();
  throw InputError("unknown group '" + name + "' (expected z or z2)");
}

std::string MarkedGroup::name() const {
  switch (kind_) {
    case GroupKind::kZ: return "z";
    case GroupKind::kZ2: return "z2";
    case GroupKind::kFinite: return "finite";
  }
  return "?";
}

Elem MarkedGroup::Identity() const { return {0, 0}; }

Elem MarkedGroup::Mul(const Elem& a, const Elem& b) const {
  if (kind_ != GroupKind::kFinite) return {a[0] + b[0], a[1] + b[1]};
  const auto& order = finite_->shortlex_order();
  int id = finite_->Mul(order[a[0]], order[b[0]]);
  return {rank_of_[id], 0};
}

Elem MarkedGroup::Inverse(const Elem& a) const {
  if (kind_ != GroupKind::kFinite) return {-a[0], -a[1]};
  const auto& order = finite_->shortlex_order();
  return {rank_of_[finite_->Inverse(order[a[0]])], 0};
}

bool MarkedGroup::IsElement(const Elem& a) const {
  switch (kind_) {
    case GroupKind::kZ: return a[1] == 0;
    case GroupKind::kZ2: return true;
    case GroupKind::kFinite: return a[1] == 0 && a[0] >= 0 && a[0] < finite_->order();
  }
  return false;
}

std::optional<Elem> MarkedGroup::Enumerate(int64_t n) const {
  if (n < 0) return std::nullopt;
  switch (kind_) {
    case GroupKind::kZ: {
      int64_t m = (n + 1) / 2;
      return Elem{n % 2 == 1 ? m : -m, 0};
    }
    case GroupKind::kZ2: {
      if (n == 0) return Elem{0, 0};
      int64_t r = 1;
      while ((2 * r + 1) * (2 * r + 1) <= n) ++r;
      int64_t idx = n - (2 * r - 1) * (2 * r - 1);
      for (int64_t x = -r; x <= r; ++x) {
        bool edge = x == -r || x == r;
        int64_t count = edge ? 2 * r + 1 : 2;
        if (idx < count) return edge ? Elem{x, -r + idx} : Elem{x, idx == 0 ? -r : r};
        idx -= count;
      }
      return std::nullopt;
    }
    case GroupKind::kFinite:
      if (n >= finite_->order()) return std::nullopt;
      return Elem{n, 0};
  }
  return std::nullopt;
}

nlohmann::json MarkedGroup::ElemToJson(const Elem& a) const {
  if (kind_ == GroupKind::kZ2) return nlohmann::json::array({a[0], a[1]});
  return a[0];
}

Elem MarkedGroup::ElemFromJson(const nlohmann::json& j) const {
  Elem a{0, 0};
  if (kind_ == GroupKind::kZ2) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer()) {
      throw InputError("z2 element must be [x, y]");
    }
    a = {j[0].get<int64_t>(), j[1].get<int64_t>()};
  } else {
    if (!j.is_number_integer()) throw InputError("group element must be an integer");
    a = {j.get<int64_t>(), 0};
  }
  if (!IsElement(a)) throw InputError("not a group element: " + j.dump());
  return a;
}

std::string MarkedGroup::Format(const Elem& a) const {
  if (kind_ == GroupKind::kZ2) {
    return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")";
  }
  return std::to_string(a[0]);
}

ElemSet MakeSet(std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

bool ContainsElem(const ElemSet& s, const Elem& a) {
  return std::binary_search(s.begin(), s.end(), a);
}

bool IsSubset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElemSet SetUnion(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet SetDifference(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet IntegerInterval(int64_t lo, int64_t hi) {
  ElemSet out;
  for (int64_t x = lo; x < hi; ++x) out.push_back({x, 0});
  return out;
}

ElemSet Box2(int64_t x0, int64_t x1, int64_t y0, int64_t y1) {
  ElemSet out;
  for (int64_t x = x0; x < x1; ++x)
    for (int64_t y = y0; y < y1; ++y) out.push_back({x, y});
  return out;
}

ElemSet CenteredBox(const MarkedGroup& g, int64_t radius) {
  switch (g.kind()) {
    case GroupKind::kZ: return IntegerInterval(-radius, radius + 1);
    case GroupKind::kZ2: return Box2(-radius, radius + 1, -radius, radius + 1);
    case GroupKind::kFinite: break;
  }
  throw InputError("centered boxes exist only on z and z2");
}

ElemSet RightTranslate(const MarkedGroup& g, const ElemSet& b, const Elem& c) {
  std::vector<Elem> out;
  out.reserve(b.size());
  for (const Elem& x : b) out.push_back(g.Mul(x, c));
  if (g.is_lattice()) return out;  // translation keeps lex order
  return MakeSet(std::move(out));
}

ElemSet InverseSet(const MarkedGroup& g, const ElemSet& b) {
  std::vector<Elem> out;
  out.reserve(b.size());
  for (const Elem& x : b) out.push_back(g.Inverse(x));
  return MakeSet(std::move(out));
}

ElemSet ProductSet(const MarkedGroup& g, const ElemSet& b, const ElemSet& a) {
  if (a.empty() || b.empty()) return {};
  if (!g.is_lattice()) {
    std::vector<Elem> out;
    for (const Elem& x : b)
      for (const Elem& y : a) out.push_back(g.Mul(x, y));
    return MakeSet(std::move(out));
  }
  using internal::Run;
  const int d = internal::DirCoord(g);
  std::vector<Run> runs = internal::RunsOf(g, a);
  int64_t klo = INT64_MAX, khi = INT64_MIN, vlo = INT64_MAX, vhi = INT64_MIN;
  for (const Elem& x : b) {
    for (const Run& r : runs) {
      int64_t key = r.key + internal::KeyOf(g, x);
      klo = std::min(klo, key);
      khi = std::max(khi, key);
      vlo = std::min(vlo, r.lo + x[d]);
      vhi = std::max(vhi, r.hi + x[d]);
    }
  }
  internal::GridBitmap grid(klo, khi, vlo, vhi);
  for (const Elem& x : b) {
    for (const Run& r : runs) grid.SetRange(r.key + internal::KeyOf(g, x), r.lo + x[d], r.hi + x[d]);
  }
  ElemSet out;
  for (int64_t key = klo; key <= khi; ++key)
    for (int64_t v = vlo; v <= vhi; ++v)
      if (grid.Test(key, v)) out.push_back(internal::MakeElem(g, key, v));
  return out;
}

namespace {
constexpr int64_t kDenseCap = int64_t{1} << 25;
}  // namespace

SetIndex::SetIndex(const ElemSet& s) : set_(&s) {
  if (s.empty()) return;
  Elem lo = s.front(), hi = s.front();
  for (const Elem& a : s) {
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(lo[i], a[i]);
      hi[i] = std::max(hi[i], a[i]);
    }
  }
  int64_t w0 = hi[0] - lo[0] + 1, w1 = hi[1] - lo[1] + 1;
  if (w0 > kDenseCap || w1 > kDenseCap || w0 * w1 > kDenseCap) return;
  lo_ = lo;
  extent_ = {w0, w1};
  dense_.assign(static_cast<size_t>(w0 * w1), -1);
  for (size_t i = 0; i < s.size(); ++i) {
    const Elem& a = s[i];
    dense_[(a[0] - lo[0]) * w1 + (a[1] - lo[1])] = static_cast<int32_t>(i);
  }
}

int64_t SetIndex::Find(const Elem& a) const {
  if (!dense_.empty()) {
    int64_t x = a[0] - lo_[0], y = a[1] - lo_[1];
    if (x < 0 || y < 0 || x >= extent_[0] || y >= extent_[1]) return -1;
    return dense_[x * extent_[1] + y];
  }
  auto it = std::lower_bound(set_->begin(), set_->end(), a);
  if (it == set_->end() || *it != a) return -1;
  return it - set_->begin();
}

}  // namespace quotlift
