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

#ifndef QUOTLIFT_MARKED_GROUP_H_
#define QUOTLIFT_MARKED_GROUP_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quotlift/group.h"

namespace quotlift {

// A group element. ℤ uses e[0]; ℤ² uses both coordinates; a finite group
// stores the element's shortlex rank in e[0].
using Elem = std::array<int64_t, 2>;

// Finite subsets are kept sorted in canonical order without duplicates.
using ElemSet = std::vector<Elem>;

enum class GroupKind { kZ, kZ2, kFinite };

// A countable group with a fixed canonical enumeration. Canonical order on
// ℤ^d is lexicographic on coordinates; on a finite group it is shortlex on
// generator words. Lexicographic comparison of Elem agrees with both.
class MarkedGroup {
 public:
  static MarkedGroup Z();
  static MarkedGroup Z2();
  static MarkedGroup Finite(FinGroup group);
  // "z", "z2", or throws InputError.
  static MarkedGroup FromName(const std::string& name);

  GroupKind kind() const { return kind_; }
  std::string name() const;
  // True for ℤ^d, where multiplication is translation.
  bool is_lattice() const { return kind_ != GroupKind::kFinite; }
  int dimension() const { return kind_ == GroupKind::kZ2 ? 2 : 1; }

  Elem Identity() const;
  Elem Mul(const Elem& a, const Elem& b) const;
  Elem Inverse(const Elem& a) const;
  bool IsElement(const Elem& a) const;

  // g_n of the fixed enumeration of G: 0, 1, −1, 2, −2, … on ℤ; square
  // shells of growing radius (lex inside a shell) on ℤ²; shortlex on a
  // finite group, where it returns nullopt past the order.
  std::optional<Elem> Enumerate(int64_t n) const;

  nlohmann::json ElemToJson(const Elem& a) const;
  Elem ElemFromJson(const nlohmann::json& j) const;
  std::string Format(const Elem& a) const;

  const std::optional<FinGroup>& finite_group() const { return finite_; }

 private:
  explicit MarkedGroup(GroupKind kind) : kind_(kind) {}
  GroupKind kind_;
  std::optional<FinGroup> finite_;
  std::vector<int> rank_of_;  // element id -> shortlex rank
};

// Sorts and deduplicates.
ElemSet MakeSet(std::vector<Elem> elems);
bool ContainsElem(const ElemSet& s, const Elem& a);
bool IsSubset(const ElemSet& a, const ElemSet& b);
ElemSet SetUnion(const ElemSet& a, const ElemSet& b);
ElemSet SetDifference(const ElemSet& a, const ElemSet& b);

// [lo, hi) on ℤ.
ElemSet IntegerInterval(int64_t lo, int64_t hi);
// [x0, x1) × [y0, y1) on ℤ².
ElemSet Box2(int64_t x0, int64_t x1, int64_t y0, int64_t y1);
// The centered box [−r, r]^d.
ElemSet CenteredBox(const MarkedGroup& g, int64_t radius);

// Right translate B·c.
ElemSet RightTranslate(const MarkedGroup& g, const ElemSet& b, const Elem& c);
ElemSet InverseSet(const MarkedGroup& g, const ElemSet& b);
// The product set B·A.
ElemSet ProductSet(const MarkedGroup& g, const ElemSet& b, const ElemSet& a);

// Constant-time membership and position lookup for a fixed set. Dense over
// the bounding box when it is small, binary search otherwise. The indexed
// set must outlive the index.
class SetIndex {
 public:
  explicit SetIndex(const ElemSet& s);
  // Position of `a` in the set, or −1.
  int64_t Find(const Elem& a) const;
  bool Contains(const Elem& a) const { return Find(a) >= 0; }

 private:
  const ElemSet* set_;
  Elem lo_{0, 0};
  Elem extent_{0, 0};
  std::vector<int32_t> dense_;
};

}  // namespace quotlift

#endif  // QUOTLIFT_MARKED_GROUP_H_
