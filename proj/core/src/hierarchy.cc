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

#include "quotlift/hierarchy.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "quotlift/errors.h"

namespace quotlift {
namespace {

int64_t BoxSize(const MarkedGroup& g, int64_t radius) {
  int64_t side = 2 * radius + 1;
  return g.dimension() == 2 ? side * side : side;
}

std::string Level(int n) { return "level-" + std::to_string(n) + "/"; }

bool InvariantForAll(const MarkedGroup& g, const ElemSet& a, const std::vector<ElemSet>& family,
                     const Rational& eps) {
  for (const auto& b : family)
    if (InvarianceDefect(g, a, b) > eps) return false;
  return true;
}

// Tiles `a` by exact translates of the single previous shape.
QuasiTiling TileBy(const MarkedGroup& g, const ElemSet& a, const ElemSet& b, const Rational& eps,
                   ConstraintLedger* ledger) {
  TranslateFamily fam = GreedyDisjointTranslates(g, a, b, 0, InvarianceDefect(g, a, b), ledger);
  QuasiTiling t;
  t.a = a;
  t.shapes = {b};
  t.centers = {fam.centers};
  t.witnesses = {fam.witnesses};
  t.eps = eps;
  t.p = {1};
  return t;
}

}  // namespace

TilingHierarchy BuildHierarchy(const MarkedGroup& g, const std::vector<Rational>& eps_seq,
                               int levels, int64_t size_cap) {
  if (!g.is_lattice()) throw InputError("the built-in Følner provider covers z and z2 only");
  if (levels < 0) throw InputError("levels must be non-negative");
  if (static_cast<int>(eps_seq.size()) < levels) {
    throw InputError("need " + std::to_string(levels) + " ε values, got " +
                     std::to_string(eps_seq.size()));
  }
  for (const auto& e : eps_seq) {
    if (e <= 0 || e >= 1) throw InputError("every ε_n must lie in (0, 1), got " + ToString(e));
  }
  TilingHierarchy h;
  h.eps.assign(eps_seq.begin(), eps_seq.begin() + levels);
  HierarchyLevel base;
  base.family = {ElemSet{g.Identity()}};
  base.p = {1};
  h.levels.push_back(base);

  for (int n = 0; n < levels; ++n) {
    const HierarchyLevel& prev = h.levels.back();
    const Rational& eps = eps_seq[n];
    const Elem gn = *g.Enumerate(n);
    int64_t lo = std::max<int64_t>(2 * prev.radius + 1, std::max(std::abs(gn[0]), std::abs(gn[1])));
    auto invariant_at = [&](int64_t r) {
      return InvariantForAll(g, CenteredBox(g, r), prev.family, eps);
    };
    auto too_big = [&](int64_t r) { return BoxSize(g, r) > size_cap; };
    auto cap_error = [&](const std::string& demand) {
      return ConstraintViolation("folner-cap", "level " + std::to_string(n + 1) + ": no box of at most " +
                                                   std::to_string(size_cap) + " elements meets " + demand);
    };
    int64_t rmax = 0;
    while (!too_big(rmax + 1)) ++rmax;
    if (lo > rmax) throw cap_error("the containment demands");
    // Invariance is monotone in the radius: gallop, then bisect.
    int64_t hi = lo;
    while (!invariant_at(hi)) {
      if (hi == rmax) throw cap_error("the (B, ε_n)-invariance demand");
      lo = hi + 1;
      hi = std::min(2 * hi + 1, rmax);
    }
    while (lo < hi) {
      int64_t mid = lo + (hi - lo) / 2;
      if (invariant_at(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    // Coverage by exact translates need not be monotone: scan upward.
    int64_t r = hi;
    for (;; ++r) {
      if (too_big(r)) throw cap_error("the (1 − ε_n)-covering demand");
      ElemSet a = CenteredBox(g, r);
      ConstraintLedger scratch;
      QuasiTiling t = TileBy(g, a, prev.family.front(), eps, &scratch);
      TilingReport rep = CheckTiling(g, t);
      if (!rep.ok()) continue;
      HierarchyLevel next;
      next.family = {std::move(a)};
      next.p = {1};
      next.tilings = {std::move(t)};
      next.enumerated = gn;
      next.radius = r;
      h.ledger.Append(scratch, Level(n + 1));
      h.levels.push_back(std::move(next));
      break;
    }
  }
  h.ledger.Append(CheckHierarchy(g, h));
  if (!h.ledger.all_pass()) {
    throw ConstraintViolation("hierarchy", "hierarchy check failed: " + h.ledger.failures().front());
  }
  return h;
}

ConstraintLedger CheckHierarchy(const MarkedGroup& g, const TilingHierarchy& h) {
  ConstraintLedger led;
  if (h.levels.empty()) return led;
  const HierarchyLevel& zero = h.levels.front();
  led.Check("level-0/singleton", "𝒜_0 = {{1}}",
            PowerValue::Of(Rational(zero.family == std::vector<ElemSet>{ElemSet{g.Identity()}})),
            Relation::kEq, PowerValue::Of(1));
  for (size_t n = 0; n < h.levels.size(); ++n) {
    const HierarchyLevel& lv = h.levels[n];
    Rational total = 0;
    for (const auto& p : lv.p) total += p;
    led.Check(Level(n) + "distribution", "a probability distribution p^n on 𝒜_n",
              PowerValue::Of(total), Relation::kEq, PowerValue::Of(1));
    for (const auto& a : lv.family) {
      led.Check(Level(n) + "identity", "𝒜_n in Fin_1(G)",
                PowerValue::Of(Rational(ContainsElem(a, g.Identity()))), Relation::kEq,
                PowerValue::Of(1));
    }
    if (n == 0) continue;
    const HierarchyLevel& prev = h.levels[n - 1];
    const Rational& eps = h.eps[n - 1];
    for (size_t ia = 0; ia < lv.family.size(); ++ia) {
      const ElemSet& a = lv.family[ia];
      for (size_t ib = 0; ib < prev.family.size(); ++ib) {
        const ElemSet& b = prev.family[ib];
        std::string tag = Level(n) + "A" + std::to_string(ia) + "-B" + std::to_string(ib);
        led.Check(tag + "/invariance", "A is (B, ε_n)-invariant",
                  PowerValue::Of(InvarianceDefect(g, a, b)), Relation::kLe, PowerValue::Of(eps));
        led.Check(tag + "/contains", "and contains B", PowerValue::Of(Rational(IsSubset(b, a))),
                  Relation::kEq, PowerValue::Of(1));
      }
      if (ia < lv.tilings.size()) {
        TilingReport rep = CheckTiling(g, lv.tilings[ia]);
        led.Append(rep.ledger, Level(n) + "A" + std::to_string(ia) + "/tiling/");
        led.Check(Level(n) + "A" + std::to_string(ia) + "/quasi-tiling",
                  "every A ∈ 𝒜_{n+1} has an (𝒜_n, ε_n)-quasi-tiling satisfying p^n",
                  PowerValue::Of(Rational(rep.ok())), Relation::kEq, PowerValue::Of(1));
      }
      led.Check(Level(n) + "A" + std::to_string(ia) + "/enumeration",
                "G = ⋃_n ⋃_{B∈𝒜_n} B (contains g_n)",
                PowerValue::Of(Rational(ContainsElem(a, lv.enumerated))), Relation::kEq,
                PowerValue::Of(1));
    }
  }
  return led;
}

nlohmann::json TilingHierarchy::ToJson(const MarkedGroup& g) const {
  nlohmann::json lv = nlohmann::json::array();
  for (size_t n = 0; n < levels.size(); ++n) {
    const auto& l = levels[n];
    nlohmann::json fam = nlohmann::json::array();
    for (size_t i = 0; i < l.family.size(); ++i) {
      nlohmann::json entry = {{"set", ElemSetToJson(g, l.family[i])},
                              {"p", quotlift::ToJson(l.p[i])}};
      if (i < l.tilings.size()) {
        nlohmann::json centers = nlohmann::json::array();
        for (const auto& cs : l.tilings[i].centers) {
          nlohmann::json one = nlohmann::json::array();
          for (const Elem& c : cs) one.push_back(g.ElemToJson(c));
          centers.push_back(one);
        }
        entry["centers"] = centers;
      }
      fam.push_back(entry);
    }
    nlohmann::json j = {{"level", n}, {"family", fam}, {"radius", l.radius}};
    if (n > 0) {
      j["eps"] = quotlift::ToJson(eps[n - 1]);
      j["enumerated"] = g.ElemToJson(l.enumerated);
    }
    lv.push_back(j);
  }
  return {{"levels", lv}, {"ledger", ledger.ToJson()}, {"all_pass", ledger.all_pass()}};
}

}  // namespace quotlift
