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

#ifndef QUOTLIFT_TOWER_H_
#define QUOTLIFT_TOWER_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quotlift/hierarchy.h"
#include "quotlift/interval.h"
#include "quotlift/ledger.h"
#include "quotlift/marked_group.h"

namespace quotlift {

// One A ∈ 𝒜_n with its base set X_A and the lifts φ^n_g on X_A for g ∈ A.
// lifts[i] belongs to shape[i].
struct TowerTile {
  ElemSet shape;
  Rational p;
  IntervalSet base;
  std::vector<IntervalMap> lifts;
  int base_shape = -1;  // index of the B ∈ 𝒜_{n−1} with 1 ∈ C^A_B
};

struct TowerStage {
  int level = 0;
  std::vector<TowerTile> tiles;
  ConstraintLedger ledger;  // conditions (i)–(iv), budgets, completion

  bool Represents(const Elem& g) const;
  // The glued partial lift φ^n_g = ⊔_{A, h : h, gh ∈ A} φ^n_{gh} (φ^n_h)^{−1},
  // restricted to φ^n_h(X_A). Throws ConstraintViolation("disjoint-union")
  // when the pieces do not glue.
  IntervalMap GlobalLift(const MarkedGroup& g, const Elem& x) const;
  // `full` adds every φ piece, which is large at late stages.
  nlohmann::json ToJson(const MarkedGroup& g, bool full) const;
};

// μ{φ^prev_g = φ^cur_g} over the common domain, against (1−ε)(1−3ε).
struct AgreementStat {
  Elem g{0, 0};
  Rational agree;
  Rational common;
  Rational disagree;
  bool hypothesis = false;  // g ∈ C for some C ∈ 𝒜_{prev−1}
  Rational bound;
  bool pass = true;         // vacuous when the hypothesis fails
};

// μ{φ_{gh} = φ_g φ_h} at one stage, against 1 − 2ε.
struct ActionStat {
  Elem g{0, 0};
  Elem h{0, 0};
  Rational agree;
  Rational common;
  Rational defect;
  bool hypothesis = false;  // g, h, gh ∈ C for some C ∈ 𝒜_{stage−1}
  Rational bound;
  bool pass = true;
};

struct StageReport {
  int prev = 0;
  int cur = 0;
  std::vector<AgreementStat> agreement;
  std::vector<ActionStat> action;  // at stage `cur`
  std::vector<std::string> skipped;
  Rational tail_sum;  // Σ_{m ≤ prev} (1 − (1−ε_m)(1−3ε_m))
  nlohmann::json ToJson(const MarkedGroup& g) const;
};

struct Tower {
  std::vector<Rational> eps;
  std::vector<TowerStage> stages;
  std::vector<StageReport> reports;  // pairs (n, n+1)
  ConstraintLedger ledger;
  Rational tail_prefix;              // Σ over the supplied ε prefix
  std::optional<Rational> tail_rest; // closed form for the default ε_n = 2^{−n−3}
  nlohmann::json ToJson(const MarkedGroup& g, bool full) const;
};

// Builds stages 0..stages from the hierarchy, checks every stage exactly and
// reports agreement and action bounds on a fixed sample of elements. Throws
// ConstraintViolation naming the first failed inequality.
Tower BuildTower(const MarkedGroup& g, const TilingHierarchy& h, int stages);

// One inductive step: stage n+1 from stage n and the tilings of 𝒜_{n+1}.
TowerStage ExtendStage(const MarkedGroup& g, const TowerStage& prev, const HierarchyLevel& next);

// Conditions (i)–(iii) and the partition identity.
ConstraintLedger CheckStage(const MarkedGroup& g, const TowerStage& s);

// Agreement of φ_x between stages prev and cur, and the action defect of
// (x, y) at stage cur. Elements not represented are skipped with a reason.
StageReport StageReportFor(const MarkedGroup& g, const Tower& t, int prev, int cur, const Elem& x,
                           const Elem& y);

// Identity, generators, their inverses and the first generator squared.
std::vector<Elem> SampleElements(const MarkedGroup& g);

// 1 − (1−ε)(1−3ε).
Rational BorelCantelliTerm(const Rational& eps);

}  // namespace quotlift

#endif  // QUOTLIFT_TOWER_H_
