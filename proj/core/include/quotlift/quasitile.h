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

#ifndef QUOTLIFT_QUASITILE_H_
#define QUOTLIFT_QUASITILE_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quotlift/ledger.h"
#include "quotlift/marked_group.h"
#include "quotlift/rational.h"

namespace quotlift {

// T(A, B) = {a ∈ A : Ba ⊆ A}. Throws PreconditionError if 1 ∉ B.
ElemSet TSet(const MarkedGroup& g, const ElemSet& a, const ElemSet& b);

// 1 − |T(A,B)|/|A|, the least ε for which A is (B, ε)-invariant.
Rational InvarianceDefect(const MarkedGroup& g, const ElemSet& a, const ElemSet& b);

// Decides (B, ε)-invariance. On a positive verdict also checks
// |BA| ≤ (1 + ε|B|)|A| and throws ConstraintViolation("product-bound") if it
// fails.
bool IsInvariant(const MarkedGroup& g, const ElemSet& a, const ElemSet& b, const Rational& eps);

// Greedy ε-disjoint family of right translates Bc ⊆ A.
struct TranslateFamily {
  std::vector<Elem> centers;          // in the order they were chosen
  std::vector<ElemSet> witnesses;     // D_c ⊆ B: points of Bc not covered earlier
  std::vector<int64_t> covered_after; // |B{c_0..c_j}| after each center
  int64_t covered() const { return covered_after.empty() ? 0 : covered_after.back(); }
};

// Scans candidates in canonical order with the identity first and keeps c
// whenever Bc ⊆ A and |Bc ∩ BC| ≤ ε|B|. Requires A to be (B, δ)-invariant
// (PreconditionError with the measured defect otherwise) and asserts
// |BC| ≥ ε(1−δ)|A|, recording both in `ledger` when given.
TranslateFamily GreedyDisjointTranslates(const MarkedGroup& g, const ElemSet& a,
                                         const ElemSet& b, const Rational& eps,
                                         const Rational& delta,
                                         ConstraintLedger* ledger = nullptr);

// Constants of the quasi-tiling induction for a working ε.
struct QuasiTilingConstants {
  Rational eps;
  int k = 0;                   // least k with 2ε ≥ (1−ε)^k
  std::vector<Rational> p;     // p_i = ε(1−ε)^i, i < k
  std::vector<Rational> eta;   // largest admissible η_i = (1−2ε)/(2·3^{k−i}), i < k−1
  Rational delta;              // 1/3^k, the invariance demand on A
  Rational p_total() const;
};
QuasiTilingConstants ComputeConstants(const Rational& eps);

// Largest 1/m (m ≥ 4) with 2/m < eps and 1 − (1 − 2/m)^3 < eps. Tilings built
// at that working value are (𝒜, eps)-quasi-tilings.
Rational WorkingEpsilon(const Rational& eps);

struct QuasiTiling {
  ElemSet a;
  std::vector<ElemSet> shapes;
  std::vector<std::vector<Elem>> centers;
  // witnesses[i][j] ⊆ shapes[i] for centers[i][j]; empty means "derive
  // greedily in center order".
  std::vector<std::vector<ElemSet>> witnesses;
  Rational eps;                // disjointness and covering parameter
  std::vector<Rational> p;     // per-shape budget; empty for none
};

struct TilingStage {
  int64_t a_size = 0;         // |A_i|
  int64_t greedy_centers = 0; // |C̃_i|
  int64_t centers = 0;        // |C_i| after trimming
  int64_t final_centers = 0;  // |C'_i|
  Rational ratio_to_ai;       // |B_iC_i|/|A_i|
  Rational ratio_to_a;        // |B_iC_i|/|A|
  Rational final_ratio;       // |B_iC'_i|/|A|
};

struct QuasiTileResult {
  QuasiTiling tiling;  // eps is the outer ε
  QuasiTilingConstants constants;
  Rational outer_eps;
  std::vector<TilingStage> stages;
  ConstraintLedger ledger;
  nlohmann::json ToJson(const MarkedGroup& g) const;
};

// Runs the quasi-tiling induction on A with the descending chain (B_i).
// `eps` is the target ε of the resulting (𝒜, ε)-quasi-tiling; the induction
// runs at `eps_bar` (default WorkingEpsilon(eps)). The chain must have
// length k, every link must be (B_{i+1}^{-1}, η_i/|B_{i+1}|)-invariant, and
// A must contain and be (B, 1/3^k)-invariant for every B with |A| > 3^k.
// Every checked inequality lands in the ledger; a failed one throws
// ConstraintViolation naming it.
QuasiTileResult QuasiTile(const MarkedGroup& g, const ElemSet& a,
                          const std::vector<ElemSet>& chain, const Rational& eps,
                          std::optional<Rational> eps_bar = std::nullopt);

struct TilingReport {
  bool contained = true;      // Bc ⊆ A
  bool disjoint = true;       // ε-disjoint with disjoint witness translates
  bool shapes_disjoint = true;  // {B·C_B} pairwise disjoint across B
  bool identity_center = true;  // 1 ∈ A ⇒ 1 ∈ C_B for exactly one B
  bool covers = true;         // coverage ≥ 1 − ε
  bool budgets_ok = true;
  bool union_bound = true;    // (1−ε)Σ|Bc| ≤ |⋃Bc|
  std::string failure;        // first failing witness, if any
  Rational coverage;          // |⋃ B·C_B| / |A|
  std::vector<Rational> budgets;  // |B||C_B| / |A|
  ConstraintLedger ledger;
  bool ok() const {
    return contained && disjoint && shapes_disjoint && identity_center && covers &&
           budgets_ok && union_bound;
  }
  nlohmann::json ToJson() const;
};

TilingReport CheckTiling(const MarkedGroup& g, const QuasiTiling& t);

// Number of right translates Bg (g ∈ G) that contain x, counted directly.
int64_t CountCoveringTranslates(const MarkedGroup& g, const ElemSet& b, const Elem& x);

nlohmann::json ElemSetToJson(const MarkedGroup& g, const ElemSet& s);

}  // namespace quotlift

#endif  // QUOTLIFT_QUASITILE_H_
