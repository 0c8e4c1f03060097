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

#ifndef QUOTLIFT_CHOICE_SEQUENCE_H_
#define QUOTLIFT_CHOICE_SEQUENCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quotlift/eqrel.h"
#include "quotlift/lazy_space.h"

namespace quotlift {

// Cantor pairing (a+b)(a+b+1)/2 + b and its inverse.
int64_t CantorPair(int64_t a, int64_t b);
std::pair<int64_t, int64_t> CantorUnpair(int64_t z);

struct StageCheck {
  std::string name;
  bool ok = true;
  int64_t checked = 0;
  std::string detail;
};

struct WindowedLinkReport {
  // L-classes lying entirely inside the window.
  int64_t verified_exact = 0;
  // L-classes that reach past the window; their visible part is consistent.
  int64_t consistent_so_far = 0;
  int64_t violations = 0;
  std::vector<StageCheck> stages;
  std::vector<std::string> notes;
  bool ok() const;
};

// The choice-sequence link for a base pair E ⊆ F, computed lazily on
// X × ℕ with the relations E × I_ℕ and F × I_ℕ.
//
// Stage 0 picks f_i(x) = σ^t(x) for the least t giving a new E-class, where
// σ rotates every F-class. Stage 1 makes the maps injective by sending
// (x, n) to (f_i(x), ⟨n, t⟩). Stage 2 makes every image a complete section
// through X × ℕ × N ≅ X × ℕ, (x, m, k) ↦ (x, mN + k), with ⋆ = addition mod
// N. Stage 3 is the identity: each image already meets every class in an
// infinite set. Stage 4 composes with the inverse of the order isomorphism
// from each class onto its part of the image. The link lives on
// X × ℕ × N ≅ X × ℕ again; the class of r is {(b_i(r), i) : i < N}.
// N is the number of E-classes in the F-class, so it may vary by class.
class ChoiceSequenceLink {
 public:
  // Throws PreconditionError unless E ⊆ F, InputError unless depth ≥ 1.
  ChoiceSequenceLink(FinEqrel e, FinEqrel f, int64_t depth);

  const LazyAmplification& space() const { return space_; }
  int NumMaps(int x) const { return n_maps_[x]; }
  int MaxMaps() const;

  int BaseChoice(int i, int x) const { return choice_[x][i]; }
  int BaseStep(int i, int x) const { return step_[x][i]; }

  LazyPoint Injective(int i, LazyPoint p) const;
  std::optional<LazyPoint> InjectivePreimage(int i, LazyPoint q) const;
  LazyPoint Section(int i, LazyPoint p) const;
  std::optional<LazyPoint> SectionPreimage(int i, LazyPoint q) const;
  LazyPoint Bijective(int i, LazyPoint p) const;
  LazyPoint BijectiveInverse(int i, LazyPoint q) const;

  // Image points of Section(i, ·) in the class of base E-class `e_class`
  // with index below `bound`.
  int64_t CountImageBelow(int i, int e_class, int64_t bound) const;

  // Link label of a point of the final space: the r whose class holds it.
  LazyPoint LinkLabel(LazyPoint q) const;
  std::vector<LazyPoint> LinkClass(LazyPoint r) const;

  // Checks every stage on the window and the incidence condition of the
  // link. Throws WindowError ("increase depth") if no L-class fits.
  WindowedLinkReport Verify() const;

 private:
  int Rotate(int x, int64_t t) const;
  bool InSectionImage(int i, LazyPoint q) const;
  int64_t RankInImage(int i, LazyPoint q) const;
  LazyPoint KthImage(int i, int e_class, int64_t r) const;

  FinEqrel e_;
  FinEqrel f_;
  LazyAmplification space_;
  std::vector<int> n_maps_;
  std::vector<int> pos_in_f_;
  std::vector<int> pos_in_e_;
  std::vector<std::vector<int>> choice_;
  std::vector<std::vector<int>> step_;
};

}  // namespace quotlift

#endif  // QUOTLIFT_CHOICE_SEQUENCE_H_
