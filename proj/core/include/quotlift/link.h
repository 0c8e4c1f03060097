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

#ifndef QUOTLIFT_LINK_H_
#define QUOTLIFT_LINK_H_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "quotlift/eqrel.h"
#include "quotlift/group.h"

namespace quotlift {

// Where the all-ones incidence condition breaks: in F-class `f_class`, the
// E-class and L-class meet `count` times.
struct LinkCounterexample {
  int f_class = -1;
  std::vector<int> e_class;
  std::vector<int> l_class;
  int count = 0;
};

struct LinkVerification {
  bool ok = false;
  std::optional<LinkCounterexample> counterexample;
};

// Checks that L is an (E, F)-link: inside every F-class, every E-class meets
// every L-class exactly once. Points are scanned in increasing order, so a
// double incidence is reported as soon as it is seen; missing incidences are
// reported after the class is scanned. Throws PreconditionError unless
// E ⊆ F and L ⊆ F.
LinkVerification VerifyLink(const FinEqrel& e, const FinEqrel& f, const FinEqrel& l);

// A finite partial subequivalence relation: disjoint finite classes, each
// inside one class of the ambient relation.
struct Fsr {
  std::vector<std::vector<int>> classes;
  PointSet domain;
};

using FinitePredicate = std::function<bool(std::span<const int>)>;

// Candidate sets are taken in the order (minimum element, size,
// lexicographic) and kept when disjoint from everything kept so far.
Fsr GreedyFsr(std::vector<std::vector<int>> candidates);

// Φ-maximal fsr of `ambient` for a predicate on finite subsets of its
// classes. Candidates are all subsets of each class, so classes are limited
// to 20 points.
Fsr MaxFsr(const FinEqrel& ambient, const FinitePredicate& phi);

// Exhaustive check that no Φ-set avoids the domain and that every class
// satisfies Φ. Same size limit as MaxFsr.
bool IsPhiMaximal(const FinEqrel& ambient, const FinitePredicate& phi, const Fsr& fsr);

// Subsets of `allowed` that lie in one `coarse` class C and meet every
// `fine` class inside C exactly once. Classes of C with no allowed point
// contribute no candidates.
std::vector<std::vector<int>> TransversalCandidates(const FinEqrel& fine, const FinEqrel& coarse,
                                                    std::span<const int> allowed);

// Φ-maximal fsr for Φ = "transversal of fine↾C inside `allowed`", computed
// without enumerating candidates. Equal to GreedyFsr over
// TransversalCandidates.
Fsr MaxTransversalFsr(const FinEqrel& fine, const FinEqrel& coarse, std::span<const int> allowed);

// Validates that every generator is an automorphism of E and that
// F = E^{∨G}; throws PreconditionError naming the failing generator.
void ValidateNormalityWitness(const FinEqrel& e, const FinEqrel& f, const std::vector<Perm>& gens);

// An (E, F)-link for a finite index normal extension witnessed by `gens`.
FinEqrel LinkFiniteIndex(const FinEqrel& e, const FinEqrel& f, const std::vector<Perm>& gens);

// Extends an (E, F)-link to an (E, F')-link containing it, given
// E ⊆ F ⊆ F' and generators witnessing E ◁ F'.
FinEqrel ExtendLink(const FinEqrel& e, const FinEqrel& f, const FinEqrel& f_prime,
                    const FinEqrel& link, const std::vector<Perm>& gens);

struct OuterSubgroup {
  // The automorphisms g_0, g_1, ... selected class by class, identity
  // entries dropped.
  std::vector<Perm> selected;
  // Elements of the image in Out(E), as induced maps on E-class ids.
  std::vector<std::vector<int>> class_maps;
  // One automorphism per element of the image (shortlex-first in the group
  // generated by `selected`), aligned with class_maps.
  std::vector<Perm> representatives;
};

// A finite subgroup of Out(E) whose representatives generate F over E.
OuterSubgroup FiniteOuterSubgroup(const FinEqrel& e, const FinEqrel& f,
                                  const std::vector<Perm>& gens);

// Link from the rank partition: S_k holds the k-th smallest point of every
// E-class, and x L y iff x F y and both lie in the same S_k. Throws
// PreconditionError when two E-classes in one F-class differ in size.
FinEqrel LinkSmooth(const FinEqrel& e, const FinEqrel& f);

struct HfLinkResult {
  FinEqrel link;
  // links[j] is the (E, chain[j])-link; each contains its predecessor.
  std::vector<FinEqrel> links;
};

// Iterated extension along E ⊆ F_0 ⊆ ... ⊆ F_m. `gens` witnesses E ◁ F_m;
// witnesses for the earlier steps are obtained by normal restriction.
HfLinkResult HfLink(const FinEqrel& e, const std::vector<FinEqrel>& chain,
                    const std::vector<Perm>& gens);

}  // namespace quotlift

#endif  // QUOTLIFT_LINK_H_
