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

#ifndef QUOTLIFT_LIFT_H_
#define QUOTLIFT_LIFT_H_

#include <vector>

#include "quotlift/eqrel.h"
#include "quotlift/group.h"

namespace quotlift {

// An action of a finite group on the class set X/E, given by one
// permutation of class ids per group element.
class OuterAction {
 public:
  // Checks that the identity acts trivially and that
  // class_perm(a·s) = class_perm(a) ∘ class_perm(s) for every generator s.
  OuterAction(FinGroup group, int num_classes, std::vector<Perm> class_perm);

  // Extends maps given on the group's generators along shortlex words.
  static OuterAction FromGeneratorMaps(FinGroup group, int num_classes,
                                       const std::vector<Perm>& generator_maps);

  // The permutation group on class ids generated by `maps`, acting by
  // itself.
  static OuterAction FromClassPermutations(int num_classes, const std::vector<Perm>& maps);

  const FinGroup& group() const { return group_; }
  int num_classes() const { return num_classes_; }
  const Perm& ClassPerm(int g) const { return class_perm_[g]; }

 private:
  FinGroup group_;
  int num_classes_;
  std::vector<Perm> class_perm_;
};

// E^{∨G}: x, y related iff some g maps [x]_E to [y]_E.
FinEqrel OuterJoin(const FinEqrel& e, const OuterAction& outer);

// Every g moving [x]_E to itself fixes x.
bool IsClassBijective(const FinEqrel& e, const GroupAction& action);

// The action moves every E-class the way `outer` prescribes.
bool InducesOuterAction(const FinEqrel& e, const GroupAction& action, const OuterAction& outer);

// g·x = the unique point of [x]_L ∩ g·[x]_E. Throws PreconditionError when
// L is not an (E, E^{∨G})-link; the result is checked for the action axioms,
// class-bijectivity and the induced quotient action.
GroupAction LiftFromLink(const FinEqrel& e, const OuterAction& outer, const FinEqrel& link);

// The permutation sending the k-th smallest point of class c to the k-th
// smallest point of class perm[c]. Throws PreconditionError if some class
// and its image differ in size.
Perm CanonicalClassLift(const FinEqrel& e, const Perm& class_perm);

// Extends a class-bijective action of a finite normal subgroup N ≤ G to a
// class-bijective action of G inducing `outer`. `normal_elements` lists the
// element ids of N in G and `normal_action` the permutation of each.
GroupAction LiftThroughFiniteNormal(const FinEqrel& e, const OuterAction& outer,
                                    const std::vector<int>& normal_elements,
                                    const std::vector<Perm>& normal_action);

}  // namespace quotlift

#endif  // QUOTLIFT_LIFT_H_
