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

#ifndef QUOTLIFT_AUTOMORPHISM_H_
#define QUOTLIFT_AUTOMORPHISM_H_

#include <optional>
#include <string>
#include <vector>

#include "quotlift/eqrel.h"
#include "quotlift/group.h"

namespace quotlift {

enum class AutVerdict { kNotAutomorphism, kInner, kOuterNontrivial };

std::string ToString(AutVerdict v);

struct AutClassification {
  AutVerdict verdict = AutVerdict::kNotAutomorphism;
  // Not an automorphism: a pair x E y whose images are unrelated (or the
  // reverse direction).
  std::optional<std::pair<int, int>> broken_pair;
  // Inner: class_of_point[x] is the class that x and T(x) share.
  std::vector<int> class_of_point;
  // Outer: the induced permutation of E-class ids and one moved class.
  std::vector<int> class_map;
  int moved_class = -1;
};

// Places T relative to Aut(E) and Inn(E).
AutClassification ClassifyAutomorphism(const FinEqrel& e, const Perm& t);

bool IsAutomorphism(const FinEqrel& e, const Perm& t);

// The permutation of E-class ids induced by an automorphism T.
std::vector<int> InducedClassMap(const FinEqrel& e, const Perm& t);

struct ExtensionResult {
  FinEqrel extended;  // E ∨ E_G^X
  bool normal = false;
  // First generator that is not an automorphism of E, if any.
  int failing_generator = -1;
};

// E^{∨G} together with whether the generators witness E ◁ E^{∨G}.
ExtensionResult ExtendByGroup(const FinEqrel& e, const std::vector<Perm>& gens);

// Given E ⊆ F' ⊆ E^{∨T} with T ∈ Aut(E), returns T' ∈ Aut(E) with
// E^{∨T'} = F' ∩ E^{∨T}: T'(x) = T^n(x) for the least n > 0 such that
// T^n(x) F' x. Throws PreconditionError if the inclusions or T ∈ Aut(E)
// fail.
Perm NormalRestrict(const FinEqrel& e, const Perm& t, const FinEqrel& f_prime);

// Witness for E ◁ F_sub from a witness for E ◁ F: applies NormalRestrict
// to F_sub ∩ E^{∨T} for every element T of the group generated by `gens`.
// Requires E ⊆ F_sub ⊆ E^{∨gens}. Returns duplicate-free, non-identity
// generators.
std::vector<Perm> RestrictWitness(const FinEqrel& e, const std::vector<Perm>& gens,
                                  const FinEqrel& f_sub);

// All automorphisms of E by brute force over Sym(X). Limited to |X| ≤ 8.
std::vector<Perm> EnumerateAutomorphisms(const FinEqrel& e);

// Out(E) at finite scale: distinct induced class maps of all automorphisms,
// sorted. Limited to |X| ≤ 8.
std::vector<std::vector<int>> EnumerateOuterClassMaps(const FinEqrel& e);

}  // namespace quotlift

#endif  // QUOTLIFT_AUTOMORPHISM_H_
