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

#include "quotlift/lift.h"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>

#include "quotlift/automorphism.h"
#include "quotlift/equidecompose.h"
#include "quotlift/errors.h"
#include "quotlift/link.h"

namespace quotlift {

OuterAction::OuterAction(FinGroup group, int num_classes, std::vector<Perm> class_perm)
    : group_(std::move(group)), num_classes_(num_classes), class_perm_(std::move(class_perm)) {
  if (static_cast<int>(class_perm_.size()) != group_.order()) {
    throw InputError("outer action needs one class permutation per group element");
  }
  for (const auto& p : class_perm_) ValidatePermutation(p, num_classes_);
  if (!IsIdentity(class_perm_[group_.identity()])) {
    throw InputError("outer action: the identity moves a class");
  }
  for (int a = 0; a < group_.order(); ++a) {
    for (int s : group_.generators()) {
      if (class_perm_[group_.Mul(a, s)] != Compose(class_perm_[a], class_perm_[s])) {
        throw InputError("outer action is not a homomorphism at elements " + std::to_string(a) +
                         ", " + std::to_string(s));
      }
    }
  }
}

OuterAction OuterAction::FromGeneratorMaps(FinGroup group, int num_classes,
                                           const std::vector<Perm>& generator_maps) {
  const auto& gens = group.generators();
  if (gens.size() != generator_maps.size()) {
    throw InputError("outer action: expected " + std::to_string(gens.size()) +
                     " generator maps, got " + std::to_string(generator_maps.size()));
  }
  for (const auto& p : generator_maps) ValidatePermutation(p, num_classes);
  std::vector<Perm> perm(group.order());
  perm[group.identity()] = IdentityPerm(num_classes);
  std::deque<int> queue{group.identity()};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < gens.size(); ++i) {
      int b = group.Mul(a, gens[i]);
      if (!perm[b].empty()) continue;
      perm[b] = Compose(perm[a], generator_maps[i]);
      queue.push_back(b);
    }
  }
  for (const auto& p : perm)
    if (p.empty()) throw InputError("outer action: generators do not reach every element");
  return OuterAction(std::move(group), num_classes, std::move(perm));
}

OuterAction OuterAction::FromClassPermutations(int num_classes, const std::vector<Perm>& maps) {
  FinGroup g = FinGroup::FromPermutations(maps, num_classes);
  std::vector<Perm> perm(g.order());
  for (int a = 0; a < g.order(); ++a) perm[a] = g.AsPermutation(a);
  return OuterAction(std::move(g), num_classes, std::move(perm));
}

FinEqrel OuterJoin(const FinEqrel& e, const OuterAction& outer) {
  if (outer.num_classes() != e.num_classes()) {
    throw InputError("outer action acts on " + std::to_string(outer.num_classes()) +
                     " classes, E has " + std::to_string(e.num_classes()));
  }
  DisjointSets sets(e.size());
  for (int x = 0; x < e.size(); ++x) sets.Union(x, e.class_members(e.class_of(x)).front());
  for (int g = 0; g < outer.group().order(); ++g) {
    const Perm& p = outer.ClassPerm(g);
    for (int c = 0; c < e.num_classes(); ++c)
      sets.Union(e.class_members(c).front(), e.class_members(p[c]).front());
  }
  return FinEqrel::FromDisjointSets(sets);
}

bool IsClassBijective(const FinEqrel& e, const GroupAction& action) {
  for (int g = 0; g < action.group().order(); ++g) {
    for (int x = 0; x < e.size(); ++x) {
      int gx = action.Act(g, x);
      if (e.Related(x, gx) && gx != x) return false;
    }
  }
  return true;
}

bool InducesOuterAction(const FinEqrel& e, const GroupAction& action, const OuterAction& outer) {
  if (action.group().order() != outer.group().order()) return false;
  for (int g = 0; g < action.group().order(); ++g) {
    const Perm& p = outer.ClassPerm(g);
    for (int x = 0; x < e.size(); ++x)
      if (e.class_of(action.Act(g, x)) != p[e.class_of(x)]) return false;
  }
  return true;
}

GroupAction LiftFromLink(const FinEqrel& e, const OuterAction& outer, const FinEqrel& link) {
  if (link.size() != e.size()) throw InputError("lift_from_link: link on a different space");
  FinEqrel f = OuterJoin(e, outer);
  if (!link.IsSubrelationOf(f)) {
    throw PreconditionError("lift_from_link: link invalid, L is not contained in E^{∨G}");
  }
  if (!VerifyLink(e, f, link).ok) {
    throw PreconditionError("lift_from_link: link invalid, incidence is not all-ones");
  }
  std::map<std::pair<int, int>, int> meet;
  for (int x = 0; x < e.size(); ++x) meet[{link.class_of(x), e.class_of(x)}] = x;
  const int order = outer.group().order();
  std::vector<Perm> act(order, Perm(e.size()));
  for (int g = 0; g < order; ++g) {
    const Perm& p = outer.ClassPerm(g);
    for (int x = 0; x < e.size(); ++x) {
      auto it = meet.find({link.class_of(x), p[e.class_of(x)]});
      if (it == meet.end()) {
        throw PreconditionError("lift_from_link: link invalid, [x]_L misses g·[x]_E for x = " +
                                std::to_string(x));
      }
      act[g][x] = it->second;
    }
  }
  std::optional<GroupAction> action;
  try {
    action.emplace(outer.group(), e.size(), std::move(act));
  } catch (const InputError& err) {
    throw ConstraintViolation("action-axioms", err.what());
  }
  if (!IsClassBijective(e, *action)) {
    throw ConstraintViolation("class-bijective", "lift is not class-bijective");
  }
  if (!InducesOuterAction(e, *action, outer)) {
    throw ConstraintViolation("induced-outer-action", "lift does not induce the outer action");
  }
  return std::move(*action);
}

Perm CanonicalClassLift(const FinEqrel& e, const Perm& class_perm) {
  ValidatePermutation(class_perm, e.num_classes());
  Perm t(e.size());
  for (int c = 0; c < e.num_classes(); ++c) {
    const auto& from = e.class_members(c);
    const auto& to = e.class_members(class_perm[c]);
    if (from.size() != to.size()) {
      throw PreconditionError("class " + std::to_string(c) + " of size " +
                              std::to_string(from.size()) + " is sent to a class of size " +
                              std::to_string(to.size()));
    }
    for (size_t k = 0; k < from.size(); ++k) t[from[k]] = to[k];
  }
  return t;
}

GroupAction LiftThroughFiniteNormal(const FinEqrel& e, const OuterAction& outer,
                                    const std::vector<int>& normal_elements,
                                    const std::vector<Perm>& normal_action) {
  const FinGroup& g = outer.group();
  const int n = e.size();
  if (normal_elements.size() != normal_action.size()) {
    throw InputError("normal subgroup: one permutation per element is required");
  }
  std::vector<int> slot(g.order(), -1);
  for (size_t i = 0; i < normal_elements.size(); ++i) {
    int a = normal_elements[i];
    if (a < 0 || a >= g.order() || slot[a] >= 0) {
      throw InputError("normal subgroup: bad or repeated element " + std::to_string(a));
    }
    slot[a] = static_cast<int>(i);
    ValidatePermutation(normal_action[i], n);
  }
  if (slot[g.identity()] < 0) throw PreconditionError("normal subgroup lacks the identity");
  for (int a : normal_elements) {
    for (int b : normal_elements) {
      int ab = g.Mul(a, b);
      if (slot[ab] < 0) throw PreconditionError("normal subgroup is not closed");
      if (normal_action[slot[ab]] != Compose(normal_action[slot[a]], normal_action[slot[b]])) {
        throw PreconditionError("normal subgroup action is not a homomorphism");
      }
    }
    for (int x = 0; x < g.order(); ++x) {
      if (slot[g.Mul(g.Mul(x, a), g.Inverse(x))] < 0) {
        throw PreconditionError("subgroup is not normal");
      }
    }
    const Perm& p = normal_action[slot[a]];
    if (!IsAutomorphism(e, p) || InducedClassMap(e, p) != outer.ClassPerm(a)) {
      throw PreconditionError("normal subgroup action does not lift the outer action at element " +
                              std::to_string(a));
    }
    for (int x = 0; x < n; ++x) {
      if (e.Related(x, p[x]) && p[x] != x) {
        throw PreconditionError("normal subgroup action is not class-bijective");
      }
    }
  }

  FinEqrel l = OrbitEqrelOfGenerators(n, normal_action);
  FinEqrel f = Join(e, l);
  FinEqrel f_prime = OuterJoin(e, outer);
  PointSet s = Transversal(l);
  std::vector<int> index_in_s(n, -1);
  for (size_t i = 0; i < s.size(); ++i) index_in_s[s[i]] = static_cast<int>(i);

  std::vector<int> gens = g.generators();
  if (gens.empty()) {
    for (int a = 0; a < g.order(); ++a) gens.push_back(a);
  }
  std::vector<Perm> witness;
  for (int a : gens) {
    Perm t = CanonicalClassLift(e, outer.ClassPerm(a));
    PointSet ts;
    for (int x : s) ts.push_back(t[x]);
    std::sort(ts.begin(), ts.end());
    auto eq = Equidecompose(f, ts, s);
    if (!eq) {
      throw ConstraintViolation("cancellation", "T(S) and S have different F-class counts");
    }
    std::vector<int> back(n, -1);
    for (size_t i = 0; i < eq->source.size(); ++i) back[eq->source[i]] = eq->target[i];
    Perm w(s.size());
    for (size_t i = 0; i < s.size(); ++i) w[i] = index_in_s[back[t[s[i]]]];
    witness.push_back(std::move(w));
  }
  FinEqrel link_s = LinkFiniteIndex(Restrict(f, s), Restrict(f_prime, s), witness);

  DisjointSets sets(n);
  for (int x = 0; x < n; ++x) sets.Union(x, l.class_members(l.class_of(x)).front());
  for (const auto& cls : link_s.classes())
    for (int i : cls) sets.Union(s[cls.front()], s[i]);
  GroupAction action = LiftFromLink(e, outer, FinEqrel::FromDisjointSets(sets));
  for (size_t i = 0; i < normal_elements.size(); ++i) {
    if (action.ActionOf(normal_elements[i]) != normal_action[i]) {
      throw ConstraintViolation("extends-normal-action",
                                "lift does not extend the normal subgroup action");
    }
  }
  return action;
}

}  // namespace quotlift
