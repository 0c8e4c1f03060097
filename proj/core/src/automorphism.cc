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

#include "quotlift/automorphism.h"

#include <algorithm>
#include <set>

#include "quotlift/errors.h"

namespace quotlift {

std::string ToString(AutVerdict v) {
  switch (v) {
    case AutVerdict::kNotAutomorphism:
      return "not-automorphism";
    case AutVerdict::kInner:
      return "inner";
    case AutVerdict::kOuterNontrivial:
      return "outer-nontrivial";
  }
  return "unknown";
}

namespace {

// Returns a pair witnessing that T is not an automorphism, if any.
std::optional<std::pair<int, int>> BrokenPair(const FinEqrel& e, const Perm& t) {
  // x E y ⟹ Tx E Ty: every class maps into one class.
  for (const auto& cls : e.classes()) {
    for (int y : cls) {
      if (!e.Related(t[cls.front()], t[y])) return std::make_pair(cls.front(), y);
    }
  }
  // Tx E Ty ⟹ x E y: images of distinct classes land in distinct classes.
  std::vector<int> owner(e.num_classes(), -1);
  for (const auto& cls : e.classes()) {
    int target = e.class_of(t[cls.front()]);
    if (owner[target] >= 0) return std::make_pair(owner[target], cls.front());
    owner[target] = cls.front();
  }
  return std::nullopt;
}

}  // namespace

bool IsAutomorphism(const FinEqrel& e, const Perm& t) {
  ValidatePermutation(t, e.size());
  return !BrokenPair(e, t).has_value();
}

std::vector<int> InducedClassMap(const FinEqrel& e, const Perm& t) {
  std::vector<int> map(e.num_classes());
  for (int c = 0; c < e.num_classes(); ++c) map[c] = e.class_of(t[e.class_members(c).front()]);
  return map;
}

AutClassification ClassifyAutomorphism(const FinEqrel& e, const Perm& t) {
  ValidatePermutation(t, e.size());
  AutClassification out;
  if (auto broken = BrokenPair(e, t)) {
    out.verdict = AutVerdict::kNotAutomorphism;
    out.broken_pair = broken;
    return out;
  }
  out.class_map = InducedClassMap(e, t);
  for (int c = 0; c < e.num_classes(); ++c) {
    if (out.class_map[c] != c) {
      out.verdict = AutVerdict::kOuterNontrivial;
      out.moved_class = c;
      return out;
    }
  }
  out.verdict = AutVerdict::kInner;
  out.class_of_point = e.labels();
  out.class_map.clear();
  return out;
}

ExtensionResult ExtendByGroup(const FinEqrel& e, const std::vector<Perm>& gens) {
  ExtensionResult out{Join(e, OrbitEqrelOfGenerators(e.size(), gens)), true, -1};
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!IsAutomorphism(e, gens[i])) {
      out.normal = false;
      out.failing_generator = static_cast<int>(i);
      break;
    }
  }
  return out;
}

Perm NormalRestrict(const FinEqrel& e, const Perm& t, const FinEqrel& f_prime) {
  ValidatePermutation(t, e.size());
  if (!IsAutomorphism(e, t)) throw PreconditionError("T is not an automorphism of E");
  if (!e.IsSubrelationOf(f_prime)) throw PreconditionError("normal_restrict requires E ⊆ F'");
  FinEqrel joined = Join(e, OrbitEqrelOfGenerators(e.size(), {t}));
  if (!f_prime.IsSubrelationOf(joined)) {
    throw PreconditionError("normal_restrict requires F' ⊆ E^{∨T}");
  }
  Perm out(e.size());
  for (int x = 0; x < e.size(); ++x) {
    int y = t[x];
    // T has finite order, so the orbit returns to x and the loop ends.
    while (!f_prime.Related(x, y)) y = t[y];
    out[x] = y;
  }
  return out;
}

std::vector<Perm> RestrictWitness(const FinEqrel& e, const std::vector<Perm>& gens,
                                  const FinEqrel& f_sub) {
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!IsAutomorphism(e, gens[i])) {
      throw PreconditionError("witness generator " + std::to_string(i) +
                              " is not an automorphism of E");
    }
  }
  if (!e.IsSubrelationOf(f_sub)) throw PreconditionError("restricted witness requires E ⊆ F'");
  FinEqrel full = Join(e, OrbitEqrelOfGenerators(e.size(), gens));
  if (!f_sub.IsSubrelationOf(full)) {
    throw PreconditionError("restricted witness requires F' ⊆ E^{∨G}");
  }
  FinGroup group = FinGroup::FromPermutations(gens, e.size());
  std::vector<Perm> out;
  std::set<Perm> seen;
  for (int a = 0; a < group.order(); ++a) {
    const Perm& t = group.AsPermutation(a);
    FinEqrel piece = Meet(f_sub, Join(e, OrbitEqrelOfGenerators(e.size(), {t})));
    Perm restricted = NormalRestrict(e, t, piece);
    if (IsIdentity(restricted)) continue;
    if (seen.insert(restricted).second) out.push_back(std::move(restricted));
  }
  if (!(Join(e, OrbitEqrelOfGenerators(e.size(), out)) == f_sub)) {
    throw ConstraintViolation("restricted-witness",
                              "restricted generators do not generate F' over E");
  }
  return out;
}

std::vector<Perm> EnumerateAutomorphisms(const FinEqrel& e) {
  if (e.size() > 8) throw InputError("automorphism enumeration is limited to 8 points");
  std::vector<Perm> out;
  Perm p = IdentityPerm(e.size());
  do {
    if (!BrokenPair(e, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> EnumerateOuterClassMaps(const FinEqrel& e) {
  std::set<std::vector<int>> maps;
  for (const auto& t : EnumerateAutomorphisms(e)) maps.insert(InducedClassMap(e, t));
  return {maps.begin(), maps.end()};
}

}  // namespace quotlift
