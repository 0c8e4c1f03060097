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

#ifndef QUOTLIFT_GROUP_H_
#define QUOTLIFT_GROUP_H_

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "quotlift/eqrel.h"

namespace quotlift {

// A permutation of {0..n-1} in one-line form: p[x] is the image of x.
using Perm = std::vector<int>;

Perm IdentityPerm(int n);
bool IsPermutation(std::span<const int> p);
// Throws InputError unless `p` is a permutation of {0..n-1}.
void ValidatePermutation(std::span<const int> p, int n);
// (g ∘ h)(x) = g(h(x)), so acting by h first.
Perm Compose(const Perm& g, const Perm& h);
Perm InversePerm(const Perm& p);
Perm PermPower(const Perm& p, long k);
bool IsIdentity(const Perm& p);
// Cycles are applied as written; points not mentioned are fixed.
Perm PermFromCycles(int n, const std::vector<std::vector<int>>& cycles);
// Disjoint cycle notation such as "(0 2)(1 3)"; the identity is "()".
std::string CycleString(const Perm& p);

inline constexpr int kMaxGroupOrder = 10000;
inline constexpr int kFullTableOrder = 24;

// A finite group on elements 0..order-1.
//
// Permutation groups are closed breadth-first over their generator list, so
// element ids follow the shortlex order of generator words and the identity
// is element 0. Groups of order ≤ 24 keep a full multiplication table;
// larger permutation groups multiply by composing and looking up.
class FinGroup {
 public:
  // mul[a][b] = a·b. Validated: Latin square, identity, inverses, and
  // associativity (exhaustive up to order 24, on generators beyond).
  static FinGroup FromTable(std::vector<std::vector<int>> mul);

  // Closure of `gens` acting on {0..degree-1}. Throws InputError if the
  // closure exceeds `cap` elements.
  static FinGroup FromPermutations(const std::vector<Perm>& gens, int degree,
                                   int cap = kMaxGroupOrder);

  static FinGroup Trivial();
  static FinGroup Cyclic(int n);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int Mul(int a, int b) const;
  int Inverse(int a) const { return inverse_[a]; }
  int Power(int a, long k) const;

  // Generator element ids. For permutation groups these are the supplied
  // generators (duplicates and identities included as given).
  const std::vector<int>& generators() const { return generators_; }

  // Elements in shortlex order of generator words, identity first.
  const std::vector<int>& shortlex_order() const { return shortlex_; }

  bool is_permutation_group() const { return !perms_.empty(); }
  int degree() const { return degree_; }
  const Perm& AsPermutation(int a) const;
  // Element id of a permutation, or -1 when not in the group.
  int ElementOf(const Perm& p) const;

  bool has_table() const { return !table_.empty(); }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  FinGroup() = default;
  void BuildShortlex();
  void BuildInverses();

  int order_ = 0;
  int identity_ = 0;
  int degree_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<int> shortlex_;
  std::vector<Perm> perms_;
  std::unordered_map<std::string, int> perm_index_;
};

// A finite group acting on {0..n-1}; act[g] is the permutation of element g.
class GroupAction {
 public:
  // Checks act(id) = id and act(g)∘act(s) = act(g·s) for all g and all
  // generators s, which makes g ↦ act(g) a homomorphism.
  GroupAction(FinGroup group, int space_size, std::vector<Perm> act);

  // The action of the closure of `gens` on {0..n-1}.
  static GroupAction FromGenerators(const std::vector<Perm>& gens, int n);

  const FinGroup& group() const { return group_; }
  int space_size() const { return n_; }
  int Act(int g, int x) const { return act_[g][x]; }
  const Perm& ActionOf(int g) const { return act_[g]; }
  const std::vector<Perm>& actions() const { return act_; }

 private:
  FinGroup group_;
  int n_;
  std::vector<Perm> act_;
};

// Orbit relation E_G^X of the action.
FinEqrel OrbitEqrel(const GroupAction& a);

// Orbit relation of the group generated by `gens`, computed from the
// generator graphs without closing the group.
FinEqrel OrbitEqrelOfGenerators(int n, const std::vector<Perm>& gens);

}  // namespace quotlift

#endif  // QUOTLIFT_GROUP_H_
