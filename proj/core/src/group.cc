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

#include "quotlift/group.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "quotlift/errors.h"

namespace quotlift {
namespace {

std::string PermKey(const Perm& p) {
  return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(int));
}

}  // namespace

Perm IdentityPerm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool IsPermutation(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

void ValidatePermutation(std::span<const int> p, int n) {
  if (static_cast<int>(p.size()) != n) {
    throw InputError("permutation has length " + std::to_string(p.size()) + ", expected " +
                     std::to_string(n));
  }
  if (!IsPermutation(p)) throw InputError("not a permutation of {0.." + std::to_string(n - 1) + "}");
}

Perm Compose(const Perm& g, const Perm& h) {
  Perm out(h.size());
  for (size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
  return out;
}

Perm InversePerm(const Perm& p) {
  Perm out(p.size());
  for (size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<int>(x);
  return out;
}

Perm PermPower(const Perm& p, long k) {
  Perm base = k < 0 ? InversePerm(p) : p;
  if (k < 0) k = -k;
  Perm result = IdentityPerm(static_cast<int>(p.size()));
  while (k > 0) {
    if (k & 1) result = Compose(result, base);
    base = Compose(base, base);
    k >>= 1;
  }
  return result;
}

bool IsIdentity(const Perm& p) {
  for (size_t x = 0; x < p.size(); ++x) {
    if (p[x] != static_cast<int>(x)) return false;
  }
  return true;
}

Perm PermFromCycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = IdentityPerm(n);
  std::vector<char> used(n, 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int x = cyc[i];
      if (x < 0 || x >= n) throw InputError("cycle point " + std::to_string(x) + " out of range");
      if (used[x]) throw InputError("cycles are not disjoint at point " + std::to_string(x));
      used[x] = 1;
      p[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return p;
}

std::string CycleString(const Perm& p) {
  std::ostringstream out;
  std::vector<char> done(p.size(), 0);
  bool any = false;
  for (size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == static_cast<int>(start)) continue;
    any = true;
    out << '(';
    int x = static_cast<int>(start);
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = p[x];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

FinGroup FinGroup::FromTable(std::vector<std::vector<int>> mul) {
  const int n = static_cast<int>(mul.size());
  if (n < 1) throw InputError("group table must be nonempty");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table must be square");
    if (!IsPermutation(row)) throw InputError("group table rows must be permutations");
  }
  for (int b = 0; b < n; ++b) {
    std::vector<int> col(n);
    for (int a = 0; a < n; ++a) col[a] = mul[a][b];
    if (!IsPermutation(col)) throw InputError("group table columns must be permutations");
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw InputError("group table has no identity");

  FinGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.table_ = std::move(mul);
  g.BuildInverses();

  // Greedy generating set in id order.
  std::vector<char> reached(n, 0);
  reached[identity] = 1;
  for (int a = 0; a < n; ++a) {
    if (reached[a]) continue;
    g.generators_.push_back(a);
    std::deque<int> frontier;
    for (int x = 0; x < n; ++x) {
      if (reached[x]) frontier.push_back(x);
    }
    while (!frontier.empty()) {
      int x = frontier.front();
      frontier.pop_front();
      for (int s : g.generators_) {
        int y = g.table_[x][s];
        if (!reached[y]) {
          reached[y] = 1;
          frontier.push_back(y);
        }
      }
    }
  }

  const auto& t = g.table_;
  if (n <= kFullTableOrder) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) throw InputError("group table is not associative");
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int s : g.generators_)
          if (t[t[a][b]][s] != t[a][t[b][s]]) throw InputError("group table is not associative");
  }
  g.BuildShortlex();
  return g;
}

FinGroup FinGroup::FromPermutations(const std::vector<Perm>& gens, int degree, int cap) {
  if (degree < 1) throw InputError("permutation degree must be positive");
  for (const auto& s : gens) ValidatePermutation(s, degree);
  FinGroup g;
  g.degree_ = degree;
  g.identity_ = 0;
  g.perms_.push_back(IdentityPerm(degree));
  g.perm_index_.emplace(PermKey(g.perms_[0]), 0);
  std::vector<int> gen_ids;
  for (size_t head = 0; head < g.perms_.size(); ++head) {
    for (const auto& s : gens) {
      Perm next = Compose(g.perms_[head], s);
      auto [it, inserted] = g.perm_index_.emplace(PermKey(next), static_cast<int>(g.perms_.size()));
      if (inserted) {
        if (static_cast<int>(g.perms_.size()) >= cap) {
          throw InputError("group closure exceeds " + std::to_string(cap) + " elements");
        }
        g.perms_.push_back(std::move(next));
      }
    }
  }
  g.order_ = static_cast<int>(g.perms_.size());
  for (const auto& s : gens) g.generators_.push_back(g.perm_index_.at(PermKey(s)));
  if (g.order_ <= kFullTableOrder) {
    g.table_.assign(g.order_, std::vector<int>(g.order_));
    for (int a = 0; a < g.order_; ++a)
      for (int b = 0; b < g.order_; ++b)
        g.table_[a][b] = g.perm_index_.at(PermKey(Compose(g.perms_[a], g.perms_[b])));
  }
  g.BuildInverses();
  g.shortlex_.resize(g.order_);
  std::iota(g.shortlex_.begin(), g.shortlex_.end(), 0);
  return g;
}

FinGroup FinGroup::Trivial() { return FromTable({{0}}); }

FinGroup FinGroup::Cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FromTable(std::move(t));
}

int FinGroup::Mul(int a, int b) const {
  if (!table_.empty()) return table_[a][b];
  return perm_index_.at(PermKey(Compose(perms_[a], perms_[b])));
}

int FinGroup::Power(int a, long k) const {
  if (k < 0) {
    a = Inverse(a);
    k = -k;
  }
  int result = identity_;
  for (long i = 0; i < k; ++i) result = Mul(result, a);
  return result;
}

const Perm& FinGroup::AsPermutation(int a) const {
  if (perms_.empty()) throw InputError("group is not given by permutations");
  return perms_.at(a);
}

int FinGroup::ElementOf(const Perm& p) const {
  auto it = perm_index_.find(PermKey(p));
  return it == perm_index_.end() ? -1 : it->second;
}

void FinGroup::BuildInverses() {
  inverse_.assign(order_, -1);
  if (!perms_.empty()) {
    for (int a = 0; a < order_; ++a) inverse_[a] = perm_index_.at(PermKey(InversePerm(perms_[a])));
    return;
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (table_[a][b] == identity_) inverse_[a] = b;
}

void FinGroup::BuildShortlex() {
  std::vector<char> seen(order_, 0);
  shortlex_.clear();
  shortlex_.push_back(identity_);
  seen[identity_] = 1;
  for (size_t head = 0; head < shortlex_.size(); ++head) {
    for (int s : generators_) {
      int y = Mul(shortlex_[head], s);
      if (!seen[y]) {
        seen[y] = 1;
        shortlex_.push_back(y);
      }
    }
  }
}

GroupAction::GroupAction(FinGroup group, int space_size, std::vector<Perm> act)
    : group_(std::move(group)), n_(space_size), act_(std::move(act)) {
  if (static_cast<int>(act_.size()) != group_.order()) {
    throw InputError("action must list one permutation per group element");
  }
  for (const auto& p : act_) ValidatePermutation(p, n_);
  if (!IsIdentity(act_[group_.identity()])) {
    throw InputError("the identity does not act trivially");
  }
  for (int g = 0; g < group_.order(); ++g) {
    for (int s : group_.generators()) {
      if (Compose(act_[g], act_[s]) != act_[group_.Mul(g, s)]) {
        throw InputError("action is not a homomorphism at elements " + std::to_string(g) +
                         " and " + std::to_string(s));
      }
    }
  }
}

GroupAction GroupAction::FromGenerators(const std::vector<Perm>& gens, int n) {
  FinGroup g = FinGroup::FromPermutations(gens, n);
  std::vector<Perm> act(g.order());
  for (int a = 0; a < g.order(); ++a) act[a] = g.AsPermutation(a);
  return GroupAction(std::move(g), n, std::move(act));
}

FinEqrel OrbitEqrel(const GroupAction& a) {
  DisjointSets sets(a.space_size());
  const auto& gens = a.group().generators();
  if (gens.empty()) {
    for (int g = 0; g < a.group().order(); ++g)
      for (int x = 0; x < a.space_size(); ++x) sets.Union(x, a.Act(g, x));
  }
  for (int s : gens)
    for (int x = 0; x < a.space_size(); ++x) sets.Union(x, a.Act(s, x));
  return FinEqrel::FromDisjointSets(sets);
}

FinEqrel OrbitEqrelOfGenerators(int n, const std::vector<Perm>& gens) {
  DisjointSets sets(n);
  for (const auto& s : gens) {
    ValidatePermutation(s, n);
    for (int x = 0; x < n; ++x) sets.Union(x, s[x]);
  }
  return FinEqrel::FromDisjointSets(sets);
}

}  // namespace quotlift
