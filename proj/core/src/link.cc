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

#include "quotlift/link.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "quotlift/automorphism.h"
#include "quotlift/errors.h"

namespace quotlift {
namespace {

constexpr int kMaxSubsetClass = 20;
constexpr long kMaxTransversalCandidates = 1000000;

bool CandidateLess(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.front() != b.front()) return a.front() < b.front();
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void RequireSameSpace(const FinEqrel& a, const FinEqrel& b) {
  if (a.size() != b.size()) {
    throw InputError("relations live on spaces of size " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  }
}

std::string SetString(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

LinkVerification VerifyLink(const FinEqrel& e, const FinEqrel& f, const FinEqrel& l) {
  RequireSameSpace(e, f);
  RequireSameSpace(e, l);
  if (!e.IsSubrelationOf(f)) throw PreconditionError("verify_link: E is not contained in F");
  if (!l.IsSubrelationOf(f)) throw PreconditionError("verify_link: L is not contained in F");
  LinkVerification out;
  for (int c = 0; c < f.num_classes(); ++c) {
    const auto& members = f.class_members(c);
    std::map<std::pair<int, int>, int> count;
    for (int x : members) {
      int& k = count[{e.class_of(x), l.class_of(x)}];
      if (++k == 2) {
        out.counterexample = LinkCounterexample{c, e.class_members(e.class_of(x)),
                                                l.class_members(l.class_of(x)), 2};
        return out;
      }
    }
    std::vector<int> e_ids, l_ids;
    for (int x : members) {
      e_ids.push_back(e.class_of(x));
      l_ids.push_back(l.class_of(x));
    }
    std::sort(e_ids.begin(), e_ids.end());
    e_ids.erase(std::unique(e_ids.begin(), e_ids.end()), e_ids.end());
    std::sort(l_ids.begin(), l_ids.end());
    l_ids.erase(std::unique(l_ids.begin(), l_ids.end()), l_ids.end());
    for (int ec : e_ids) {
      for (int lc : l_ids) {
        if (!count.count({ec, lc})) {
          out.counterexample =
              LinkCounterexample{c, e.class_members(ec), l.class_members(lc), 0};
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

Fsr GreedyFsr(std::vector<std::vector<int>> candidates) {
  for (auto& c : candidates) {
    if (c.empty()) throw InputError("fsr candidates must be nonempty");
    std::sort(c.begin(), c.end());
  }
  std::sort(candidates.begin(), candidates.end(), CandidateLess);
  Fsr out;
  std::set<int> used;
  for (auto& c : candidates) {
    bool free = std::none_of(c.begin(), c.end(), [&](int x) { return used.count(x) > 0; });
    if (!free) continue;
    used.insert(c.begin(), c.end());
    out.classes.push_back(std::move(c));
  }
  out.domain.assign(used.begin(), used.end());
  return out;
}

namespace {

template <typename Visit>
void ForEachSubset(const std::vector<int>& members, Visit visit) {
  if (members.size() > kMaxSubsetClass) {
    throw InputError("class of size " + std::to_string(members.size()) +
                     " is too large for subset enumeration");
  }
  const unsigned long limit = 1UL << members.size();
  std::vector<int> subset;
  for (unsigned long mask = 1; mask < limit; ++mask) {
    subset.clear();
    for (size_t i = 0; i < members.size(); ++i)
      if (mask >> i & 1) subset.push_back(members[i]);
    visit(subset);
  }
}

}  // namespace

Fsr MaxFsr(const FinEqrel& ambient, const FinitePredicate& phi) {
  std::vector<std::vector<int>> candidates;
  for (const auto& cls : ambient.classes()) {
    ForEachSubset(cls, [&](const std::vector<int>& s) {
      if (phi(s)) candidates.push_back(s);
    });
  }
  return GreedyFsr(std::move(candidates));
}

bool IsPhiMaximal(const FinEqrel& ambient, const FinitePredicate& phi, const Fsr& fsr) {
  std::vector<char> in_domain(ambient.size(), 0);
  for (const auto& c : fsr.classes) {
    if (c.empty() || !phi(c)) return false;
    for (int x : c) {
      if (x < 0 || x >= ambient.size() || in_domain[x]) return false;
      if (!ambient.Related(x, c.front())) return false;
      in_domain[x] = 1;
    }
  }
  for (const auto& cls : ambient.classes()) {
    std::vector<int> rest;
    for (int x : cls)
      if (!in_domain[x]) rest.push_back(x);
    if (rest.empty()) continue;
    bool found = false;
    ForEachSubset(rest, [&](const std::vector<int>& s) { found = found || phi(s); });
    if (found) return false;
  }
  return true;
}

namespace {

// For every coarse class, the allowed points of each fine class inside it,
// fine classes in id order.
std::vector<std::vector<std::vector<int>>> AllowedByFineClass(const FinEqrel& fine,
                                                              const FinEqrel& coarse,
                                                              std::span<const int> allowed) {
  RequireSameSpace(fine, coarse);
  if (!fine.IsSubrelationOf(coarse)) {
    throw PreconditionError("fine relation is not contained in coarse relation");
  }
  ValidatePointSet(fine.size(), allowed);
  std::vector<char> ok(fine.size(), 0);
  for (int x : allowed) ok[x] = 1;
  std::vector<std::vector<std::vector<int>>> out(coarse.num_classes());
  std::vector<int> slot(fine.num_classes(), -1);
  for (int x = 0; x < fine.size(); ++x) {
    int fc = fine.class_of(x);
    int cc = coarse.class_of(x);
    if (slot[fc] < 0) {
      slot[fc] = static_cast<int>(out[cc].size());
      out[cc].emplace_back();
    }
    if (ok[x]) out[cc][slot[fc]].push_back(x);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> TransversalCandidates(const FinEqrel& fine, const FinEqrel& coarse,
                                                    std::span<const int> allowed) {
  std::vector<std::vector<int>> out;
  for (const auto& lists : AllowedByFineClass(fine, coarse, allowed)) {
    long total = 1;
    for (const auto& l : lists) {
      total *= static_cast<long>(l.size());
      if (total > kMaxTransversalCandidates) {
        throw InputError("too many transversal candidates to enumerate");
      }
    }
    if (total == 0) continue;
    std::vector<size_t> pick(lists.size(), 0);
    while (true) {
      std::vector<int> set;
      for (size_t i = 0; i < lists.size(); ++i) set.push_back(lists[i][pick[i]]);
      std::sort(set.begin(), set.end());
      out.push_back(std::move(set));
      size_t i = 0;
      while (i < lists.size() && ++pick[i] == lists[i].size()) pick[i++] = 0;
      if (i == lists.size()) break;
    }
  }
  return out;
}

Fsr MaxTransversalFsr(const FinEqrel& fine, const FinEqrel& coarse, std::span<const int> allowed) {
  // Greedy in (min, size, lex) order picks, in every coarse class, the
  // smallest unused allowed point of each fine class until one runs out.
  Fsr out;
  for (const auto& lists : AllowedByFineClass(fine, coarse, allowed)) {
    size_t rounds = lists.empty() ? 0 : lists.front().size();
    for (const auto& l : lists) rounds = std::min(rounds, l.size());
    for (size_t r = 0; r < rounds; ++r) {
      std::vector<int> set;
      for (const auto& l : lists) set.push_back(l[r]);
      std::sort(set.begin(), set.end());
      out.domain.insert(out.domain.end(), set.begin(), set.end());
      out.classes.push_back(std::move(set));
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), CandidateLess);
  std::sort(out.domain.begin(), out.domain.end());
  return out;
}

void ValidateNormalityWitness(const FinEqrel& e, const FinEqrel& f, const std::vector<Perm>& gens) {
  RequireSameSpace(e, f);
  if (!e.IsSubrelationOf(f)) throw PreconditionError("E is not contained in F");
  for (size_t i = 0; i < gens.size(); ++i) {
    ValidatePermutation(gens[i], e.size());
    auto verdict = ClassifyAutomorphism(e, gens[i]);
    if (verdict.verdict == AutVerdict::kNotAutomorphism) {
      throw PreconditionError("normality witness: generator " + std::to_string(i) + " " +
                              CycleString(gens[i]) + " is not an automorphism of E");
    }
  }
  if (!(Join(e, OrbitEqrelOfGenerators(e.size(), gens)) == f)) {
    throw PreconditionError("normality witness: F is not E joined with the generated orbits");
  }
}

namespace {

void RequireLink(const FinEqrel& e, const FinEqrel& f, const FinEqrel& l, const char* who) {
  auto v = VerifyLink(e, f, l);
  if (!v.ok) {
    const auto& c = *v.counterexample;
    throw ConstraintViolation("link-incidence",
                              std::string(who) + ": E-class " + SetString(c.e_class) +
                                  " meets L-class " + SetString(c.l_class) + " " +
                                  std::to_string(c.count) + " times");
  }
}

}  // namespace

FinEqrel LinkFiniteIndex(const FinEqrel& e, const FinEqrel& f, const std::vector<Perm>& gens) {
  ValidateNormalityWitness(e, f, gens);
  const int n = e.size();
  std::vector<int> all(n);
  for (int x = 0; x < n; ++x) all[x] = x;
  Fsr r = MaxTransversalFsr(e, f, all);
  PointSet y = Hull(e, r.domain);
  std::vector<char> in_y(n, 0);
  for (int x : y) in_y[x] = 1;

  DisjointSets sets(n);
  for (const auto& cls : r.classes) {
    int anchor = -1;
    for (int x : cls) {
      if (!in_y[x]) continue;
      if (anchor < 0) anchor = x;
      else sets.Union(anchor, x);
    }
  }
  if (static_cast<int>(y.size()) < n) {
    FinGroup group = FinGroup::FromPermutations(gens, n);
    for (int x = 0; x < n; ++x) {
      if (in_y[x]) continue;
      int target = -1;
      for (int g : group.shortlex_order()) {
        int gx = group.AsPermutation(g)[x];
        if (in_y[gx]) {
          target = gx;
          break;
        }
      }
      if (target < 0) {
        throw ConstraintViolation("phi-maximality",
                                  "no group element moves " + std::to_string(x) + " into Y");
      }
      sets.Union(x, target);
    }
  }
  FinEqrel link = FinEqrel::FromDisjointSets(sets);
  RequireLink(e, f, link, "link_finite_index");
  return link;
}

OuterSubgroup FiniteOuterSubgroup(const FinEqrel& e, const FinEqrel& f,
                                  const std::vector<Perm>& gens) {
  ValidateNormalityWitness(e, f, gens);
  const int n = e.size();
  FinGroup h = FinGroup::FromPermutations(gens, n);

  // E-class ids inside each F-class, in increasing order.
  std::vector<std::vector<int>> e_in_f(f.num_classes());
  for (int c = 0; c < e.num_classes(); ++c)
    e_in_f[f.class_of(e.class_members(c).front())].push_back(c);

  std::vector<std::vector<int>> maps(h.order());
  for (int a : h.shortlex_order()) maps[a] = InducedClassMap(e, h.AsPermutation(a));
  auto restricted = [&](int a, int fc) {
    std::vector<int> out;
    for (int c : e_in_f[fc]) out.push_back(maps[a][c]);
    return out;
  };

  OuterSubgroup out;
  std::vector<std::set<std::vector<int>>> seen(f.num_classes());
  while (true) {
    Perm g = IdentityPerm(n);
    bool any = false;
    for (int fc = 0; fc < f.num_classes(); ++fc) {
      for (int a : h.shortlex_order()) {
        auto image = restricted(a, fc);
        if (seen[fc].count(image)) continue;
        seen[fc].insert(image);
        const Perm& pa = h.AsPermutation(a);
        for (int x : f.class_members(fc)) g[x] = pa[x];
        any = true;
        break;
      }
    }
    if (!any) break;
    if (!IsIdentity(g)) out.selected.push_back(std::move(g));
  }

  FinGroup closure = FinGroup::FromPermutations(out.selected, n);
  std::set<std::vector<int>> images;
  for (int a : closure.shortlex_order()) {
    const Perm& pa = closure.AsPermutation(a);
    auto map = InducedClassMap(e, pa);
    if (images.insert(map).second) {
      out.class_maps.push_back(std::move(map));
      out.representatives.push_back(pa);
    }
  }
  if (!(Join(e, OrbitEqrelOfGenerators(n, out.representatives)) == f)) {
    throw ConstraintViolation("outer-subgroup-generates",
                              "representatives do not generate F over E");
  }
  return out;
}

FinEqrel LinkSmooth(const FinEqrel& e, const FinEqrel& f) {
  RequireSameSpace(e, f);
  if (!e.IsSubrelationOf(f)) throw PreconditionError("link_smooth: E is not contained in F");
  const int n = e.size();
  std::vector<int> class_size(f.num_classes(), -1);
  std::vector<int> rank(n);
  for (const auto& cls : e.classes()) {
    int fc = f.class_of(cls.front());
    int sz = static_cast<int>(cls.size());
    if (class_size[fc] >= 0 && class_size[fc] != sz) {
      throw PreconditionError("normality violation: E-classes of sizes " +
                              std::to_string(class_size[fc]) + " and " + std::to_string(sz) +
                              " share an F-class");
    }
    class_size[fc] = sz;
    for (int k = 0; k < sz; ++k) rank[cls[k]] = k;
  }
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) label[x] = f.class_of(x) * n + rank[x];
  FinEqrel link = FinEqrel::FromLabels(label);
  RequireLink(e, f, link, "link_smooth");
  return link;
}

}  // namespace quotlift
