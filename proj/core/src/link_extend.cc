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

#include <algorithm>
#include <string>

#include "quotlift/automorphism.h"
#include "quotlift/errors.h"
#include "quotlift/link.h"

namespace quotlift {
namespace {

// Min element of every class of `l` inside `region`, sorted.
std::vector<int> ClassMinimaWithin(const FinEqrel& l, const std::vector<int>& region) {
  std::vector<int> out;
  for (int x : region)
    if (l.class_members(l.class_of(x)).front() == x) out.push_back(x);
  return out;
}

FinEqrel ExtendRec(const FinEqrel& e, const FinEqrel& f, const FinEqrel& f_prime,
                   const FinEqrel& link, const std::vector<Perm>& gens) {
  if (f_prime == f) return link;
  const int n = e.size();
  PointSet s = Transversal(link);
  Fsr r = MaxTransversalFsr(f, f_prime, s);
  PointSet y = Hull(f, Saturate(link, r.domain));
  std::vector<char> in_y(n, 0);
  for (int x : y) in_y[x] = 1;

  // 0 = inside Y, 1 = inside Z, 2 = mixed.
  std::vector<int> kind(f_prime.num_classes());
  for (int c = 0; c < f_prime.num_classes(); ++c) {
    int ys = 0;
    for (int x : f_prime.class_members(c)) ys += in_y[x];
    int sz = static_cast<int>(f_prime.class_members(c).size());
    kind[c] = ys == sz ? 0 : ys == 0 ? 1 : 2;
    if (kind[c] == 1) {
      throw ConstraintViolation("phi-maximality",
                                "an F'-class avoids the saturated fsr domain");
    }
  }

  DisjointSets sets(n);
  for (int x = 0; x < n; ++x) sets.Union(x, link.class_members(link.class_of(x)).front());
  for (const auto& cls : r.classes) {
    if (kind[f_prime.class_of(cls.front())] != 0) continue;
    for (int x : cls) sets.Union(cls.front(), x);
  }

  bool mixed = std::any_of(kind.begin(), kind.end(), [](int k) { return k == 2; });
  if (mixed) {
    std::vector<int> label(n);
    for (int x = 0; x < n; ++x) {
      int c = f_prime.class_of(x);
      label[x] = kind[c] == 0 ? f.class_of(x) : n + 2 * c + in_y[x];
    }
    FinEqrel f3 = FinEqrel::FromLabels(label);
    std::vector<Perm> w = RestrictWitness(e, gens, f3);
    FinEqrel l3 = ExtendRec(e, f, f3, link, w);
    for (int x = 0; x < n; ++x) sets.Union(x, l3.class_members(l3.class_of(x)).front());
    for (int c = 0; c < f_prime.num_classes(); ++c) {
      if (kind[c] != 2) continue;
      std::vector<int> part_y, part_z;
      for (int x : f_prime.class_members(c)) (in_y[x] ? part_y : part_z).push_back(x);
      std::vector<int> s_y = ClassMinimaWithin(l3, part_y);
      std::vector<int> s_z = ClassMinimaWithin(l3, part_z);
      if (s_y.size() != s_z.size()) {
        throw ConstraintViolation("cancellation",
                                  "transversals of the two halves of F'-class " +
                                      std::to_string(c) + " have sizes " +
                                      std::to_string(s_y.size()) + " and " +
                                      std::to_string(s_z.size()));
      }
      for (size_t i = 0; i < s_y.size(); ++i) sets.Union(s_y[i], s_z[i]);
    }
  }
  return FinEqrel::FromDisjointSets(sets);
}

void RequireExtendedLink(const FinEqrel& e, const FinEqrel& f_prime, const FinEqrel& link,
                         const FinEqrel& out) {
  if (!link.IsSubrelationOf(out)) {
    throw ConstraintViolation("link-containment", "extended link does not contain the input");
  }
  auto v = VerifyLink(e, f_prime, out);
  if (!v.ok) throw ConstraintViolation("link-incidence", "extended relation is not a link");
}

}  // namespace

FinEqrel ExtendLink(const FinEqrel& e, const FinEqrel& f, const FinEqrel& f_prime,
                    const FinEqrel& link, const std::vector<Perm>& gens) {
  if (e.size() != f.size() || f.size() != f_prime.size() || link.size() != e.size()) {
    throw InputError("extend_link: relations live on different spaces");
  }
  if (!e.IsSubrelationOf(f) || !f.IsSubrelationOf(f_prime)) {
    throw PreconditionError("extend_link: need E ⊆ F ⊆ F'");
  }
  if (!VerifyLink(e, f, link).ok) throw PreconditionError("extend_link: input is not an (E,F)-link");
  ValidateNormalityWitness(e, f_prime, gens);
  FinEqrel out = ExtendRec(e, f, f_prime, link, gens);
  RequireExtendedLink(e, f_prime, link, out);
  return out;
}

HfLinkResult HfLink(const FinEqrel& e, const std::vector<FinEqrel>& chain,
                    const std::vector<Perm>& gens) {
  if (chain.empty()) throw InputError("hf_link: the chain is empty");
  for (const auto& fj : chain) {
    if (fj.size() != e.size()) throw InputError("hf_link: chain relation on a different space");
  }
  if (!e.IsSubrelationOf(chain.front())) throw PreconditionError("hf_link: E is not in F_0");
  for (size_t j = 1; j < chain.size(); ++j) {
    if (!chain[j - 1].IsSubrelationOf(chain[j])) {
      throw PreconditionError("hf_link: chain is not ascending at step " + std::to_string(j));
    }
  }
  ValidateNormalityWitness(e, chain.back(), gens);
  HfLinkResult out{FinEqrel::Identity(e.size()), {}};
  for (size_t j = 0; j < chain.size(); ++j) {
    std::vector<Perm> w =
        j + 1 == chain.size() ? gens : RestrictWitness(e, gens, chain[j]);
    if (j == 0) {
      out.links.push_back(LinkFiniteIndex(e, chain[0], w));
    } else {
      out.links.push_back(ExtendLink(e, chain[j - 1], chain[j], out.links.back(), w));
    }
  }
  out.link = out.links.back();
  return out;
}

}  // namespace quotlift
