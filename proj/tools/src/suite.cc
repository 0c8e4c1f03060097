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

#include "quotlift_cli/suite.h"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "quotlift/automorphism.h"
#include "quotlift/choice_sequence.h"
#include "quotlift/equidecompose.h"
#include "quotlift/errors.h"
#include "quotlift/hierarchy.h"
#include "quotlift/instance_io.h"
#include "quotlift/link.h"
#include "quotlift/link_oracle.h"
#include "quotlift/quasitile.h"
#include "quotlift/tower.h"
#include "quotlift_cli/generator.h"
#include "quotlift_cli/tasks.h"

namespace quotlift::cli {
namespace {

CriterionResult Start(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

std::string Count(int64_t good, int64_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

CriterionResult LinkSoundness() {
  CriterionResult r = Start(1, "link construction soundness");
  int64_t good = 0;
  const int64_t total = 1000;
  for (int64_t i = 0; i < total; ++i) {
    GenParams p;
    p.size = 2 + static_cast<int>(i % 11);
    p.index = std::min(p.size, 1 + static_cast<int>((i / 11) % 4));
    Instance inst = GenerateInstance(1000 + i, p);
    ExtensionResult ext = ExtendByGroup(inst.e, inst.gens);
    if (!ext.normal || !(ext.extended == *inst.f)) continue;
    FinEqrel l = LinkFiniteIndex(inst.e, *inst.f, inst.gens);
    if (VerifyLink(inst.e, *inst.f, l).ok) ++good;
  }
  r.pass = good == total;
  r.detail = Count(good, total) + " links verified, runtime limit 10 s";
  return r;
}

CriterionResult LinkOracle() {
  CriterionResult r = Start(2, "link construction vs brute-force oracle");
  std::vector<OracleInstance> all = ExhaustiveOracleInstances(8);
  int64_t with_witness = 0, good = 0;
  for (const auto& inst : all) {
    if (!inst.has_witness) continue;
    ++with_witness;
    std::vector<FinEqrel> links = EnumerateLinks(inst.e, inst.f);
    if (links.empty()) continue;
    FinEqrel l = LinkFiniteIndex(inst.e, inst.f, inst.witness);
    if (std::find(links.begin(), links.end(), l) != links.end()) ++good;
  }
  r.pass = with_witness > 0 && good == with_witness;
  r.detail = Count(good, with_witness) + " witnessed instances of " + std::to_string(all.size()) +
             " enumerated up to relabelling";
  return r;
}

CriterionResult LinkExtension() {
  CriterionResult r = Start(3, "link extension on three-level chains");
  int64_t good = 0;
  const int64_t total = 500;
  for (int64_t i = 0; i < total; ++i) {
    GenParams p;
    p.size = 4 + static_cast<int>(i % 9);
    p.index = 2 + static_cast<int>((i / 9) % 3);
    p.gens = 2;
    Instance inst = GenerateInstance(5000 + i, p);
    std::vector<Perm> first{inst.gens[0]};
    FinEqrel f = ExtendByGroup(inst.e, first).extended;
    FinEqrel l = LinkFiniteIndex(inst.e, f, first);
    FinEqrel lp = ExtendLink(inst.e, f, *inst.f, l, inst.gens);
    if (VerifyLink(inst.e, *inst.f, lp).ok && l.IsSubrelationOf(lp)) ++good;
  }
  r.pass = good == total;
  r.detail = Count(good, total) + " extended links verified and containing the input";
  return r;
}

CriterionResult LiftAxioms() {
  CriterionResult r = Start(4, "lift axioms and class-bijectivity");
  int64_t good = 0;
  const int64_t total = 500;
  for (int64_t i = 0; i < total; ++i) {
    GenParams p;
    p.size = 2 + static_cast<int>(i % 9);
    p.index = std::min(p.size, 1 + static_cast<int>((i / 9) % 4));
    Instance inst = GenerateInstance(9000 + i, p);
    TaskResult t = RunTask("lift", InstanceToJson(inst), TaskParams{});
    if (t.exit_code == kExitPass) ++good;
  }
  r.pass = good == total;
  r.detail = Count(good, total) + " lifts satisfy the axioms on all points and elements";
  return r;
}

CriterionResult Cancellation() {
  CriterionResult r = Start(5, "cardinal-algebra cancellation");
  int64_t good = 0, implications = 0;
  const int64_t total = 1000;
  for (int64_t i = 0; i < total; ++i) {
    std::mt19937_64 rng(20000 + i);
    const int n = 2 + static_cast<int>(Draw(rng, 11));
    const int classes = 1 + static_cast<int>(Draw(rng, n));
    std::vector<int> labels(n);
    for (int& x : labels) x = static_cast<int>(Draw(rng, classes));
    FinEqrel e = FinEqrel::FromLabels(labels);
    PointSet a, b;
    for (int x = 0; x < n; ++x)
      if (Draw(rng, 2)) a.push_back(x);
    if (Draw(rng, 2)) {
      // Same count in every class, different points.
      for (int c = 0; c < e.num_classes(); ++c) {
        std::vector<int> members = e.class_members(c);
        int want = 0;
        for (int x : members) want += std::binary_search(a.begin(), a.end(), x);
        for (int j = static_cast<int>(members.size()) - 1; j > 0; --j)
          std::swap(members[j], members[Draw(rng, j + 1)]);
        b.insert(b.end(), members.begin(), members.begin() + want);
      }
      std::sort(b.begin(), b.end());
    } else {
      for (int x = 0; x < n; ++x)
        if (Draw(rng, 2)) b.push_back(x);
    }
    const int copies = 1 + static_cast<int>(Draw(rng, 4));
    FinEqrel big = ProductWithFull(e, copies);
    PointSet na = DisjointCopies(a, copies), nb = DisjointCopies(b, copies);
    auto wn = Equidecompose(big, na, nb);
    bool ok = true;
    if (wn) {
      ++implications;
      auto w = Equidecompose(e, a, b);
      ok = VerifyEquidecomposition(big, na, nb, *wn) && w && VerifyEquidecomposition(e, a, b, *w);
    }
    if (ok) ++good;
  }
  r.pass = good == total && implications > 0;
  r.detail = Count(good, total) + " instances, " + std::to_string(implications) +
             " with nA ∼ nB all cancelled to verified A ∼ B";
  return r;
}

CriterionResult Constants() {
  CriterionResult r = Start(6, "quasi-tiling constants");
  struct Expected {
    Rational eps;
    int k;
  };
  // k is least with 2ε ≥ (1−ε)^k: (3/4)^3 = 27/64 ≤ 1/2 < 9/16,
  // (4/5)^5 = 1024/3125 ≤ 2/5 < 256/625, (7/8)^11 ≤ 1/4 < (7/8)^10.
  std::vector<Expected> cases = {{Rational(1, 4), 3}, {Rational(1, 5), 5}, {Rational(1, 8), 11}};
  int good = 0;
  std::ostringstream msg;
  for (const auto& ex : cases) {
    QuasiTilingConstants c = ComputeConstants(ex.eps);
    bool ok = c.k == ex.k && static_cast<int>(c.p.size()) == ex.k &&
              static_cast<int>(c.eta.size()) == ex.k - 1 && c.delta == 1 / Pow(Rational(3), ex.k);
    for (int i = 0; ok && i < ex.k; ++i) ok = c.p[i] == ex.eps * Pow(1 - ex.eps, i);
    for (int i = 0; ok && i + 1 < ex.k; ++i) {
      ok = c.eta[i] == (1 - 2 * ex.eps) / (2 * Pow(Rational(3), ex.k - i));
    }
    if (ex.eps == Rational(1, 4)) {
      ok = ok && c.p == std::vector<Rational>{Rational(1, 4), Rational(3, 16), Rational(9, 64)} &&
           c.eta == std::vector<Rational>{Rational(1, 108), Rational(1, 36)};
    }
    if (ex.eps == Rational(1, 5)) {
      ok = ok && c.p[4] == Rational(256, 3125) && c.eta[0] == Rational(1, 810);
    }
    if (ex.eps == Rational(1, 8)) ok = ok && c.eta.back() == Rational(1, 24);
    good += ok;
    msg << "ε=" << ToString(ex.eps) << " k=" << c.k << (ok ? " ok" : " MISMATCH") << "; ";
  }
  r.pass = good == static_cast<int>(cases.size());
  r.detail = msg.str();
  return r;
}

// Independent re-check: union size by direct enumeration and budgets.
bool ReCheck(const MarkedGroup& g, const QuasiTiling& t, const Rational& eps) {
  std::vector<Elem> covered;
  for (size_t i = 0; i < t.shapes.size(); ++i) {
    const Rational budget = t.p[i] * static_cast<int64_t>(t.a.size());
    if (Rational(static_cast<int64_t>(t.shapes[i].size() * t.centers[i].size())) > budget) return false;
    for (const Elem& c : t.centers[i])
      for (const Elem& b : t.shapes[i]) covered.push_back(g.Mul(b, c));
  }
  ElemSet u = MakeSet(std::move(covered));
  return IsSubset(u, t.a) &&
         Rational(static_cast<int64_t>(u.size())) >= (1 - eps) * static_cast<int64_t>(t.a.size());
}

CriterionResult QuasiTilingBounds() {
  CriterionResult r = Start(7, "quasi-tiling bounds on large targets");
  const Rational outer(9, 10);
  std::ostringstream msg;
  bool all = true;
  for (int d = 1; d <= 2; ++d) {
    auto t0 = std::chrono::steady_clock::now();
    MarkedGroup g = d == 1 ? MarkedGroup::Z() : MarkedGroup::Z2();
    std::vector<ElemSet> chain = d == 1 ? std::vector<ElemSet>{IntegerInterval(0, 216), IntegerInterval(0, 2),
                                                               IntegerInterval(0, 1)}
                                        : std::vector<ElemSet>{Box2(0, 216, 0, 1), Box2(0, 2, 0, 1),
                                                               Box2(0, 1, 0, 1)};
    ElemSet a = d == 1 ? IntegerInterval(0, 100000) : Box2(0, 6000, 0, 16);
    bool ok = false;
    std::string why;
    try {
      QuasiTileResult res = QuasiTile(g, a, chain, outer);
      TilingReport rep = CheckTiling(g, res.tiling);
      ok = rep.ok() && rep.budgets_ok && ReCheck(g, res.tiling, outer);
      why = "coverage " + ToString(rep.coverage);
    } catch (const ConstraintViolation& e) {
      why = "constraint " + e.constraint();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 60;
    all = all && ok;
    msg << g.name() << " |A|=" << a.size() << " " << why << (ok ? " ok" : " FAIL") << "; ";
  }
  r.pass = all;
  r.detail = msg.str() + "outer ε = 9/10";
  return r;
}

CriterionResult GreedyCovering() {
  CriterionResult r = Start(8, "covering lemma for greedy translates");
  int64_t good = 0;
  const int64_t total = 200;
  for (int64_t i = 0; i < total; ++i) {
    std::mt19937_64 rng(30000 + i);
    const bool z2 = Draw(rng, 2);
    MarkedGroup g = z2 ? MarkedGroup::Z2() : MarkedGroup::Z();
    ElemSet a, b;
    if (z2) {
      int64_t w = 5 + Draw(rng, 30), h = 5 + Draw(rng, 30);
      a = Box2(0, w, 0, h);
      int64_t bx = 1 + Draw(rng, 3), by = 1 + Draw(rng, 3);
      int64_t ox = Draw(rng, bx), oy = Draw(rng, by);
      b = Box2(-ox, bx - ox, -oy, by - oy);
    } else {
      int64_t len = 20 + Draw(rng, 380);
      a = IntegerInterval(0, len);
      int64_t bl = 1 + Draw(rng, 12), off = Draw(rng, bl);
      b = IntegerInterval(-off, bl - off);
    }
    const Rational eps(static_cast<int64_t>(1 + Draw(rng, 9)), 10);
    const Rational delta = InvarianceDefect(g, a, b);
    TranslateFamily fam = GreedyDisjointTranslates(g, a, b, eps, delta, nullptr);
    std::vector<Elem> bc;
    for (const Elem& c : fam.centers)
      for (const Elem& x : b) bc.push_back(g.Mul(x, c));
    ElemSet u = MakeSet(std::move(bc));
    if (Rational(static_cast<int64_t>(u.size())) >= eps * (1 - delta) * static_cast<int64_t>(a.size())) ++good;
  }
  r.pass = good == total;
  r.detail = Count(good, total) + " greedy families with |BC| ≥ ε(1−δ)|A|";
  return r;
}

bool HasEntry(const ConstraintLedger& led, const std::string& prefix, const std::string& suffix) {
  for (const auto& e : led.entries()) {
    if (e.name.rfind(prefix, 0) == 0 && e.name.find(suffix) != std::string::npos) return true;
  }
  return false;
}

CriterionResult TowerBounds() {
  CriterionResult r = Start(9, "tower partition, disjointness, agreement and action bounds");
  MarkedGroup g = MarkedGroup::Z();
  std::vector<Rational> eps = {Rational(1, 16), Rational(1, 32), Rational(1, 64), Rational(1, 128)};
  TilingHierarchy h = BuildHierarchy(g, eps, 4);
  Tower t = BuildTower(g, h, 4);
  bool present = true;
  for (int n = 0; n <= 4; ++n) {
    std::string s = "stage-" + std::to_string(n) + "/";
    present = present && HasEntry(t.ledger, s, "partition") && HasEntry(t.ledger, s, "disjoint");
  }
  int64_t agreements = 0, actions = 0;
  for (const auto& rep : t.reports) {
    for (const auto& a : rep.agreement) agreements += a.hypothesis;
    for (const auto& a : rep.action) actions += a.hypothesis;
  }
  present = present && HasEntry(t.ledger, "report-3-4/", "agreement") &&
            HasEntry(t.ledger, "report-3-4/", "action");
  r.pass = present && t.ledger.all_pass();
  r.detail = std::to_string(t.ledger.entries().size()) + " exact ledger entries, " +
             std::to_string(agreements) + " agreement and " + std::to_string(actions) +
             " action bounds under their hypotheses, " +
             (t.ledger.all_pass() ? std::string("all pass") : "failed: " + t.ledger.failures().front());
  return r;
}

CriterionResult ChoiceWindow() {
  CriterionResult r = Start(10, "windowed choice-sequence link");
  ChoiceSequenceLink link(FinEqrel::Identity(6), FinEqrel::Full(6), 600);
  WindowedLinkReport rep = link.Verify();
  r.pass = rep.ok() && rep.violations == 0 && rep.verified_exact > 0;
  r.detail = std::to_string(rep.verified_exact) + " complete link classes with all-ones incidence, " +
             std::to_string(rep.violations) + " violations";
  return r;
}

CriterionResult MicroOracle() {
  CriterionResult r = Start(11, "exhaustive micro-oracle");
  FinEqrel e = FinEqrel::FromClasses(6, {{0, 1}, {2, 3}, {4, 5}});
  FinEqrel f = FinEqrel::Full(6);
  size_t brute = EnumerateLinks(e, f).size();
  uint64_t counted = CountLinks(e, f);
  r.pass = brute == 4 && counted == 4;
  r.detail = "brute force " + std::to_string(brute) + ", counter " + std::to_string(counted);
  return r;
}

// Wall-clock limits stated by the criteria.
double TimeLimit(int id) {
  switch (id) {
    case 1: return 10;
    case 9: return 120;
    default: return 0;
  }
}

}  // namespace

CriterionResult RunCriterion(int id) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = LinkSoundness(); break;
      case 2: r = LinkOracle(); break;
      case 3: r = LinkExtension(); break;
      case 4: r = LiftAxioms(); break;
      case 5: r = Cancellation(); break;
      case 6: r = Constants(); break;
      case 7: r = QuasiTilingBounds(); break;
      case 8: r = GreedyCovering(); break;
      case 9: r = TowerBounds(); break;
      case 10: r = ChoiceWindow(); break;
      case 11: r = MicroOracle(); break;
      default: throw InputError("no criterion " + std::to_string(id));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    r.id = id;
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (double limit = TimeLimit(id); limit > 0 && r.seconds >= limit) {
    r.pass = false;
    r.detail += "; over the " + std::to_string(static_cast<int>(limit)) + " s limit";
  }
  return r;
}

std::vector<CriterionResult> RunSuite(const std::vector<int>& only,
                                      const std::function<void(const CriterionResult&)>& sink) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= kNumCriteria; ++i) ids.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(RunCriterion(id));
    if (sink) sink(out.back());
  }
  return out;
}

std::string FormatResult(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " " << r.title << " ("
    << r.detail << ") [" << r.seconds << " s]";
  return s.str();
}

}  // namespace quotlift::cli
