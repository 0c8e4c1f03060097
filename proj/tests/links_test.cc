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

#include <random>

#include "gtest/gtest.h"
#include "quotlift/automorphism.h"
#include "quotlift/choice_sequence.h"
#include "quotlift/equidecompose.h"
#include "quotlift/errors.h"
#include "quotlift/lift.h"
#include "quotlift/link_oracle.h"
#include "test_util.h"

namespace quotlift {
namespace {

// The standard 6-point instance: three pairs inside one class.
FinEqrel Pairs6() { return FinEqrel::FromClasses(6, {{0, 1}, {2, 3}, {4, 5}}); }
Perm Rot6() { return PermFromCycles(6, {{0, 2, 4}, {1, 3, 5}}); }

// Oracle for the link property straight from the definition.
bool IsLinkByCounting(const FinEqrel& e, const FinEqrel& f, const FinEqrel& l) {
  for (int x = 0; x < e.size(); ++x)
    for (int y = 0; y < e.size(); ++y) {
      if (!f.Related(x, y)) continue;
      int meet = 0;
      for (int z = 0; z < e.size(); ++z) meet += e.Related(z, x) && l.Related(z, y);
      if (meet != 1) return false;
    }
  return l.IsSubrelationOf(f);
}

TEST(VerifyLinkTest, Examples) {
  FinEqrel e = Pairs6(), f = FinEqrel::Full(6);
  EXPECT_TRUE(VerifyLink(e, f, FinEqrel::FromClasses(6, {{0, 2, 4}, {1, 3, 5}})).ok);
  EXPECT_TRUE(VerifyLink(e, e, FinEqrel::Identity(6)).ok);

  LinkVerification bad = VerifyLink(e, f, FinEqrel::FromClasses(6, {{0, 2}, {1, 3, 4, 5}}));
  ASSERT_FALSE(bad.ok);
  ASSERT_TRUE(bad.counterexample.has_value());
  EXPECT_EQ(bad.counterexample->e_class, (std::vector<int>{4, 5}));
  EXPECT_EQ(bad.counterexample->l_class, (std::vector<int>{1, 3, 4, 5}));
  EXPECT_EQ(bad.counterexample->count, 2);

  EXPECT_THROW(VerifyLink(f, e, e), PreconditionError);
}

TEST(MaxFsrTest, Examples) {
  FinEqrel e = Pairs6(), f = FinEqrel::Full(6);
  PointSet all{0, 1, 2, 3, 4, 5};
  Fsr t = MaxTransversalFsr(e, f, all);
  ASSERT_EQ(t.classes.size(), 2u);
  EXPECT_EQ(t.classes[0], (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(t.classes[1], (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(t.domain, all);

  FinitePredicate singleton = [](std::span<const int> s) { return s.size() == 1; };
  Fsr s = MaxFsr(e, singleton);
  EXPECT_EQ(s.domain, all);
  EXPECT_TRUE(IsPhiMaximal(e, singleton, s));

  FinitePredicate never = [](std::span<const int>) { return false; };
  Fsr none = MaxFsr(e, never);
  EXPECT_TRUE(none.domain.empty());
  EXPECT_TRUE(IsPhiMaximal(e, never, none));
}

TEST(MaxFsrTest, TransversalShortcutMatchesGreedy) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::Uniform(rng, 1, 9);
    FinEqrel fine = testing::RandomEqrel(rng, n, 5);
    FinEqrel coarse = Join(fine, testing::RandomEqrel(rng, n, 2));
    PointSet allowed = testing::RandomSubset(rng, n);
    Fsr fast = MaxTransversalFsr(fine, coarse, allowed);
    Fsr slow = GreedyFsr(TransversalCandidates(fine, coarse, allowed));
    ASSERT_EQ(fast.classes, slow.classes);
  }
}

TEST(LinkFiniteIndexTest, Examples) {
  FinEqrel e = Pairs6(), f = FinEqrel::Full(6);
  FinEqrel l = LinkFiniteIndex(e, f, {Rot6()});
  EXPECT_EQ(l.num_classes(), 2);
  for (const auto& c : l.classes()) EXPECT_EQ(c.size(), 3u);
  EXPECT_TRUE(VerifyLink(e, f, l).ok);

  EXPECT_EQ(LinkFiniteIndex(e, e, {IdentityPerm(6)}), FinEqrel::Identity(6));

  FinEqrel e8 = FinEqrel::FromClasses(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  FinEqrel f8 = FinEqrel::FromClasses(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  FinEqrel l8 = LinkFiniteIndex(e8, f8, {PermFromCycles(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}})});
  EXPECT_TRUE(VerifyLink(e8, f8, l8).ok);
  EXPECT_EQ(l8.num_classes(), 4);

  try {
    LinkFiniteIndex(e, f, {PermFromCycles(6, {{0, 2}})});
    FAIL() << "bad witness accepted";
  } catch (const PreconditionError& err) {
    EXPECT_NE(std::string(err.what()).find("generator 0"), std::string::npos) << err.what();
  }
}

TEST(LinkFiniteIndexTest, AgreesWithDefinitionOnRandomInstances) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::Uniform(rng, 2, 10);
    FinEqrel e = testing::RandomEqrel(rng, n, n);
    std::vector<Perm> auts = n <= 8 ? EnumerateAutomorphisms(e) : std::vector<Perm>{IdentityPerm(n)};
    std::vector<Perm> gens{auts[testing::Uniform(rng, 0, static_cast<int>(auts.size()) - 1)]};
    FinEqrel f = ExtendByGroup(e, gens).extended;
    FinEqrel l = LinkFiniteIndex(e, f, gens);
    ASSERT_TRUE(IsLinkByCounting(e, f, l));
  }
}

TEST(LinkOracleTest, CountsOnStandardInstance) {
  FinEqrel e = Pairs6(), f = FinEqrel::Full(6);
  std::vector<FinEqrel> links = EnumerateLinks(e, f);
  EXPECT_EQ(links.size(), 4u);
  EXPECT_EQ(CountLinks(e, f), 4u);
  for (const auto& l : links) EXPECT_TRUE(IsLinkByCounting(e, f, l));
}

TEST(LinkOracleTest, CounterMatchesEnumerator) {
  for (const auto& inst : ExhaustiveOracleInstances(7)) {
    ASSERT_EQ(CountLinks(inst.e, inst.f), EnumerateLinks(inst.e, inst.f).size());
  }
}

TEST(LinkOracleTest, ConstructedLinkIsEnumeratedUpToTen) {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // [F:E] ≤ 3 with equal class sizes, so a rotation witnesses normality.
    const int size = testing::Uniform(rng, 1, 3);
    const int index = testing::Uniform(rng, 1, 3);
    const int blocks = std::max(1, 10 / (size * index) > 1 ? testing::Uniform(rng, 1, 10 / (size * index)) : 1);
    const int n = size * index * blocks;
    if (n > 10) continue;
    std::vector<int> labels(n);
    Perm rot(n);
    std::vector<int> coarse(n);
    for (int x = 0; x < n; ++x) {
      const int b = x / (size * index), c = (x / size) % index, k = x % size;
      labels[x] = x / size;
      coarse[x] = b;
      rot[x] = b * size * index + ((c + 1) % index) * size + k;
    }
    FinEqrel e = FinEqrel::FromLabels(labels), f = FinEqrel::FromLabels(coarse);
    FinEqrel l = LinkFiniteIndex(e, f, {rot});
    std::vector<FinEqrel> all = EnumerateLinks(e, f);
    ASSERT_FALSE(all.empty());
    ASSERT_NE(std::find(all.begin(), all.end(), l), all.end());
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(ExtendLinkTest, Examples) {
  FinEqrel d4 = FinEqrel::Identity(4);
  FinEqrel f = FinEqrel::FromClasses(4, {{0, 1}, {2, 3}});
  FinEqrel lp = ExtendLink(d4, f, FinEqrel::Full(4), f, {PermFromCycles(4, {{0, 1, 2, 3}})});
  EXPECT_EQ(lp, FinEqrel::Full(4));

  // 12 points, four E-classes of size 3, [F:E] = 2 and [F':F] = 2.
  FinEqrel e = FinEqrel::FromClasses(12, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}});
  FinEqrel f12 = FinEqrel::FromClasses(12, {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}});
  Perm swap(12), shift(12);
  for (int x = 0; x < 12; ++x) {
    swap[x] = (x / 3) % 2 == 0 ? x + 3 : x - 3;
    shift[x] = (x + 3) % 12;
  }
  FinEqrel l = LinkFiniteIndex(e, f12, {swap});
  FinEqrel l12 = ExtendLink(e, f12, FinEqrel::Full(12), l, {shift});
  EXPECT_TRUE(VerifyLink(e, FinEqrel::Full(12), l12).ok);
  EXPECT_TRUE(l.IsSubrelationOf(l12));

  EXPECT_EQ(ExtendLink(e, f12, f12, l, {swap}), l);
}

TEST(FiniteOuterSubgroupTest, Examples) {
  FinEqrel e = FinEqrel::FromClasses(4, {{0, 1}, {2, 3}});
  OuterSubgroup g = FiniteOuterSubgroup(
      e, FinEqrel::Full(4), {PermFromCycles(4, {{0, 2}, {1, 3}}), PermFromCycles(4, {{0, 3}, {1, 2}})});
  EXPECT_EQ(g.class_maps.size(), 2u);
  EXPECT_EQ(ExtendByGroup(e, g.representatives).extended, FinEqrel::Full(4));

  OuterSubgroup trivial = FiniteOuterSubgroup(e, e, {PermFromCycles(4, {{0, 1}})});
  EXPECT_EQ(trivial.class_maps.size(), 1u);

  FinEqrel e6 = Pairs6();
  OuterSubgroup three = FiniteOuterSubgroup(e6, FinEqrel::Full(6), {Rot6(), PermFromCycles(6, {{0, 2}, {1, 3}})});
  EXPECT_EQ(6u % three.class_maps.size(), 0u);
  EXPECT_EQ(ExtendByGroup(e6, three.representatives).extended, FinEqrel::Full(6));
}

TEST(LinkSmoothTest, Examples) {
  FinEqrel e = FinEqrel::FromClasses(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(LinkSmooth(e, FinEqrel::Full(4)), FinEqrel::FromClasses(4, {{0, 2}, {1, 3}}));
  FinEqrel f = FinEqrel::FromClasses(5, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(LinkSmooth(FinEqrel::Identity(5), f), f);
  FinEqrel e9 = FinEqrel::FromClasses(9, {{0, 4, 8}, {1, 2, 3}, {5, 6, 7}});
  FinEqrel l9 = LinkSmooth(e9, FinEqrel::Full(9));
  EXPECT_EQ(l9.num_classes(), 3);
  EXPECT_TRUE(VerifyLink(e9, FinEqrel::Full(9), l9).ok);
  EXPECT_THROW(LinkSmooth(FinEqrel::FromClasses(3, {{0, 1}, {2}}), FinEqrel::Full(3)), PreconditionError);
}

TEST(HfLinkTest, Examples) {
  FinEqrel e = Pairs6(), f = FinEqrel::Full(6);
  EXPECT_EQ(HfLink(e, {f}, {Rot6()}).link, LinkFiniteIndex(e, f, {Rot6()}));

  FinEqrel d8 = FinEqrel::Identity(8);
  std::vector<FinEqrel> chain = {FinEqrel::FromClasses(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}),
                                 FinEqrel::FromClasses(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                                 FinEqrel::Full(8)};
  HfLinkResult r = HfLink(d8, chain, {PermFromCycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
  ASSERT_EQ(r.links.size(), 3u);
  for (size_t j = 0; j < chain.size(); ++j) {
    EXPECT_TRUE(VerifyLink(d8, chain[j], r.links[j]).ok);
    if (j > 0) {
      EXPECT_TRUE(r.links[j - 1].IsSubrelationOf(r.links[j]));
    }
  }
  EXPECT_EQ(HfLink(e, {e, e}, {IdentityPerm(6)}).link, FinEqrel::Identity(6));
}

TEST(LiftFromLinkTest, Examples) {
  FinEqrel e = FinEqrel::FromClasses(4, {{0, 1}, {2, 3}});
  OuterAction swap = OuterAction::FromClassPermutations(2, {{1, 0}});
  GroupAction a = LiftFromLink(e, swap, FinEqrel::FromClasses(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(a.ActionOf(a.group().generators()[0]), PermFromCycles(4, {{0, 2}, {1, 3}}));

  OuterAction trivial = OuterAction::FromClassPermutations(2, {{0, 1}});
  GroupAction t = LiftFromLink(e, trivial, FinEqrel::Identity(4));
  for (const Perm& p : t.actions()) EXPECT_TRUE(IsIdentity(p));

  OuterAction cycle = OuterAction::FromClassPermutations(3, {{1, 2, 0}});
  GroupAction c = LiftFromLink(Pairs6(), cycle, FinEqrel::FromClasses(6, {{0, 2, 4}, {1, 3, 5}}));
  EXPECT_EQ(c.ActionOf(c.group().generators()[0]), Rot6());

  EXPECT_THROW(LiftFromLink(e, swap, FinEqrel::FromClasses(4, {{0, 1, 2, 3}})), PreconditionError);
}

TEST(LiftFromLinkTest, AxiomsOnRandomLinks) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::Uniform(rng, 2, 8);
    FinEqrel e = testing::RandomEqrel(rng, n, n);
    std::vector<Perm> auts = EnumerateAutomorphisms(e);
    std::vector<Perm> gens{auts[testing::Uniform(rng, 0, static_cast<int>(auts.size()) - 1)]};
    FinEqrel f = ExtendByGroup(e, gens).extended;
    OuterAction outer = OuterAction::FromClassPermutations(e.num_classes(), {InducedClassMap(e, gens[0])});
    GroupAction act = LiftFromLink(e, outer, LinkFiniteIndex(e, f, gens));
    const FinGroup& g = act.group();
    for (int a = 0; a < g.order(); ++a)
      for (int x = 0; x < n; ++x) {
        ASSERT_EQ(e.class_of(act.Act(a, x)), outer.ClassPerm(a)[e.class_of(x)]);
        if (outer.ClassPerm(a)[e.class_of(x)] == e.class_of(x)) {
          ASSERT_EQ(act.Act(a, x), x);
        }
        for (int b = 0; b < g.order(); ++b) ASSERT_EQ(act.Act(g.Mul(a, b), x), act.Act(a, act.Act(b, x)));
      }
  }
}

TEST(LiftThroughFiniteNormalTest, CyclicOfOrderFour) {
  FinEqrel d4 = FinEqrel::Identity(4);
  FinGroup z4 = FinGroup::Cyclic(4);
  const int g = z4.generators()[0];
  const int g2 = z4.Mul(g, g);
  Perm target = PermFromCycles(4, {{0, 2, 1, 3}});
  OuterAction outer = OuterAction::FromGeneratorMaps(z4, 4, {target});
  GroupAction lift = LiftThroughFiniteNormal(d4, outer, {z4.identity(), g2},
                                             {IdentityPerm(4), PermFromCycles(4, {{0, 1}, {2, 3}})});
  EXPECT_EQ(lift.ActionOf(g), target);
  EXPECT_EQ(lift.ActionOf(g2), PermFromCycles(4, {{0, 1}, {2, 3}}));
}

TEST(LiftThroughFiniteNormalTest, DegenerateSubgroups) {
  FinEqrel e = Pairs6();
  OuterAction cycle = OuterAction::FromClassPermutations(3, {{1, 2, 0}});
  const FinGroup& g = cycle.group();
  // N trivial: a lift of the outer action.
  GroupAction a = LiftThroughFiniteNormal(e, cycle, {g.identity()}, {IdentityPerm(6)});
  EXPECT_TRUE(IsClassBijective(e, a));
  EXPECT_TRUE(InducesOuterAction(e, a, cycle));
  // N = G: the given action comes back.
  std::vector<int> all;
  std::vector<Perm> perms;
  for (int x = 0; x < g.order(); ++x) {
    all.push_back(x);
    perms.push_back(PermPower(Rot6(), [&] {
      for (int k = 0; k < 3; ++k)
        if (g.Power(g.generators()[0], k) == x) return k;
      return -1;
    }()));
  }
  GroupAction b = LiftThroughFiniteNormal(e, cycle, all, perms);
  for (size_t i = 0; i < all.size(); ++i) EXPECT_EQ(b.ActionOf(all[i]), perms[i]);
}

TEST(EquidecomposeTest, Examples) {
  FinEqrel e = FinEqrel::FromClasses(6, {{0, 1, 2}, {3, 4, 5}});
  auto w = Equidecompose(e, PointSet{0, 3}, PointSet{1, 4});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->source, (std::vector<int>{0, 3}));
  EXPECT_EQ(w->target, (std::vector<int>{1, 4}));
  auto id = Equidecompose(e, PointSet{2, 5}, PointSet{2, 5});
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->source, id->target);
  EXPECT_FALSE(Equidecompose(e, PointSet{0, 1}, PointSet{0, 3}).has_value());
}

TEST(EquidecomposeTest, ExistsIffCountsMatch) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = testing::Uniform(rng, 1, 12);
    FinEqrel e = testing::RandomEqrel(rng, n, 4);
    PointSet a = testing::RandomSubset(rng, n), b = testing::RandomSubset(rng, n);
    std::vector<int> ca(e.num_classes()), cb(e.num_classes());
    for (int x : a) ++ca[e.class_of(x)];
    for (int x : b) ++cb[e.class_of(x)];
    auto w = Equidecompose(e, a, b);
    ASSERT_EQ(w.has_value(), ca == cb);
    if (w) {
      ASSERT_TRUE(VerifyEquidecomposition(e, a, b, *w));
    }
    const int copies = testing::Uniform(rng, 1, 4);
    FinEqrel big = ProductWithFull(e, copies);
    ASSERT_EQ(Equidecompose(big, DisjointCopies(a, copies), DisjointCopies(b, copies)).has_value(),
              w.has_value());
  }
}

TEST(ChoiceSequenceLinkTest, IndexOneIsDiagonal) {
  FinEqrel e = FinEqrel::FromClasses(3, {{0, 1}, {2}});
  ChoiceSequenceLink link(e, e, 50);
  EXPECT_EQ(link.MaxMaps(), 1);
  WindowedLinkReport r = link.Verify();
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(link.LinkClass(LazyPoint{0, 3}).size(), 1u);
}

TEST(ChoiceSequenceLinkTest, DiagonalInsideFull) {
  ChoiceSequenceLink link(FinEqrel::Identity(6), FinEqrel::Full(6), 600);
  EXPECT_EQ(link.MaxMaps(), 6);
  WindowedLinkReport r = link.Verify();
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.verified_exact, 0);
  EXPECT_EQ(r.violations, 0);
}

TEST(ChoiceSequenceLinkTest, IndexTwoOnFourPoints) {
  FinEqrel e = FinEqrel::FromClasses(4, {{0, 1}, {2, 3}});
  ChoiceSequenceLink link(e, FinEqrel::Full(4), 400);
  for (int x = 0; x < 4; ++x) EXPECT_EQ(link.NumMaps(x), 2);
  WindowedLinkReport r = link.Verify();
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.verified_exact, 0);
  std::vector<LazyPoint> cls = link.LinkClass(LazyPoint{0, 0});
  EXPECT_EQ(cls.size(), 2u);
  EXPECT_NE(e.class_of(cls[0].base), e.class_of(cls[1].base));
}

TEST(ChoiceSequenceLinkTest, PairingIsBijective) {
  for (int64_t z = 0; z < 2000; ++z) {
    auto [a, b] = CantorUnpair(z);
    ASSERT_EQ(CantorPair(a, b), z);
  }
}

}  // namespace
}  // namespace quotlift
