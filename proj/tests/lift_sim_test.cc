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

#include "quotlift/tower.h"

#include <random>

#include "gtest/gtest.h"
#include "quotlift/errors.h"
#include "quotlift/hierarchy.h"
#include "quotlift/interval.h"
#include "test_util.h"

namespace quotlift {
namespace {

Rational Q(long n, long d = 1) { return MakeRational(n, d); }

IntervalSet Set(std::vector<std::pair<Rational, Rational>> parts) {
  std::vector<Interval> v;
  for (auto& [lo, hi] : parts) v.push_back({lo, hi});
  return IntervalSet::FromIntervals(v);
}

IntervalSet RandomSet(std::mt19937_64& rng, int den) {
  std::vector<int> cuts;
  for (int k = 2 * testing::Uniform(rng, 0, 4); k > 0; --k) cuts.push_back(testing::Uniform(rng, 0, den));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.size() % 2) cuts.pop_back();
  std::vector<Interval> parts;
  for (size_t i = 0; i + 1 < cuts.size(); i += 2) parts.push_back({Q(cuts[i], den), Q(cuts[i + 1], den)});
  return IntervalSet::FromIntervals(parts);
}

TEST(IntervalSetTest, Normalizes) {
  IntervalSet s = Set({{Q(1, 2), Q(3, 4)}, {Q(0), Q(1, 4)}, {Q(1, 4), Q(1, 3)}});
  ASSERT_EQ(s.parts().size(), 2u);
  EXPECT_EQ(s.parts()[0], (Interval{Q(0), Q(1, 3)}));
  EXPECT_EQ(s.Measure(), Q(7, 12));
  EXPECT_EQ(IntervalSet::FromJson(s.ToJson()), s);
  EXPECT_EQ(Set({{Q(0), Q(1, 2)}, {Q(1, 4), Q(3, 4)}}), IntervalSet::Of(Q(0), Q(3, 4)));
  EXPECT_THROW(Set({{Q(1, 2), Q(3, 2)}}), InputError);
}

TEST(IntervalSetTest, BooleanAlgebraOnRandomSets) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    IntervalSet a = RandomSet(rng, 24), b = RandomSet(rng, 24);
    ASSERT_EQ(a.Union(b).Measure() + a.Intersect(b).Measure(), a.Measure() + b.Measure());
    ASSERT_EQ(a.Difference(b).Measure(), a.Measure() - a.Intersect(b).Measure());
    ASSERT_TRUE(a.Difference(b).Disjoint(b));
    ASSERT_TRUE(a.Union(b).Contains(a));
  }
}

TEST(SubsetOfMeasureTest, Examples) {
  EXPECT_EQ(SubsetOfMeasure(IntervalSet::Of(0, Q(1, 2)), Q(1, 3)), IntervalSet::Of(0, Q(1, 3)));
  IntervalSet two = Set({{Q(0), Q(1, 4)}, {Q(1, 2), Q(3, 4)}});
  EXPECT_EQ(SubsetOfMeasure(two, Q(3, 8)), Set({{Q(0), Q(1, 4)}, {Q(1, 2), Q(5, 8)}}));
  EXPECT_TRUE(SubsetOfMeasure(two, 0).empty());
  EXPECT_THROW(SubsetOfMeasure(two, Q(3, 4)), PreconditionError);
}

TEST(MeasureAllocatorTest, MatchesIteratedSubsetOfMeasure) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet free = RandomSet(rng, 30);
    MeasureAllocator alloc(free);
    IntervalSet rest = free;
    for (int k = 0; k < 5; ++k) {
      Rational r = rest.Measure() * Q(testing::Uniform(rng, 0, 3), 4);
      IntervalSet a = alloc.Take(r);
      IntervalSet b = SubsetOfMeasure(rest, r);
      ASSERT_EQ(a, b);
      rest = rest.Difference(b);
      ASSERT_EQ(alloc.Remaining(), rest.Measure());
    }
    EXPECT_THROW(alloc.Take(alloc.Remaining() + 1), PreconditionError);
  }
}

TEST(PartialBijectionTest, Examples) {
  auto shift = PartialBijectionBetween(IntervalSet::Of(0, Q(1, 2)), IntervalSet::Of(Q(1, 2), 1));
  ASSERT_TRUE(shift.has_value());
  EXPECT_EQ(shift->pieces(), (std::vector<Piece>{{Q(0), Q(1, 2), Q(1, 2)}}));

  auto sweep = PartialBijectionBetween(Set({{Q(0), Q(1, 4)}, {Q(3, 4), Q(1)}}), IntervalSet::Of(Q(1, 4), Q(3, 4)));
  ASSERT_TRUE(sweep.has_value());
  EXPECT_EQ(sweep->pieces(), (std::vector<Piece>{{Q(0), Q(1, 4), Q(1, 4)}, {Q(3, 4), Q(1), Q(-1, 4)}}));

  EXPECT_FALSE(PartialBijectionBetween(IntervalSet::Of(0, Q(1, 3)), IntervalSet::Of(0, Q(1, 2))).has_value());
}

TEST(IntervalMapTest, OperationsPreserveMeasure) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet a = RandomSet(rng, 24);
    // A target of equal measure elsewhere in [0, 1).
    IntervalSet b = SubsetOfMeasure(IntervalSet::Unit().Difference(RandomSet(rng, 12)).Union(a), a.Measure());
    auto m = PartialBijectionBetween(a, b);
    ASSERT_TRUE(m.has_value());
    ASSERT_EQ(m->Domain(), a);
    ASSERT_EQ(m->Image(), b);
    ASSERT_EQ(m->DomainMeasure(), a.Measure());
    ASSERT_EQ(Compose(m->Inverse(), *m), IntervalMap::Identity(a));
    IntervalSet part = RandomSet(rng, 24);
    IntervalMap r = m->Restrict(part);
    ASSERT_EQ(r.Domain(), a.Intersect(part));
    ASSERT_EQ(r.Image().Measure(), r.Domain().Measure());
    ASSERT_EQ(m->ImageOf(part).Measure(), a.Intersect(part).Measure());
    // Gluing a map with its restriction to the complement gives it back.
    IntervalMap rest = m->Restrict(IntervalSet::Unit().Difference(part));
    ASSERT_EQ(DisjointUnion(r, rest), *m);
    for (int k = 0; k < 10; ++k) {
      Rational x = Q(testing::Uniform(rng, 0, 47), 48);
      auto y = m->Apply(x);
      ASSERT_EQ(y.has_value(), a.Contains(IntervalSet::Of(x, x + Q(1, 1000))));
    }
  }
}

TEST(IntervalMapTest, GluingOverlapsFails) {
  IntervalMap a = IntervalMap::Identity(IntervalSet::Of(0, Q(1, 2)));
  IntervalMap b = IntervalMap::Identity(IntervalSet::Of(Q(1, 4), Q(3, 4)));
  EXPECT_THROW(DisjointUnion(a, b), ConstraintViolation);
  IntervalMap c = *PartialBijectionBetween(IntervalSet::Of(Q(1, 2), 1), IntervalSet::Of(0, Q(1, 2)));
  EXPECT_THROW(DisjointUnion(a, c), ConstraintViolation);
}

TEST(AgreementMeasureTest, CountsCommonBehaviour) {
  IntervalMap id = IntervalMap::Identity(IntervalSet::Unit());
  IntervalMap half = *PartialBijectionBetween(IntervalSet::Of(0, Q(1, 2)), IntervalSet::Of(Q(1, 2), 1));
  EXPECT_EQ(AgreementMeasure(id, id), 1);
  EXPECT_EQ(AgreementMeasure(id, half), 0);
  EXPECT_EQ(AgreementMeasure(id, IntervalMap::Identity(IntervalSet::Of(0, Q(1, 3)))), Q(1, 3));
}

// 𝒜_1 = {[0, 4)} tiled by singletons, 𝒜_2 = {[0, 12)} tiled by [0, 4) at
// centers {0, 3, 6}, which overlap in one point each.
TilingHierarchy HandMade() {
  MarkedGroup z = MarkedGroup::Z();
  TilingHierarchy h;
  h.eps = {Q(1, 4), Q(1, 4)};
  HierarchyLevel l0, l1, l2;
  l0.family = {MakeSet({z.Identity()})};
  l0.p = {1};
  l1.family = {IntegerInterval(0, 4)};
  l1.p = {1};
  l1.tilings = {QuasiTiling{IntegerInterval(0, 4), {l0.family[0]}, {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}}, {}, Q(1, 4), {1}}};
  l2.family = {IntegerInterval(0, 12)};
  l2.p = {1};
  l2.tilings = {QuasiTiling{IntegerInterval(0, 12), {l1.family[0]}, {{{0, 0}, {3, 0}, {6, 0}}}, {}, Q(1, 4), {1}}};
  h.levels = {l0, l1, l2};
  return h;
}

TEST(TowerTest, StageZeroIsIdentity) {
  Tower t = BuildTower(MarkedGroup::Z(), HandMade(), 0);
  ASSERT_EQ(t.stages.size(), 1u);
  const TowerTile& tile = t.stages[0].tiles[0];
  EXPECT_EQ(tile.base, IntervalSet::Unit());
  EXPECT_TRUE(tile.lifts[0].IsIdentity());
  EXPECT_TRUE(t.ledger.all_pass());
}

TEST(TowerTest, FourElementTile) {
  MarkedGroup z = MarkedGroup::Z();
  Tower t = BuildTower(z, HandMade(), 1);
  const TowerTile& tile = t.stages[1].tiles[0];
  EXPECT_EQ(tile.base.Measure(), Q(1, 4));
  IntervalSet images;
  for (const IntervalMap& m : tile.lifts) {
    ASSERT_TRUE(images.Disjoint(m.Image()));
    images = images.Union(m.Image());
  }
  EXPECT_EQ(images, IntervalSet::Unit());
  EXPECT_TRUE(t.ledger.all_pass());
}

TEST(TowerTest, OverlappingCentersLeaveLeftovers) {
  MarkedGroup z = MarkedGroup::Z();
  Tower t = BuildTower(z, HandMade(), 2);
  EXPECT_TRUE(t.ledger.all_pass()) << (t.ledger.all_pass() ? "" : t.ledger.failures().front());
  const TowerStage& s = t.stages[2];
  const TowerTile& tile = s.tiles[0];
  EXPECT_EQ(tile.base.Measure(), Q(1, 12));
  EXPECT_EQ(tile.base_shape, 0);
  // X_A sits inside X_B for the base tile B = [0, 4).
  EXPECT_TRUE(t.stages[1].tiles[0].base.Contains(tile.base));
  // Leftovers 10 and 11 still get lifts with domain X_A.
  ASSERT_EQ(tile.lifts.size(), 12u);
  for (const IntervalMap& m : tile.lifts) EXPECT_EQ(m.Domain(), tile.base);
  // Center 0 keeps point 3, so B·3 keeps 4, 5, 6. Those lifts factor as
  // φ^1_h ψ_3, hence φ_{3+h} = φ^1_h (φ^1_1)^{-1} φ_4.
  const std::vector<IntervalMap>& inner = t.stages[1].tiles[0].lifts;
  const IntervalMap psi3 = Compose(inner[1].Inverse(), tile.lifts[4]);
  EXPECT_EQ(psi3.Domain(), tile.base);
  EXPECT_TRUE(t.stages[1].tiles[0].base.Contains(psi3.Image()));
  for (int h = 1; h < 4; ++h) {
    EXPECT_EQ(tile.lifts[3 + h], Compose(inner[h], psi3));
  }
  // Condition (iv) for g = 1, h = 1 on X_A: φ_2 = φ_1 φ_1 wherever defined.
  IntervalMap one = s.GlobalLift(z, {1, 0});
  EXPECT_EQ(Compose(one, tile.lifts[1]), tile.lifts[2]);
}

TEST(TowerTest, TwoStagesOnIntegers) {
  MarkedGroup z = MarkedGroup::Z();
  TilingHierarchy h = BuildHierarchy(z, {Q(1, 8), Q(1, 16)}, 2);
  Tower t = BuildTower(z, h, 2);
  EXPECT_TRUE(t.ledger.all_pass());
  for (const TowerStage& s : t.stages) {
    Rational total = 0;
    for (const TowerTile& tile : s.tiles) total += tile.base.Measure() * static_cast<int64_t>(tile.shape.size());
    EXPECT_EQ(total, 1);
  }
  StageReport id = StageReportFor(z, t, 1, 2, z.Identity(), z.Identity());
  ASSERT_EQ(id.agreement.size(), 1u);
  EXPECT_EQ(id.agreement[0].disagree, 0);
  EXPECT_EQ(id.agreement[0].agree, id.agreement[0].common);
  ASSERT_EQ(id.action.size(), 1u);
  EXPECT_EQ(id.action[0].defect, 0);
}

TEST(TowerTest, AgreementBoundUnderHypothesis) {
  MarkedGroup z = MarkedGroup::Z();
  std::vector<Rational> eps = {Q(1, 16), Q(1, 32), Q(1, 64)};
  TilingHierarchy h = BuildHierarchy(z, eps, 3);
  Tower t = BuildTower(z, h, 3);
  EXPECT_TRUE(t.ledger.all_pass());
  // 1 lies in the level-1 box, so the bound applies between stages 2 and 3.
  StageReport r = StageReportFor(z, t, 2, 3, {1, 0}, {1, 0});
  ASSERT_EQ(r.agreement.size(), 1u);
  EXPECT_TRUE(r.agreement[0].hypothesis);
  EXPECT_EQ(r.agreement[0].bound, (1 - eps[2]) * (1 - 3 * eps[2]));
  EXPECT_GE(r.agreement[0].agree / r.agreement[0].common, r.agreement[0].bound);
  EXPECT_TRUE(r.agreement[0].pass);
  // Between stages 1 and 2 the element 1 is not yet inside a level-0 tile;
  // the value is reported without being asserted.
  StageReport early = StageReportFor(z, t, 1, 2, {1, 0}, {1, 0});
  ASSERT_EQ(early.agreement.size(), 1u);
  EXPECT_FALSE(early.agreement[0].hypothesis);
  EXPECT_TRUE(early.agreement[0].pass);
}

TEST(TowerTest, UnrepresentedElementsAreSkipped) {
  MarkedGroup z = MarkedGroup::Z();
  Tower t = BuildTower(z, HandMade(), 2);
  StageReport r = StageReportFor(z, t, 1, 2, {100, 0}, {0, 0});
  EXPECT_TRUE(r.agreement.empty());
  EXPECT_FALSE(r.skipped.empty());
}

TEST(BorelCantelliTest, ClosedFormForDefaultSequence) {
  Rational sum = 0;
  for (int n = 0; n < 40; ++n) {
    Rational eps = Pow(Q(2), -(n + 3));
    sum += BorelCantelliTerm(eps);
    ASSERT_EQ(BorelCantelliTerm(eps), 4 * eps - 3 * eps * eps);
    // Remaining tail 2^{−N} − 4^{−N−2} with N = n + 1.
    ASSERT_EQ(sum + Pow(Q(2), -(n + 1)) - Pow(Q(4), -(n + 3)), Q(15, 16));
  }
}

TEST(BorelCantelliTest, TowerRecordsTail) {
  MarkedGroup z = MarkedGroup::Z();
  std::vector<Rational> eps = {Q(1, 8), Q(1, 16)};
  Tower t = BuildTower(z, BuildHierarchy(z, eps, 2), 2);
  ASSERT_TRUE(t.tail_rest.has_value());
  EXPECT_EQ(t.tail_prefix + *t.tail_rest, Q(15, 16));
}

}  // namespace
}  // namespace quotlift
