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

#include "quotlift/eqrel.h"

#include <random>

#include "gtest/gtest.h"
#include "quotlift/errors.h"
#include "quotlift/lazy_space.h"
#include "test_util.h"

namespace quotlift {
namespace {

using testing::Graph;
using testing::RandomEqrel;
using testing::RandomSubset;

TEST(FinEqrelTest, BuildsPartition) {
  FinEqrel e = FinEqrel::FromClasses(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(e.num_classes(), 2);
  EXPECT_TRUE(e.Related(0, 1));
  EXPECT_FALSE(e.Related(1, 2));
  EXPECT_EQ(FinEqrel::FromClasses(3, {{0}, {1}, {2}}), FinEqrel::Identity(3));
}

TEST(FinEqrelTest, ClassIdsFollowMinimumElement) {
  FinEqrel e = FinEqrel::FromClasses(5, {{4, 3}, {2, 0}, {1}});
  EXPECT_EQ(e.class_of(0), 0);
  EXPECT_EQ(e.class_of(1), 1);
  EXPECT_EQ(e.class_of(3), 2);
}

TEST(FinEqrelTest, RejectsOverlapGapAndRange) {
  try {
    FinEqrel::FromClasses(4, {{0, 1}, {1, 2}, {3}});
    FAIL() << "overlap accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("point 1 in two classes"), std::string::npos);
  }
  EXPECT_THROW(FinEqrel::FromClasses(4, {{0, 1}, {2}}), InputError);
  EXPECT_THROW(FinEqrel::FromClasses(3, {{0, 1}, {2, 3}}), InputError);
  EXPECT_THROW(FinEqrel::FromClasses(3, {{0, 1, 2}, {}}), InputError);
}

TEST(JoinTest, Examples) {
  FinEqrel e = FinEqrel::FromClasses(4, {{0, 1}, {2, 3}});
  FinEqrel f = FinEqrel::FromClasses(4, {{1, 2}, {0}, {3}});
  EXPECT_EQ(Join(e, f), FinEqrel::Full(4));
  EXPECT_EQ(Join(e, FinEqrel::Identity(4)), e);
  EXPECT_EQ(Join(e, e), e);
  EXPECT_THROW(Join(e, FinEqrel::Identity(5)), InputError);
}

TEST(JoinTest, LatticeLawsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = testing::Uniform(rng, 1, 12);
    FinEqrel a = RandomEqrel(rng, n, 4), b = RandomEqrel(rng, n, 4), c = RandomEqrel(rng, n, 4);
    ASSERT_EQ(Join(Join(a, b), c), Join(a, Join(b, c)));
    ASSERT_EQ(Join(a, b), Join(b, a));
    ASSERT_EQ(Join(a, a), a);
    ASSERT_TRUE(a.IsSubrelationOf(Join(a, b)));
    // Oracle: closure of the union of both graphs.
    std::vector<std::pair<int, int>> edges;
    for (auto p : Graph(a)) edges.push_back(p);
    for (auto p : Graph(b)) edges.push_back(p);
    ASSERT_EQ(Join(a, b), FinEqrel::FromLabels(testing::ClosureLabels(n, edges)));
    ASSERT_EQ(Graph(Meet(a, b)).size(), [&] {
      size_t k = 0;
      for (auto p : Graph(a)) k += b.Related(p.first, p.second);
      return k;
    }());
  }
}

TEST(SaturateTest, Examples) {
  FinEqrel e = FinEqrel::FromClasses(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(Saturate(e, PointSet{0}), (PointSet{0, 1}));
  EXPECT_TRUE(Saturate(e, PointSet{}).empty());
  EXPECT_EQ(Saturate(e, PointSet{1, 2}), (PointSet{0, 1, 2, 3}));
  EXPECT_EQ(Hull(e, PointSet{0, 1, 2}), (PointSet{0, 1}));
  EXPECT_THROW(Saturate(e, PointSet{4}), InputError);
}

TEST(SaturateTest, IsClosureOperator) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = testing::Uniform(rng, 1, 12);
    FinEqrel e = RandomEqrel(rng, n, 5);
    PointSet a = RandomSubset(rng, n), b = RandomSubset(rng, n);
    PointSet ab;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
    PointSet sa = Saturate(e, a), sab = Saturate(e, ab);
    ASSERT_TRUE(std::includes(sa.begin(), sa.end(), a.begin(), a.end()));
    ASSERT_TRUE(std::includes(sab.begin(), sab.end(), sa.begin(), sa.end()));
    ASSERT_EQ(Saturate(e, sa), sa);
    PointSet h = Hull(e, a);
    ASSERT_TRUE(std::includes(a.begin(), a.end(), h.begin(), h.end()));
    ASSERT_EQ(Saturate(e, h), h);
  }
}

TEST(TransversalTest, Examples) {
  EXPECT_EQ(Transversal(FinEqrel::FromClasses(4, {{0, 1}, {2, 3}})), (PointSet{0, 2}));
  EXPECT_EQ(Transversal(FinEqrel::Identity(3)), (PointSet{0, 1, 2}));
  EXPECT_EQ(Transversal(FinEqrel::FromClasses(6, {{2, 5}, {0, 1, 3}, {4}})), (PointSet{0, 2, 4}));
}

TEST(TransversalTest, MeetsEveryClassOnce) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    FinEqrel e = RandomEqrel(rng, testing::Uniform(rng, 1, 12), 6);
    PointSet t = Transversal(e);
    ASSERT_EQ(static_cast<int>(t.size()), e.num_classes());
    std::vector<int> hits(e.num_classes());
    for (int x : t) ++hits[e.class_of(x)];
    for (int h : hits) ASSERT_EQ(h, 1);
  }
}

TEST(ProductWithFullTest, MultipliesClassSizes) {
  FinEqrel e = FinEqrel::FromClasses(3, {{0, 2}, {1}});
  FinEqrel p = ProductWithFull(e, 3);
  EXPECT_EQ(p.size(), 9);
  EXPECT_EQ(p.num_classes(), 2);
  EXPECT_TRUE(p.Related(0 * 3 + 1, 2 * 3 + 2));
  EXPECT_FALSE(p.Related(0, 1 * 3));
}

TEST(LazyAmplificationTest, Examples) {
  FinEqrel e = FinEqrel::FromClasses(3, {{0, 1}, {2}});
  FinEqrel f = FinEqrel::Full(3);
  LazyAmplification lazy(e, f, 10);
  EXPECT_TRUE(lazy.RelatedE({0, 5}, {1, 7}));
  EXPECT_TRUE(lazy.RelatedE({0, 5}, {0, 5}));
  EXPECT_TRUE(lazy.RelatedF({0, 1}, {2, 9}));
  EXPECT_FALSE(lazy.RelatedE({0, 1}, {2, 9}));
  EXPECT_THROW(lazy.RelatedE({0, 10}, {0, 1}), WindowError);
  EXPECT_THROW(LazyAmplification(f, e, 10), PreconditionError);
}

TEST(LazyAmplificationTest, AgreesWithBaseOnWindow) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = testing::Uniform(rng, 1, 6);
    FinEqrel e = RandomEqrel(rng, n, 4);
    FinEqrel f = Join(e, RandomEqrel(rng, n, 3));
    LazyAmplification lazy(e, f, 4);
    std::vector<LazyPoint> pts = lazy.WindowPoints();
    ASSERT_EQ(static_cast<int64_t>(pts.size()), lazy.window_size());
    for (const LazyPoint& p : pts)
      for (const LazyPoint& q : pts) {
        ASSERT_EQ(lazy.RelatedE(p, q), e.Related(p.base, q.base));
        ASSERT_EQ(lazy.RelatedF(p, q), f.Related(p.base, q.base));
      }
  }
}

}  // namespace
}  // namespace quotlift
