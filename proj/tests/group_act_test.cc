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

#include <array>
#include <random>

#include "gtest/gtest.h"
#include "quotlift/automorphism.h"
#include "quotlift/errors.h"
#include "quotlift/group.h"
#include "quotlift/instance_io.h"
#include "test_util.h"

namespace quotlift {
namespace {

FinEqrel TwoPairs() { return FinEqrel::FromClasses(4, {{0, 1}, {2, 3}}); }

TEST(OrbitEqrelTest, Examples) {
  EXPECT_EQ(OrbitEqrelOfGenerators(6, {PermFromCycles(6, {{0, 1, 2}})}),
            FinEqrel::FromClasses(6, {{0, 1, 2}, {3}, {4}, {5}}));
  EXPECT_EQ(OrbitEqrelOfGenerators(5, {IdentityPerm(5)}), FinEqrel::Identity(5));
  EXPECT_EQ(OrbitEqrelOfGenerators(4, {PermFromCycles(4, {{0, 1}}), PermFromCycles(4, {{2, 3}})}),
            TwoPairs());
}

TEST(OrbitEqrelTest, MatchesGeneratorClosure) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::Uniform(rng, 1, 9);
    std::vector<Perm> gens;
    std::vector<std::pair<int, int>> edges;
    for (int k = testing::Uniform(rng, 1, 2); k > 0; --k) {
      // Sparse permutations so that orbits stay varied.
      Perm p = IdentityPerm(n);
      int a = testing::Uniform(rng, 0, n - 1), b = testing::Uniform(rng, 0, n - 1);
      std::swap(p[a], p[b]);
      gens.push_back(p);
      for (int x = 0; x < n; ++x) edges.push_back({x, p[x]});
    }
    FinEqrel orbits = OrbitEqrel(GroupAction::FromGenerators(gens, n));
    ASSERT_EQ(orbits, FinEqrel::FromLabels(testing::ClosureLabels(n, edges)));
  }
}

TEST(FinGroupTest, CyclicAndPermutationGroups) {
  FinGroup c4 = FinGroup::Cyclic(4);
  EXPECT_EQ(c4.order(), 4);
  EXPECT_EQ(c4.Power(c4.generators()[0], 4), c4.identity());
  FinGroup s3 = FinGroup::FromPermutations({PermFromCycles(3, {{0, 1}}), PermFromCycles(3, {{0, 1, 2}})}, 3);
  EXPECT_EQ(s3.order(), 6);
  for (int a = 0; a < s3.order(); ++a) {
    EXPECT_EQ(s3.Mul(a, s3.Inverse(a)), s3.identity());
    for (int b = 0; b < s3.order(); ++b) {
      EXPECT_EQ(s3.AsPermutation(s3.Mul(a, b)), Compose(s3.AsPermutation(a), s3.AsPermutation(b)));
    }
  }
  EXPECT_EQ(s3.shortlex_order().front(), s3.identity());
}

TEST(FinGroupTest, RejectsBadTables) {
  EXPECT_THROW(FinGroup::FromTable({{0, 1}, {0, 1}}), InputError);
  EXPECT_THROW(FinGroup::FromTable({{0, 1, 2}, {1, 2, 0}}), InputError);
  // A Latin square without associativity.
  EXPECT_THROW(FinGroup::FromTable({{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}}),
               InputError);
}

TEST(GroupJsonTest, RoundTrip) {
  FinGroup c3 = FinGroup::Cyclic(3);
  FinGroup back = GroupFromJson(GroupToJson(c3));
  EXPECT_EQ(back.order(), 3);
  FinGroup v4 = FinGroup::FromPermutations({PermFromCycles(4, {{0, 2}, {1, 3}}), PermFromCycles(4, {{0, 3}, {1, 2}})}, 4);
  EXPECT_EQ(GroupFromJson(GroupToJson(v4)).order(), 4);
}

TEST(ClassifyAutomorphismTest, Examples) {
  FinEqrel e = TwoPairs();
  EXPECT_EQ(ClassifyAutomorphism(e, PermFromCycles(4, {{0, 1}})).verdict, AutVerdict::kInner);
  AutClassification outer = ClassifyAutomorphism(e, PermFromCycles(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(outer.verdict, AutVerdict::kOuterNontrivial);
  EXPECT_EQ(outer.class_map, (std::vector<int>{1, 0}));
  AutClassification bad = ClassifyAutomorphism(e, PermFromCycles(4, {{0, 2}}));
  EXPECT_EQ(bad.verdict, AutVerdict::kNotAutomorphism);
  ASSERT_TRUE(bad.broken_pair.has_value());
}

TEST(ClassifyAutomorphismTest, CountsOverSymmetricGroup) {
  FinEqrel e = TwoPairs();
  Perm p = IdentityPerm(4);
  std::array<int, 3> counts{};
  do {
    // Oracle from the definitions.
    bool aut = true, inner = true;
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) aut = aut && (e.Related(x, y) == e.Related(p[x], p[y]));
      inner = inner && e.Related(x, p[x]);
    }
    const int expected = !aut ? 0 : inner ? 1 : 2;
    const AutVerdict v = ClassifyAutomorphism(e, p).verdict;
    const int got = v == AutVerdict::kNotAutomorphism ? 0 : v == AutVerdict::kInner ? 1 : 2;
    ASSERT_EQ(got, expected);
    ++counts[got];
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_EQ(counts, (std::array<int, 3>{16, 4, 4}));
}

TEST(ExtendByGroupTest, Examples) {
  FinEqrel e = TwoPairs();
  ExtensionResult swap = ExtendByGroup(e, {PermFromCycles(4, {{0, 2}, {1, 3}})});
  EXPECT_EQ(swap.extended, FinEqrel::Full(4));
  EXPECT_TRUE(swap.normal);
  ExtensionResult id = ExtendByGroup(e, {IdentityPerm(4)});
  EXPECT_EQ(id.extended, e);
  EXPECT_TRUE(id.normal);
  ExtensionResult broken = ExtendByGroup(e, {PermFromCycles(4, {{0, 2}})});
  EXPECT_EQ(broken.extended, FinEqrel::Full(4));
  EXPECT_FALSE(broken.normal);
  EXPECT_EQ(broken.failing_generator, 0);
  EXPECT_THROW(ExtendByGroup(e, {{0, 0, 1, 2}}), InputError);
}

TEST(ExtendByGroupTest, IsLeastClosedRelation) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::Uniform(rng, 1, 9);
    FinEqrel e = testing::RandomEqrel(rng, n, 4);
    std::vector<Perm> gens{testing::RandomPerm(rng, n)};
    FinEqrel ext = ExtendByGroup(e, gens).extended;
    ASSERT_TRUE(e.IsSubrelationOf(ext));
    std::vector<std::pair<int, int>> edges;
    for (auto pr : testing::Graph(e)) edges.push_back(pr);
    for (int x = 0; x < n; ++x) edges.push_back({x, gens[0][x]});
    ASSERT_EQ(ext, FinEqrel::FromLabels(testing::ClosureLabels(n, edges)));
  }
}

TEST(NormalRestrictTest, Examples) {
  FinEqrel delta = FinEqrel::Identity(6);
  Perm t = PermFromCycles(6, {{0, 1, 2, 3, 4, 5}});
  FinEqrel fp = FinEqrel::FromClasses(6, {{0, 2, 4}, {1, 3, 5}});
  EXPECT_EQ(NormalRestrict(delta, t, fp), PermFromCycles(6, {{0, 2, 4}, {1, 3, 5}}));
  EXPECT_EQ(NormalRestrict(delta, t, FinEqrel::Full(6)), t);

  FinEqrel e = FinEqrel::FromClasses(6, {{0, 1}, {2, 3}, {4, 5}});
  Perm rot = PermFromCycles(6, {{0, 2, 4}, {1, 3, 5}});
  Perm inner = NormalRestrict(e, rot, e);
  EXPECT_EQ(ClassifyAutomorphism(e, inner).verdict == AutVerdict::kOuterNontrivial, false);
  for (int x = 0; x < 6; ++x) EXPECT_TRUE(e.Related(x, inner[x]));
  EXPECT_THROW(NormalRestrict(e, PermFromCycles(6, {{0, 2}}), e), PreconditionError);
}

TEST(NormalRestrictTest, JoinEqualsIntersection) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = testing::Uniform(rng, 2, 10);
    FinEqrel e = testing::RandomEqrel(rng, n, n);
    // An automorphism of E: permute points inside classes after mapping
    // classes of equal size onto each other.
    std::vector<Perm> auts = n <= 8 ? EnumerateAutomorphisms(e) : std::vector<Perm>{IdentityPerm(n)};
    const Perm& t = auts[testing::Uniform(rng, 0, static_cast<int>(auts.size()) - 1)];
    FinEqrel full = ExtendByGroup(e, {t}).extended;
    FinEqrel fp = Join(e, Meet(full, testing::RandomEqrel(rng, n, 2)));
    Perm tp = NormalRestrict(e, t, fp);
    ASSERT_TRUE(IsAutomorphism(e, tp));
    ASSERT_EQ(ExtendByGroup(e, {tp}).extended, Meet(fp, full));
    ++checked;
  }
  EXPECT_EQ(checked, 400);
}

TEST(EnumerateAutomorphismsTest, TwoPairs) {
  FinEqrel e = TwoPairs();
  EXPECT_EQ(EnumerateAutomorphisms(e).size(), 8u);
  EXPECT_EQ(EnumerateOuterClassMaps(e).size(), 2u);
}

}  // namespace
}  // namespace quotlift
