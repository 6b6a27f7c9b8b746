// Copyright 2026 The maxknap Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "maxknap/errors.hpp"
#include "maxknap/tree.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace maxknap {
namespace {

using Profile = std::vector<ExtVal>;

WeightedTree path3() { return WeightedTree(3, {{0, 1, 1}, {1, 2, 5}}); }

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

TEST(BruteSeparabilityTest, Examples) {
  const Profile p = brute_separability(path3());
  EXPECT_EQ(p, (Profile{0, 1, 1, 0}));
  EXPECT_EQ(brute_separability(WeightedTree(1, {})), (Profile{0, 0}));
}

TEST(SeparabilityProfileTest, Examples) {
  for (auto s : {SeparabilityStrategy::kSubtreeDp, SeparabilityStrategy::kSpine}) {
    EXPECT_EQ(separability_profile(path3(), s), (Profile{0, 1, 1, 0}));
    EXPECT_EQ(separability_profile(WeightedTree(1, {}), s), (Profile{0, 0}));
  }
  EXPECT_EQ(bounded_separability(path3()), (Profile{0, 1, 1, 0}));
  const WeightedTree star(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  EXPECT_EQ(bounded_separability(star)[1], ExtVal(1));
}

TEST(SeparabilityProfileTest, MatchesOracleOnRandomTrees) {
  SplitMix64 rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 12));
    const WeightedTree tree = random_tree(n, rng.uniform(0, 9), rng);
    const Profile expect = testing::oracle_separability(tree);
    ASSERT_EQ(brute_separability(tree), expect);
    ASSERT_EQ(separability_profile(tree, SeparabilityStrategy::kSubtreeDp), expect);
    ASSERT_EQ(separability_profile(tree, SeparabilityStrategy::kSpine), expect);
    ASSERT_EQ(bounded_separability(tree), expect);
    for (int m = 0; m <= n; ++m) ASSERT_EQ(expect[static_cast<std::size_t>(m)], expect[static_cast<std::size_t>(n - m)]);
  }
}

TEST(SeparabilityProfileTest, InfiniteWeights) {
  const WeightedTree tree(4, {{0, 1, ExtVal::pos_inf()}, {1, 2, 3}, {2, 3, ExtVal::pos_inf()}});
  const Profile expect = testing::oracle_separability(tree);
  EXPECT_EQ(expect[1], ExtVal::pos_inf());
  EXPECT_EQ(expect[2], ExtVal(3));
  for (auto s : {SeparabilityStrategy::kSubtreeDp, SeparabilityStrategy::kSpine}) {
    EXPECT_EQ(separability_profile(tree, s), expect);
  }
}

TEST(SeparabilityProfileTest, StrategiesAgreeOnLargerTrees) {
  SplitMix64 rng(82);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform(20, 128));
    const WeightedTree tree = random_tree(n, rng.uniform(0, 4), rng);
    const Profile dp = separability_profile(tree, SeparabilityStrategy::kSubtreeDp);
    ASSERT_EQ(separability_profile(tree, SeparabilityStrategy::kSpine), dp);
    if (tree.max_degree() <= 4) {
      ASSERT_EQ(bounded_separability(tree), dp);
    }
  }
}

TEST(CentroidTest, PartitionSizesAndCrossingBound) {
  SplitMix64 rng(83);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 200));
    const WeightedTree tree = random_tree(n, 1, rng);
    const std::int64_t bound = 2LL * tree.max_degree() * ceil_log2(n);
    for (int m = 1; m < n; m += std::max(1, n / 17)) {
      const std::vector<bool> side = centroid_partition(tree, m);
      ASSERT_EQ(std::count(side.begin(), side.end(), true), m);
      ASSERT_LE(crossing_edges(tree, side), bound);
    }
  }
}

TEST(CentroidTest, ComponentsAfterRemovalAreSmall) {
  SplitMix64 rng(84);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 100));
    const WeightedTree tree = random_tree(n, 1, rng);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    const int c = find_centroid(tree, all);
    for (const auto& [nb, edge] : tree.neighbors(c)) {
      (void)edge;
      std::vector<int> stack{nb};
      std::vector<bool> seen(static_cast<std::size_t>(n));
      seen[static_cast<std::size_t>(c)] = seen[static_cast<std::size_t>(nb)] = true;
      int count = 0;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++count;
        for (const auto& [w, e] : tree.neighbors(v)) {
          (void)e;
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
          }
        }
      }
      ASSERT_LE(count, 2 * n / 3);
    }
  }
}

TEST(CentroidTest, SmallExamples) {
  const WeightedTree path(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  const std::vector<bool> side = centroid_partition(path, 2);
  EXPECT_EQ(std::count(side.begin(), side.end(), true), 2);
  EXPECT_LE(crossing_edges(path, side), 8);
  const WeightedTree star(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  EXPECT_LE(crossing_edges(star, centroid_partition(star, 4)), 4);
}

bool gadget_says_violation(const MaxCovGadget& g, const Profile& profile) {
  return profile[static_cast<std::size_t>(g.m)] < ExtVal(g.threshold);
}

TEST(MaxCovTest, Examples) {
  EXPECT_FALSE(maxcov_upperbound(MaxPlusVec{1, 2}, MaxPlusVec{3, 4}, MaxPlusVec{4, 5, 6}));
  EXPECT_TRUE(maxcov_upperbound(MaxPlusVec{1, 2}, MaxPlusVec{3, 4}, MaxPlusVec{4, 5, 5}));
  EXPECT_FALSE(maxcov_upperbound(MaxPlusVec{1, 2}, MaxPlusVec{3, 4}, MaxPlusVec{1000, 1000, 1000}));

  const MaxCovGadget ok = maxcov_gadget(MaxPlusVec{1, 2}, MaxPlusVec{3, 4}, MaxPlusVec{4, 5, 6});
  EXPECT_EQ(ok.tree.size(), 21);
  EXPECT_EQ(ok.m, 9);
  EXPECT_EQ(ok.threshold, 3 * ok.big_m);
  EXPECT_FALSE(gadget_says_violation(ok, brute_separability(ok.tree)));
  const MaxCovGadget bad = maxcov_gadget(MaxPlusVec{1, 2}, MaxPlusVec{3, 4}, MaxPlusVec{4, 5, 5});
  EXPECT_TRUE(gadget_says_violation(bad, brute_separability(bad.tree)));
}

TEST(MaxCovTest, GadgetAgreesWithDirectCheck) {
  SplitMix64 rng(85);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.uniform(1, 4);
    const MaxPlusVec a = testing::random_vec(rng, n, -6, 6);
    const MaxPlusVec b = testing::random_vec(rng, n, -6, 6);
    MaxPlusVec c = naive_conv(a, b);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + ExtVal(rng.uniform(-2, 2));
    const MaxCovGadget g = maxcov_gadget(a, b, c);
    const Profile p = n == 1 ? brute_separability(g.tree) : separability_profile(g.tree, SeparabilityStrategy::kSpine);
    ASSERT_EQ(gadget_says_violation(g, p), maxcov_upperbound(a, b, c));
  }
}

// Without the ballast path, two middle edges alone can split off 4n - 1
// vertices for about 2M, so the threshold test reports a violation that
// does not exist.
TEST(MaxCovTest, ThreePathTreeWithoutBallastIsUnsound) {
  const MaxCovGadget g = maxcov_gadget(MaxPlusVec{1, 2}, MaxPlusVec{3, 4}, MaxPlusVec{4, 5, 6});
  std::vector<TreeEdge> edges;
  for (const TreeEdge& e : g.tree.edges()) {
    if (e.u < 16 && e.v < 16) edges.push_back(e);
  }
  const WeightedTree bare(16, edges);
  EXPECT_LT(brute_separability(bare)[7], ExtVal(g.threshold));
  EXPECT_FALSE(maxcov_upperbound(MaxPlusVec{1, 2}, MaxPlusVec{3, 4}, MaxPlusVec{4, 5, 6}));
}

TEST(MaxCovTest, RejectsMismatchedLengths) {
  EXPECT_THROW(maxcov_gadget(MaxPlusVec{1, 2}, MaxPlusVec{3}, MaxPlusVec{4, 5}), DomainError);
}

}  // namespace
}  // namespace maxknap
