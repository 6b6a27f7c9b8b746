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

#include "maxknap/distorted_conv.hpp"
#include "maxknap/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace maxknap {
namespace {

TEST(DistortionTest, CheckExamples) {
  EXPECT_FALSE(check_distortion(MaxPlusVec{0, 5}, MaxPlusVec{0, 0}, 1));
  EXPECT_TRUE(check_distortion(MaxPlusVec{0, 5}, MaxPlusVec{0, 0}, 5));
  EXPECT_EQ(distortion(MaxPlusVec{0, 5}, MaxPlusVec{0, 0}), 5);
}

TEST(DistortedConvTest, SmallExamples) {
  EXPECT_EQ(distorted_conv(MaxPlusVec{0, 100}, MaxPlusVec{0, 100}, 0), (MaxPlusVec{0, 100, 200}));
  EXPECT_EQ(distorted_conv(MaxPlusVec{0, 10}, MaxPlusVec{0, 10, 20, 30}, 0), (MaxPlusVec{0, 10, 20, 30, 40}));
  EXPECT_EQ(distorted_conv(MaxPlusVec{7}, MaxPlusVec{-3}, 4), (MaxPlusVec{4}));
  EXPECT_THROW(distorted_conv(MaxPlusVec{ExtVal::neg_inf()}, MaxPlusVec{1}, 1), DomainError);
}

TEST(DistortedConvTest, RampShiftLandsInExpectedRanges) {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.uniform(2, 30);
    const MaxPlusVec a = testing::random_vec(rng, n, -30, 30);
    const MaxPlusVec b = testing::random_vec(rng, n, -30, 30);
    const std::int64_t e = distortion(a, b);
    const RampTransform t = ramp_transform(a, b, e);
    const __int128 s = t.scale;
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_GE(t.a_scaled[i], e * s);
      ASSERT_LE(t.a_scaled[i], 5 * e * s);
      ASSERT_GE(t.b_scaled[i], 0);
      ASSERT_LE(t.b_scaled[i], 6 * e * s);
    }
  }
}

TEST(DistortedConvTest, ExactOnCertifiedRampPairs) {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t e = rng.uniform(0, 16);
    const testing::RampPair p = testing::ramp_pair(rng, rng.uniform(1, 40), rng.uniform(1, 40), e);
    ASSERT_TRUE(check_distortion(p.a, p.b, e));
    ASSERT_EQ(distorted_conv(p.a, p.b, e), testing::oracle_conv(p.a, p.b));
  }
}

TEST(DistortedConvTest, ExactOnRandomPairsAtTheirDistortion) {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    const MaxPlusVec a = testing::random_vec(rng, rng.uniform(1, 30), 0, 8);
    const MaxPlusVec b = testing::random_vec(rng, rng.uniform(1, 30), 0, 8);
    const std::int64_t e = distortion(a, b);
    ASSERT_EQ(distorted_conv(a, b, e), testing::oracle_conv(a, b));
  }
}

TEST(DistortedConvTest, UnderstatedDistortionIsStillExact) {
  SplitMix64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const MaxPlusVec a = testing::random_vec(rng, rng.uniform(1, 30), -500, 500);
    const MaxPlusVec b = testing::random_vec(rng, rng.uniform(1, 30), -500, 500);
    ASSERT_EQ(distorted_conv(a, b, rng.uniform(0, 3)), testing::oracle_conv(a, b));
  }
}

TEST(DistortedConvTest, SchoolbookBackendAgrees) {
  SplitMix64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t e = rng.uniform(1, 10);
    const testing::RampPair p = testing::ramp_pair(rng, rng.uniform(1, 60), rng.uniform(1, 60), e);
    ASSERT_EQ(distorted_conv(p.a, p.b, e, MulBackend::kSchoolbook), distorted_conv(p.a, p.b, e));
  }
}

}  // namespace
}  // namespace maxknap
