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
#include "maxknap/prediction.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace maxknap {
namespace {

UncertainSolution make(std::vector<std::int64_t> x, std::vector<std::int64_t> y, std::int64_t e) {
  UncertainSolution u;
  u.x = std::move(x);
  u.y = std::move(y);
  u.e_max = e;
  return u;
}

TEST(ProjectionTest, Examples) {
  const UncertainSolution u = make({0, 1, 2}, {1, 2, 3}, 0);
  EXPECT_EQ(projection(u, 1, 2), (Interval{1, 1}));
  EXPECT_TRUE(projection(u, 0, 3).empty());
  const UncertainSolution w = make({0, 0, 2}, {1, 3, 3}, 0);
  EXPECT_EQ(projection_diff(w, 0, 1, 2, 3), (Interval{0, 0}));
  EXPECT_THROW(projection_diff(w, 0, 2, 2, 3), DomainError);
}

TEST(ProjectionTest, DifferenceIsContiguousForMonotoneRows) {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = rng.uniform(1, 20);
    const std::int64_t cols = rng.uniform(1, 20);
    UncertainSolution u;
    std::int64_t x = 0, y = -1;
    for (std::size_t i = 0; i < rows; ++i) {
      x = std::min<std::int64_t>(cols - 1, x + rng.uniform(0, 2));
      y = std::min<std::int64_t>(cols - 1, std::max(y, x - 1) + rng.uniform(0, 3));
      u.x.push_back(x);
      u.y.push_back(std::max(y, x - 1));
      y = u.y.back();
    }
    const std::int64_t a1 = rng.uniform(0, cols - 1), b1 = rng.uniform(a1, cols - 1);
    if (b1 + 1 > cols - 1) continue;
    const std::int64_t a2 = rng.uniform(b1 + 1, cols - 1), b2 = rng.uniform(a2, cols - 1);
    const Interval d = projection_diff(u, a1, b1, a2, b2);
    for (std::size_t i = 0; i < rows; ++i) {
      const bool in1 = u.x[i] <= a1 && u.y[i] >= b1;
      const bool in2 = u.x[i] <= a2 && u.y[i] >= b2;
      const auto ii = static_cast<std::int64_t>(i);
      ASSERT_EQ(in1 && !in2, ii >= d.lo && ii <= d.hi);
    }
  }
}

TEST(ValidateUncertainTest, Examples) {
  const MaxPlusVec a{1, 2}, b{3, 4};
  EXPECT_TRUE(validate_uncertain(a, b, make({0, 0}, {1, 1}, 1)));
  EXPECT_FALSE(validate_uncertain(a, b, make({0, 0}, {0, 0}, 1)));
  EXPECT_FALSE(validate_uncertain(a, b, make({1, 0}, {1, 1}, 1)));
}

TEST(ApproxFromUncertainTest, WithinErrorAndSkipsEmptyRows) {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const MaxPlusVec a = testing::random_vec(rng, rng.uniform(1, 20), 0, 8);
    const MaxPlusVec b = testing::random_vec(rng, rng.uniform(1, 20), 0, 8);
    const UncertainSolution u = testing::witness_certificate(a, b, rng);
    ASSERT_TRUE(validate_uncertain(a, b, u));
    const MaxPlusVec approx = approx_from_uncertain(a, b, u);
    const MaxPlusVec exact = testing::oracle_conv(a, b);
    for (std::size_t k = 0; k < exact.size(); ++k) {
      ASSERT_LE(approx[k], exact[k]);
      ASSERT_GE(approx[k] + ExtVal(u.e_max), exact[k]);
    }
  }
}

TEST(ConvViaPredictionTest, ExactOnWitnessCertificates) {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 1500; ++trial) {
    const MaxPlusVec a = testing::random_vec(rng, rng.uniform(1, 40), 0, 8);
    const MaxPlusVec b = testing::random_vec(rng, rng.uniform(1, 40), 0, 8);
    const UncertainSolution u = testing::witness_certificate(a, b, rng);
    PredictionStats stats;
    PredictionOptions opts;
    opts.verify_blocks = true;
    ASSERT_EQ(conv_via_prediction(a, b, u, opts, &stats), testing::oracle_conv(a, b));
    for (const RoundStats& r : stats.rounds) {
      ASSERT_LE(r.a_length, 2 * stats.padded_n);
      ASSERT_LE(r.c_length, 3 * stats.padded_n);
      ASSERT_LE(r.max_row_reuse, 2);
    }
  }
}

TEST(ConvViaPredictionTest, FullRowsCertificate) {
  const MaxPlusVec a{3, 1, 4, 1, 5}, b{9, 2, 6};
  const UncertainSolution u = make({0, 0, 0, 0, 0}, {2, 2, 2, 2, 2}, distortion(a, b));
  EXPECT_EQ(conv_via_prediction(a, b, u), naive_conv(a, b));
}

TEST(ConvViaPredictionTest, RejectsMalformedCertificates) {
  const MaxPlusVec a{1, 2}, b{3, 4};
  EXPECT_THROW(conv_via_prediction(a, b, make({0}, {1}, 0)), DomainError);
  EXPECT_THROW(conv_via_prediction(a, b, make({1, 0}, {1, 1}, 0)), DomainError);
  EXPECT_THROW(conv_via_prediction(a, b, make({0, 0}, {2, 2}, 0)), DomainError);
}

TEST(ConvViaPredictionTest, CollectorSeesNestedCalls) {
  PredictionStatsCollector outer;
  {
    PredictionStatsCollector inner;
    conv_via_prediction(MaxPlusVec{1, 2}, MaxPlusVec{3, 4}, make({0, 0}, {1, 1}, 1));
    EXPECT_EQ(inner.runs(), 1);
  }
  EXPECT_EQ(outer.runs(), 1);
  EXPECT_LE(outer.max_a_ratio(), 2.0);
}

}  // namespace
}  // namespace maxknap
