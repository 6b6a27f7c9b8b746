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

#include <gmpxx.h>
#include <gtest/gtest.h>

#include <algorithm>

#include "maxknap/bounded_conv.hpp"
#include "maxknap/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace maxknap {
namespace {

const ExtVal kNeg = ExtVal::neg_inf();
const ExtVal kPos = ExtVal::pos_inf();

mpz_class from_limbs(const std::vector<std::uint64_t>& limbs) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
  return r;
}

TEST(BoundedRangeConvTest, SmallExamples) {
  EXPECT_EQ(bounded_range_conv(MaxPlusVec{2, kNeg}, MaxPlusVec{0, 1}, 2), (MaxPlusVec{2, 3, kNeg}));
  EXPECT_EQ(bounded_range_conv(MaxPlusVec{0}, MaxPlusVec{0}, 0), (MaxPlusVec{0}));
  EXPECT_EQ(bounded_range_conv(MaxPlusVec{kNeg, kNeg}, MaxPlusVec{3}, 3), (MaxPlusVec{kNeg, kNeg}));
  EXPECT_EQ(bounded_range_conv(MaxPlusVec{kPos, 1}, MaxPlusVec{kNeg, 2}, 2), (MaxPlusVec{kNeg, kPos, 3}));
}

TEST(BoundedRangeConvTest, RejectsOutOfRange) {
  EXPECT_THROW(bounded_range_conv(MaxPlusVec{3}, MaxPlusVec{0}, 2), DomainError);
  EXPECT_THROW(bounded_range_conv(MaxPlusVec{-1}, MaxPlusVec{0}, 2), DomainError);
  EXPECT_THROW(bounded_range_conv(MaxPlusVec{0}, MaxPlusVec{0}, -1), DomainError);
}

TEST(BoundedRangeConvTest, MatchesOracleOnRandomInputs) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t e = rng.uniform(0, 12);
    const MaxPlusVec a = testing::random_vec(rng, rng.uniform(1, 40), 0, e, 10, 5);
    const MaxPlusVec b = testing::random_vec(rng, rng.uniform(1, 40), 0, e, 10, 5);
    ASSERT_EQ(bounded_range_conv(a, b, e), testing::oracle_conv(a, b)) << a << " * " << b;
  }
}

TEST(BoundedRangeConvTest, BackendsAgree) {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t e = rng.uniform(0, 20);
    const MaxPlusVec a = testing::random_vec(rng, rng.uniform(1, 200), 0, e, 5, 2);
    const MaxPlusVec b = testing::random_vec(rng, rng.uniform(1, 200), 0, e, 5, 2);
    const KroneckerProduct fast = kronecker_product(a, b, e, MulBackend::kGmp);
    const KroneckerProduct slow = kronecker_product(a, b, e, MulBackend::kSchoolbook);
    ASSERT_EQ(fast.limbs, slow.limbs);
    const MaxPlusVec expected = testing::oracle_conv(a, b);
    ASSERT_EQ(bounded_range_conv(a, b, e, MulBackend::kSchoolbook), expected);
    ASSERT_EQ(bounded_range_conv(a, b, e, MulBackend::kGmp), expected);
    ASSERT_EQ(bounded_range_conv(a, b, e, MulBackend::kNtt), expected);
    ASSERT_EQ(bounded_range_conv(a, b, e), expected);
  }
}

TEST(BoundedRangeConvTest, TransformBackendOnLongInputs) {
  SplitMix64 rng(25);
  for (int trial = 0; trial < 4; ++trial) {
    const std::int64_t e = rng.uniform(0, 8);
    const auto la = static_cast<std::size_t>(rng.uniform(1, 40000));
    const auto lb = static_cast<std::size_t>(rng.uniform(20000, 40000));
    const MaxPlusVec a = testing::random_vec(rng, la, 0, e, 3, trial % 2);
    const MaxPlusVec b = testing::random_vec(rng, lb, 0, e, 3, trial % 2);
    const MaxPlusVec packed = bounded_range_conv(a, b, e, MulBackend::kGmp);
    ASSERT_EQ(bounded_range_conv(a, b, e, MulBackend::kNtt), packed);
    ASSERT_EQ(bounded_range_conv(a, b, e), packed);
  }
}

TEST(BoundedRangeConvTest, TransformBackendEdgeCases) {
  EXPECT_EQ(bounded_range_conv(MaxPlusVec{3}, MaxPlusVec{2}, 3, MulBackend::kNtt), (MaxPlusVec{5}));
  EXPECT_EQ(bounded_range_conv(MaxPlusVec{ExtVal::neg_inf()}, MaxPlusVec{0, 1}, 1, MulBackend::kNtt),
            (MaxPlusVec{ExtVal::neg_inf(), ExtVal::neg_inf()}));
  EXPECT_EQ(bounded_range_conv(MaxPlusVec{0, ExtVal::pos_inf()}, MaxPlusVec{1, ExtVal::neg_inf()}, 1, MulBackend::kNtt),
            (MaxPlusVec{1, ExtVal::pos_inf(), ExtVal::neg_inf()}));
  EXPECT_THROW(bounded_range_conv(MaxPlusVec{5}, MaxPlusVec{0}, 4, MulBackend::kNtt), DomainError);
}

// Each coefficient equals the exact sum of base^(a_j + b_{i-j}) and lies in
// [base^c_i, m base^c_i] with m = min(|a|, |b|) < base.
TEST(BoundedRangeConvTest, CoefficientsMatchEncodingBounds) {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t e = rng.uniform(0, 6);
    const MaxPlusVec a = testing::random_vec(rng, rng.uniform(1, 20), 0, e, 10);
    const MaxPlusVec b = testing::random_vec(rng, rng.uniform(1, 20), 0, e, 10);
    const KroneckerProduct p = kronecker_product(a, b, e);
    const MaxPlusVec c = testing::oracle_conv(a, b);
    const mpz_class base = mpz_class(1) << p.digit_bits;
    const auto n = static_cast<unsigned long>(std::min(a.size(), b.size()));
    ASSERT_GT(base, n);
    for (std::size_t i = 0; i < p.slots; ++i) {
      mpz_class expected = 0;
      for (std::size_t j = 0; j <= i && j < a.size(); ++j) {
        if (i - j >= b.size() || !a[j].is_finite() || !b[i - j].is_finite()) continue;
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(a[j].value() + b[i - j].value()));
        expected += term;
      }
      const mpz_class got = from_limbs(p.slot_limbs(i));
      ASSERT_EQ(got, expected);
      if (c[i].is_finite()) {
        mpz_class low;
        mpz_pow_ui(low.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(c[i].value()));
        ASSERT_LE(low, got);
        ASSERT_LE(got, n * low);
      }
    }
  }
}

TEST(ApproxConvTest, SmallExamples) {
  const ScaledVec r1 = approx_conv(ScaledVec{{1, 3}, 2}, ScaledVec{{1}, 2}, 2);
  EXPECT_EQ(r1.denominator, 2);
  EXPECT_EQ(r1.numerators, (std::vector<ExtVal>{2, 4}));
  const ScaledVec r2 = approx_conv(ScaledVec{{3}, 4}, ScaledVec{{3}, 4}, 1);
  EXPECT_EQ(r2.numerators, (std::vector<ExtVal>{2}));
  EXPECT_THROW(approx_conv(ScaledVec{{1}, 3}, ScaledVec{{1}, 2}, 1), DomainError);
}

TEST(ApproxConvTest, StaysWithinOneOfExact) {
  SplitMix64 rng(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t den = std::int64_t{1} << rng.uniform(0, 6);
    const std::int64_t e = rng.uniform(0, 10);
    auto make = [&](std::size_t len) {
      ScaledVec v{std::vector<ExtVal>(len), den};
      for (ExtVal& x : v.numerators) x = ExtVal(rng.uniform(0, e * den));
      return v;
    };
    const ScaledVec a = make(rng.uniform(1, 20)), b = make(rng.uniform(1, 20));
    const ScaledVec c = approx_conv(a, b, e);
    ASSERT_EQ(c.numerators.size(), a.numerators.size() + b.numerators.size() - 1);
    for (std::size_t k = 0; k < c.numerators.size(); ++k) {
      // exact_k * den vs c_k / 2, compared over the denominator 2 den.
      std::int64_t exact = INT64_MIN;
      for (std::size_t i = 0; i < a.numerators.size(); ++i) {
        if (k >= i && k - i < b.numerators.size()) {
          exact = std::max(exact, a.numerators[i].value() + b.numerators[k - i].value());
        }
      }
      const std::int64_t got = c.numerators[k].value() * den;  // over 2 den
      ASSERT_LE(got, 2 * exact);
      ASSERT_GT(got, 2 * exact - 2 * den);
    }
  }
}

}  // namespace
}  // namespace maxknap
