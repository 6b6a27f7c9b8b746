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

#include "generators.hpp"

#include <algorithm>

#include "oracles.hpp"

namespace maxknap::testing {

MaxPlusVec random_vec(SplitMix64& rng, std::size_t len, std::int64_t lo, std::int64_t hi, int neg_inf_pct,
                      int pos_inf_pct) {
  std::vector<ExtVal> v(len);
  for (ExtVal& x : v) {
    const auto roll = static_cast<int>(rng.below(100));
    if (roll < neg_inf_pct) {
      x = ExtVal::neg_inf();
    } else if (roll < neg_inf_pct + pos_inf_pct) {
      x = ExtVal::pos_inf();
    } else {
      x = ExtVal(rng.uniform(lo, hi));
    }
  }
  return MaxPlusVec(std::move(v));
}

RampPair ramp_pair(SplitMix64& rng, std::size_t la, std::size_t lb, std::int64_t e) {
  const std::int64_t slope = rng.uniform(-50, 50);
  const std::int64_t off_a = rng.uniform(-1000, 1000), off_b = rng.uniform(-1000, 1000);
  auto build = [&](std::size_t len, std::int64_t off) {
    std::vector<ExtVal> v(len);
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = ExtVal(off + slope * static_cast<std::int64_t>(i) + rng.uniform(0, e / 2));
    }
    return MaxPlusVec(std::move(v));
  };
  MaxPlusVec a = build(la, off_a);
  MaxPlusVec b = build(lb, off_b);
  return {std::move(a), std::move(b)};
}

UncertainSolution witness_certificate(const MaxPlusVec& a, const MaxPlusVec& b, SplitMix64& rng) {
  const MaxPlusVec c = oracle_conv(a, b);
  const auto rows = a.size();
  const auto cols = static_cast<std::int64_t>(b.size());
  std::vector<std::int64_t> need_lo(rows, cols), need_hi(rows, -1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::vector<std::size_t> optimal;
    for (std::size_t i = 0; i < rows; ++i) {
      if (k >= i && k - i < b.size() && a[i] + b[k - i] == c[k]) optimal.push_back(i);
    }
    const std::size_t i = optimal[rng.below(optimal.size())];
    need_lo[i] = std::min(need_lo[i], static_cast<std::int64_t>(k - i));
    need_hi[i] = std::max(need_hi[i], static_cast<std::int64_t>(k - i));
  }
  UncertainSolution u;
  u.x.resize(rows);
  u.y.resize(rows);
  std::int64_t suffix_min = cols;
  for (std::size_t i = rows; i-- > 0;) {
    suffix_min = std::min(suffix_min, need_lo[i]);
    u.x[i] = suffix_min;
  }
  std::int64_t prefix_max = -1;
  for (std::size_t i = 0; i < rows; ++i) {
    prefix_max = std::max(prefix_max, need_hi[i]);
    u.y[i] = std::max(prefix_max, u.x[i] - 1);
  }
  std::int64_t gap = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::int64_t j = u.x[i]; j <= u.y[i]; ++j) {
      gap = std::max(gap, c[i + static_cast<std::size_t>(j)].value() - a[i].value() - b[static_cast<std::size_t>(j)].value());
    }
  }
  u.e_max = gap;
  return u;
}

std::vector<Item> random_items(SplitMix64& rng, std::size_t n, std::int64_t s_max, std::int64_t v_max,
                               std::int64_t multiplicity) {
  std::vector<Item> items(n);
  for (Item& it : items) it = Item{rng.uniform(1, s_max), rng.uniform(0, v_max), multiplicity};
  return items;
}

}  // namespace maxknap::testing
