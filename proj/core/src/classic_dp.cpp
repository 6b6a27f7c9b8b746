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

#include <algorithm>
#include <deque>

#include "maxknap/errors.hpp"
#include "maxknap/solvers.hpp"

namespace maxknap {

namespace {

void add_bounded(SolutionProfile& dp, const Item& it, std::int64_t copies) {
  const std::int64_t t = static_cast<std::int64_t>(dp.size()) - 1;
  const std::int64_t s = it.size, v = it.value;
  const SolutionProfile old = dp;
  for (std::int64_t r = 0; r < s && r <= t; ++r) {
    // Over positions r + q s, keep the window max of old - q v.
    std::deque<std::pair<std::int64_t, std::int64_t>> window;  // (q, key)
    for (std::int64_t q = 0; r + q * s <= t; ++q) {
      const std::int64_t key = checked_sub(old[static_cast<std::size_t>(r + q * s)], checked_mul(q, v));
      while (!window.empty() && window.back().second <= key) window.pop_back();
      window.emplace_back(q, key);
      while (window.front().first < q - copies) window.pop_front();
      dp[static_cast<std::size_t>(r + q * s)] = checked_add(window.front().second, q * v);
    }
  }
}

}  // namespace

SolutionProfile classic_dp(std::int64_t t, const std::vector<Item>& items) {
  require(t >= 0, "capacity must be non-negative");
  validate_items(items);
  SolutionProfile dp(static_cast<std::size_t>(t) + 1, 0);
  for (const Item& it : items) {
    if (it.size > t) continue;
    const auto s = static_cast<std::size_t>(it.size);
    if (it.unbounded()) {
      for (std::size_t c = s; c < dp.size(); ++c) dp[c] = std::max(dp[c], checked_add(dp[c - s], it.value));
    } else if (it.multiplicity == 1) {
      for (std::size_t c = dp.size() - 1; c >= s; --c) dp[c] = std::max(dp[c], checked_add(dp[c - s], it.value));
    } else {
      add_bounded(dp, it, std::min(it.multiplicity, t / it.size));
    }
  }
  return dp;
}

std::vector<Item> expand_copies(const Item& it, std::int64_t copies, bool literal) {
  std::vector<Item> out;
  if (literal) {
    out.assign(static_cast<std::size_t>(std::max<std::int64_t>(copies, 0)), Item{it.size, it.value, 1});
    return out;
  }
  for (std::int64_t group = 1; copies > 0; group *= 2) {
    const std::int64_t take = std::min(group, copies);
    out.push_back(Item{checked_mul(it.size, take), checked_mul(it.value, take), 1});
    copies -= take;
  }
  return out;
}

}  // namespace maxknap
