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

#include "maxknap/vector_power.hpp"

#include <algorithm>
#include <map>

#include "maxknap/errors.hpp"

namespace maxknap {

namespace {

std::vector<std::int64_t> prefix_max(const MaxPlusVec& v) {
  std::vector<std::int64_t> out = v.to_ints();
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = std::max(out[i], out[i - 1]);
  return out;
}

// Largest gap between the running maximum and the entry itself.
std::int64_t largest_drop(const MaxPlusVec& v, const std::vector<std::int64_t>& running_max) {
  std::int64_t drop = 0;
  for (std::size_t i = 0; i < running_max.size(); ++i) drop = std::max(drop, running_max[i] - v[i].value());
  return drop;
}

void check_entries(const MaxPlusVec& a, std::int64_t e) {
  for (ExtVal v : a) {
    require(v.is_finite() && v.value() >= 0 && v.value() <= e, "power entries must lie in [0, e]");
  }
}

}  // namespace

UncertainSolution power_certificate(const MaxPlusVec& hi, const MaxPlusVec& lo, std::int64_t e) {
  require(e >= 0, "e must be non-negative");
  require(hi.all_finite() && lo.all_finite(), "power operands must be finite");
  const std::vector<std::int64_t> hat = prefix_max(hi);
  const std::vector<std::int64_t> bar = prefix_max(lo);
  const std::int64_t drop_hi = largest_drop(hi, hat), drop_lo = largest_drop(lo, bar);
  // An optimal pair with |hi_j - lo_q| <= e has bar_q - hat_j in
  // [-e - drop_hi, e + drop_lo], so these windows cover every such pair.
  const std::int64_t below = checked_add(e, drop_hi), above = checked_add(e, drop_lo);
  UncertainSolution u;
  u.e_max = checked_add(checked_add(checked_mul(2, e), std::max(drop_hi, drop_lo)), checked_add(drop_hi, drop_lo));
  u.x.resize(hat.size());
  u.y.resize(hat.size());
  for (std::size_t i = 0; i < hat.size(); ++i) {
    // bar is non-decreasing, so the window is a contiguous column range;
    // when it is empty, y_i lands on x_i - 1.
    const std::int64_t lo_val = checked_sub(hat[i], below), hi_val = checked_add(hat[i], above);
    u.x[i] = std::lower_bound(bar.begin(), bar.end(), lo_val) - bar.begin();
    u.y[i] = (std::upper_bound(bar.begin(), bar.end(), hi_val) - bar.begin()) - 1;
  }
  return u;
}

MaxPlusVec fast_power_step(const MaxPlusVec& hi, const MaxPlusVec& lo, std::int64_t e,
                           const PredictionOptions& options) {
  return conv_via_prediction(hi, lo, power_certificate(hi, lo, e), options);
}

MaxPlusVec fast_power(const MaxPlusVec& a, std::int64_t k, std::optional<std::size_t> prefix_cap,
                      const PredictionOptions& options) {
  require(k >= 1, "fast_power requires k >= 1");
  require(a.all_finite(), "fast_power requires finite entries");
  const std::int64_t e = a.max_finite().value();
  check_entries(a, e);
  if (prefix_cap) {
    require(*prefix_cap >= 1, "prefix_cap must be positive");
    require(a[0].value() == 0, "prefix_cap requires a_0 = 0");
  }
  auto cap = [&](MaxPlusVec v) { return prefix_cap ? v.prefix(*prefix_cap) : v; };

  // Halving k visits at most two distinct exponents per level.
  std::map<std::int64_t, MaxPlusVec> memo;
  memo.emplace(1, cap(a));
  std::vector<std::int64_t> pending{k};
  std::vector<std::int64_t> order;
  while (!pending.empty()) {
    const std::int64_t m = pending.back();
    pending.pop_back();
    if (m <= 1 || std::find(order.begin(), order.end(), m) != order.end()) continue;
    order.push_back(m);
    pending.push_back((m + 1) / 2);
    pending.push_back(m / 2);
  }
  std::sort(order.begin(), order.end());
  for (std::int64_t m : order) {
    const MaxPlusVec& hi = memo.at((m + 1) / 2);
    const MaxPlusVec& lo = memo.at(m / 2);
    memo.emplace(m, cap(fast_power_step(hi, lo, e, options)));
  }
  return memo.at(k);
}

SolutionProfile unbounded_via_power(std::int64_t t, const std::vector<Item>& items, const PredictionOptions& options) {
  require(t >= 0, "capacity must be non-negative");
  validate_items(items);
  std::vector<std::int64_t> best(static_cast<std::size_t>(t) + 1, 0);
  for (const Item& it : items) {
    if (it.size <= t) best[static_cast<std::size_t>(it.size)] = std::max(best[static_cast<std::size_t>(it.size)], it.value);
  }
  if (t == 0) return best;
  // Zero entries stand for unused capacity, so the t-th power is the profile.
  return to_profile(fast_power(MaxPlusVec::from_ints(best), t, static_cast<std::size_t>(t) + 1, options));
}

}  // namespace maxknap
