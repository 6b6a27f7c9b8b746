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
#include <cmath>
#include <utility>

#include "maxknap/errors.hpp"
#include "maxknap/rng.hpp"
#include "maxknap/solvers.hpp"

namespace maxknap {

namespace {

constexpr std::int64_t kMissing = INT64_MIN;

// Best values at capacities lo .. lo + values.size() - 1 for a group of buckets.
struct Window {
  std::int64_t lo = 0;
  std::vector<std::int64_t> values;
  std::int64_t buckets = 1;
};

Window merge_windows(const Window& l, const Window& r, std::int64_t lo, std::int64_t hi) {
  Window out{lo, std::vector<std::int64_t>(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo + 1, 0)), kMissing),
             l.buckets + r.buckets};
  for (std::size_t i = 0; i < l.values.size(); ++i) {
    if (l.values[i] == kMissing) continue;
    const std::int64_t ci = l.lo + static_cast<std::int64_t>(i);
    const std::int64_t jlo = std::max<std::int64_t>(r.lo, lo - ci);
    const std::int64_t jhi = std::min<std::int64_t>(r.lo + static_cast<std::int64_t>(r.values.size()) - 1, hi - ci);
    for (std::int64_t cj = jlo; cj <= jhi; ++cj) {
      const std::int64_t rv = r.values[static_cast<std::size_t>(cj - r.lo)];
      if (rv == kMissing) continue;
      auto& slot = out.values[static_cast<std::size_t>(ci + cj - lo)];
      slot = std::max(slot, checked_add(l.values[i], rv));
    }
  }
  return out;
}

// Capacities kept when merging g of the buckets. An optimal solution puts
// about t g / buckets of its size into them, deviating by at most
// c sqrt(s_max * mean) w.h.p.
std::pair<std::int64_t, std::int64_t> window_bounds(std::int64_t t, std::int64_t g, std::int64_t buckets,
                                                    std::int64_t c, std::int64_t s_max) {
  const double mean = static_cast<double>(t) * static_cast<double>(g) / static_cast<double>(buckets);
  const double half =
      static_cast<double>(c) * std::sqrt(static_cast<double>(s_max) * mean) + static_cast<double>(s_max);
  const auto lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(mean - half)));
  const auto hi = std::min<std::int64_t>(t, static_cast<std::int64_t>(std::ceil(mean + half)));
  return {lo, hi};
}

// Pair steps spent by the merge tree of one repetition.
double merge_work(std::int64_t t, std::int64_t buckets, std::int64_t first_cap, std::int64_t c, std::int64_t s_max) {
  struct Node {
    std::int64_t buckets;
    double width;
  };
  std::vector<Node> level(static_cast<std::size_t>(buckets), Node{1, static_cast<double>(first_cap + 1)});
  double work = 0;
  while (level.size() > 1) {
    std::vector<Node> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      const std::int64_t g = level[i].buckets + level[i + 1].buckets;
      const auto [lo, hi] = window_bounds(t, g, buckets, c, s_max);
      work += level[i].width * level[i + 1].width;
      next.push_back({g, static_cast<double>(std::max<std::int64_t>(hi - lo + 1, 0))});
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return work;
}

}  // namespace

SmallSizesResult knapsack_small_sizes(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg) {
  require(t >= 0, "capacity must be non-negative");
  validate_items(items);
  require(cfg.repetitions >= 1, "repetitions must be positive");
  std::vector<Item> fitting;
  std::int64_t total_size = 0, total_value = 0;
  for (const Item& it : items) {
    require(it.multiplicity == 1, "small-size solver expects 0/1 items");
    if (it.size > t) continue;
    fitting.push_back(it);
    total_size = checked_add(total_size, it.size);
    total_value = checked_add(total_value, it.value);
  }
  SmallSizesResult result;
  if (total_size <= t) {
    result.optimum = total_value;
    return result;
  }

  const std::int64_t s_max = max_size(fitting);
  const auto n = static_cast<double>(fitting.size());
  const std::int64_t c =
      cfg.c_const ? *cfg.c_const : static_cast<std::int64_t>(std::ceil(40.0 * std::log(n + 2.0)));
  require(c >= 1, "c_const must be positive");
  const std::int64_t buckets = (t + s_max - 1) / s_max;
  const std::int64_t first_cap = std::min(checked_mul(c + 2, s_max), t);

  if (cfg.exact_base_case &&
      static_cast<double>(fitting.size()) * static_cast<double>(t + 1) <=
          static_cast<double>(cfg.repetitions) * merge_work(t, buckets, first_cap, c, s_max)) {
    result.window = classic_dp(t, fitting);
    result.optimum = result.window.back();
    return result;
  }

  result.optimum = -1;
  const SplitMix64 rng(cfg.seed);
  for (std::int64_t rep = 0; rep < cfg.repetitions; ++rep) {
    SplitMix64 assign = rng.split(static_cast<std::uint64_t>(rep));
    std::vector<std::vector<Item>> parts(static_cast<std::size_t>(buckets));
    for (const Item& it : fitting) parts[assign.below(static_cast<std::uint64_t>(buckets))].push_back(it);
    std::vector<Window> level;
    for (const auto& part : parts) level.push_back({0, classic_dp(first_cap, part), 1});
    while (level.size() > 1) {
      std::vector<Window> next;
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
        const std::int64_t g = level[i].buckets + level[i + 1].buckets;
        const auto [lo, hi] = window_bounds(t, g, buckets, c, s_max);
        next.push_back(merge_windows(level[i], level[i + 1], lo, hi));
      }
      if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
      level = std::move(next);
    }
    const Window& final_window = level.front();
    std::int64_t best = 0;
    for (std::size_t i = 0; i < final_window.values.size(); ++i) {
      if (final_window.lo + static_cast<std::int64_t>(i) <= t) best = std::max(best, final_window.values[i]);
    }
    if (best > result.optimum) {
      result.optimum = best;
      result.window_lo = final_window.lo;
      result.window = final_window.values;
    }
  }
  return result;
}

}  // namespace maxknap
