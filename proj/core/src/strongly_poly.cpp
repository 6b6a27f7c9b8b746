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
#include <map>
#include <numeric>

#include "maxknap/errors.hpp"
#include "maxknap/solvers.hpp"

namespace maxknap {

namespace {

std::vector<std::size_t> by_ratio(const std::vector<Item>& items) {
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return better_ratio(items[l], items[r]); });
  return order;
}

// Expands bounded copies into 0/1 items, never more than fit into t.
std::vector<Item> expand_bounded(const std::vector<Item>& items, std::int64_t t, bool literal) {
  std::vector<Item> out;
  for (const Item& it : items) {
    if (it.size > t || it.value == 0) continue;
    const std::int64_t fit = t / it.size;
    const std::int64_t copies = it.unbounded() ? fit : std::min(it.multiplicity, fit);
    const std::vector<Item> part = expand_copies(it, copies, literal);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

std::int64_t knapsack_infinite_mult(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg) {
  require(t >= 0, "capacity must be non-negative");
  validate_items(items);
  for (const Item& it : items) require(it.unbounded(), "expected unbounded multiplicities");
  if (items.empty()) return 0;
  const std::int64_t s_max = max_size(items);
  const Item& best = items[by_ratio(items).front()];
  // Some optimal solution holds fewer than s_best other items, of total size
  // below s_max^2, so the rest of the capacity goes to the best-ratio item.
  const std::int64_t slack = t - checked_mul(s_max, s_max);
  const std::int64_t committed = slack > 0 ? slack / best.size : 0;
  const std::int64_t rest = t - committed * best.size;
  const std::int64_t base = checked_mul(committed, best.value);
  const std::int64_t residual = static_cast<std::int64_t>(items.size()) <= s_max
                                    ? classic_dp(rest, items).back()
                                    : unbounded_small_sizes(rest, items, cfg);
  return checked_add(base, residual);
}

std::int64_t knapsack_given_mult(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg) {
  require(t >= 0, "capacity must be non-negative");
  validate_items(items);
  for (const Item& it : items) require(!it.unbounded(), "expected finite multiplicities");
  if (items.empty()) return 0;
  const std::int64_t s_max = max_size(items);
  const std::vector<std::size_t> order = by_ratio(items);

  // Greedy copy counts for capacity t - s_max^2; an optimal solution keeps
  // all but s_max copies of each of them.
  std::int64_t room = std::max<std::int64_t>(0, t - checked_mul(s_max, s_max));
  std::vector<std::int64_t> greedy(items.size(), 0);
  for (std::size_t idx : order) {
    const Item& it = items[idx];
    greedy[idx] = std::min(it.multiplicity, room / it.size);
    room -= greedy[idx] * it.size;
    if (greedy[idx] != it.multiplicity) break;
  }
  std::int64_t base = 0, rest = t;
  std::vector<Item> residual_items;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::int64_t commit = std::max<std::int64_t>(0, greedy[i] - s_max);
    base = checked_add(base, checked_mul(commit, items[i].value));
    rest -= commit * items[i].size;
    if (items[i].multiplicity > commit) {
      residual_items.push_back({items[i].size, items[i].value, items[i].multiplicity - commit});
    }
  }
  std::int64_t residual = 0;
  if (static_cast<std::int64_t>(items.size()) <= s_max) {
    residual = classic_dp(rest, residual_items).back();
  } else {
    residual = knapsack_small_sizes(rest, expand_bounded(residual_items, rest, false), cfg).optimum;
  }
  return checked_add(base, residual);
}

std::int64_t unbounded_small_sizes(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg,
                                   bool literal_expansion) {
  require(t >= 0, "capacity must be non-negative");
  validate_items(items);
  // Only the best item of each size matters with unlimited copies.
  std::map<std::int64_t, Item> champion;
  for (const Item& it : items) {
    auto [pos, fresh] = champion.try_emplace(it.size, Item{it.size, it.value, kUnbounded});
    if (!fresh) pos->second.value = std::max(pos->second.value, it.value);
  }
  std::vector<Item> unique;
  for (const auto& [s, it] : champion) unique.push_back(it);
  return knapsack_small_sizes(t, expand_bounded(unique, t, literal_expansion), cfg).optimum;
}

}  // namespace maxknap
