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
#include <bit>
#include <map>

#include "maxknap/bounded_conv.hpp"
#include "maxknap/errors.hpp"
#include "maxknap/knapsack_conv.hpp"
#include "maxknap/rng.hpp"
#include "maxknap/solvers.hpp"

namespace maxknap {

namespace {

struct ListResult {
  SolutionProfile profile;
  bool exact = false;
};

void require_zero_one(const std::vector<Item>& items) {
  validate_items(items);
  for (const Item& it : items) require(it.multiplicity == 1, "solver expects 0/1 items");
}

std::int64_t effective_c(const SolverConfig& cfg, std::int64_t t) {
  if (cfg.c_const) {
    require(*cfg.c_const >= 1, "c_const must be positive");
    return *cfg.c_const;
  }
  return default_repetitions(t);
}

void max_into(SolutionProfile& dst, const SolutionProfile& src) {
  for (std::size_t i = 0; i < dst.size() && i < src.size(); ++i) dst[i] = std::max(dst[i], src[i]);
}

MaxPlusVec truncate(const MaxPlusVec& v, std::int64_t t) { return v.prefix(static_cast<std::size_t>(t) + 1); }

// Folds non-decreasing profiles with exact bounded-range convolutions.
SolutionProfile fold_profiles(std::vector<SolutionProfile> parts, std::int64_t t) {
  if (parts.empty()) return SolutionProfile(static_cast<std::size_t>(t) + 1, 0);
  while (parts.size() > 1) {
    std::vector<SolutionProfile> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      const MaxPlusVec a = to_maxplus(parts[i]), b = to_maxplus(parts[i + 1]);
      const std::int64_t e = std::max(a.max_finite().value(), b.max_finite().value());
      next.push_back(to_profile(truncate(bounded_range_conv(a, b, e), t)));
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

// True when direct DP over n items, about n * (t + 1) steps, is no more work
// than `rounds` passes of length t + 1 that each carry a log factor.
bool direct_is_cheaper(std::size_t n, std::int64_t t, std::int64_t rounds) {
  const auto logt = static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(t) + 1));
  return static_cast<std::int64_t>(n) <= checked_mul(rounds, logt);
}

ListResult bounded_solution_impl(std::int64_t t, const std::vector<Item>& items, std::int64_t c, bool base_case,
                                 SplitMix64 rng) {
  std::vector<Item> fitting;
  for (const Item& it : items) {
    if (it.size <= t) fitting.push_back(it);
  }
  ListResult result{SolutionProfile(static_cast<std::size_t>(t) + 1, 0), fitting.empty()};
  if (fitting.empty()) return result;
  // Each repetition folds up to min(n, c^2) list profiles.
  const std::int64_t folds = std::min<std::int64_t>(static_cast<std::int64_t>(fitting.size()), c * c);
  if (base_case && direct_is_cheaper(fitting.size(), t, checked_mul(c, folds))) return {classic_dp(t, fitting), true};
  const auto lists = static_cast<std::uint64_t>(c * c);
  for (std::int64_t rep = 0; rep < c; ++rep) {
    SplitMix64 local = rng.split(static_cast<std::uint64_t>(rep));
    std::map<std::uint64_t, SolutionProfile> best_single;
    std::map<std::uint64_t, int> occupancy;
    for (const Item& it : fitting) {
      const std::uint64_t l = local.below(lists);
      auto [pos, fresh] = best_single.try_emplace(l, static_cast<std::size_t>(t) + 1, 0);
      auto& p = pos->second;
      p[static_cast<std::size_t>(it.size)] = std::max(p[static_cast<std::size_t>(it.size)], it.value);
      ++occupancy[l];
    }
    std::vector<SolutionProfile> parts;
    for (auto& [l, p] : best_single) {
      for (std::size_t j = 1; j < p.size(); ++j) p[j] = std::max(p[j], p[j - 1]);
      parts.push_back(std::move(p));
    }
    max_into(result.profile, fold_profiles(std::move(parts), t));
    // One item per list means each list profile is exact, hence so is the fold.
    if (std::all_of(occupancy.begin(), occupancy.end(), [](const auto& kv) { return kv.second == 1; })) {
      result.exact = true;
      break;
    }
  }
  return result;
}

SolutionProfile merge_impl(std::int64_t t, std::vector<KnapsackInstance> insts, std::vector<MaxPlusVec> profs) {
  while (insts.size() > 1) {
    std::vector<KnapsackInstance> next_insts;
    std::vector<MaxPlusVec> next_profs;
    for (std::size_t i = 0; i + 1 < insts.size(); i += 2) {
      MaxPlusVec c = knapsack_conv(insts[i], insts[i + 1], profs[i], profs[i + 1]);
      KnapsackInstance merged;
      merged.capacity = std::min(insts[i].capacity + insts[i + 1].capacity, t);
      merged.items = insts[i].items;
      merged.items.insert(merged.items.end(), insts[i + 1].items.begin(), insts[i + 1].items.end());
      next_profs.push_back(truncate(c, merged.capacity));
      next_insts.push_back(std::move(merged));
    }
    if (insts.size() % 2 == 1) {
      next_insts.push_back(std::move(insts.back()));
      next_profs.push_back(std::move(profs.back()));
    }
    insts = std::move(next_insts);
    profs = std::move(next_profs);
  }
  // Profiles shorter than t + 1 stay flat beyond their capacity.
  SolutionProfile out(static_cast<std::size_t>(t) + 1, 0);
  if (!profs.empty()) {
    const SolutionProfile p = to_profile(profs.front());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = p[std::min(j, p.size() - 1)];
  }
  return out;
}

ListResult bounded_range_impl(std::int64_t t, const std::vector<Item>& items, std::int64_t r1, std::int64_t r2,
                              std::int64_t c, bool base_case, SplitMix64 rng) {
  ListResult result{SolutionProfile(static_cast<std::size_t>(t) + 1, 0), true};
  if (t == 0 || items.empty()) return result;
  const auto lists = static_cast<std::uint64_t>((t + r1 - 1) / r1);
  // Each repetition merges through about log2(lists) levels of length t + 1.
  const std::int64_t levels = std::bit_width(lists);
  if (base_case && direct_is_cheaper(items.size(), t, checked_mul(c, levels))) return {classic_dp(t, items), true};
  // A list holds at most c items of an optimal solution w.h.p., each of size <= r2.
  const std::int64_t list_cap = std::min(checked_mul(c, r2), t);
  result.exact = false;
  for (std::int64_t rep = 0; rep < c; ++rep) {
    const SplitMix64 rep_rng = rng.split(static_cast<std::uint64_t>(rep));
    SplitMix64 assign = rep_rng.split(0);
    std::map<std::uint64_t, std::vector<Item>> by_list;
    for (const Item& it : items) by_list[assign.below(lists)].push_back(it);
    std::vector<KnapsackInstance> insts;
    std::vector<MaxPlusVec> profs;
    bool exact = true;
    for (const auto& [l, list_items] : by_list) {
      const ListResult lr = bounded_solution_impl(list_cap, list_items, c, base_case, rep_rng.split(l + 1));
      std::int64_t total = 0;
      for (const Item& it : list_items) total = checked_add(total, it.size);
      exact = exact && lr.exact && (total <= list_cap || list_cap == t);
      insts.push_back({list_cap, list_items});
      profs.push_back(to_maxplus(lr.profile));
    }
    max_into(result.profile, merge_impl(t, std::move(insts), std::move(profs)));
    if (exact) {
      result.exact = true;
      break;
    }
  }
  return result;
}

}  // namespace

std::int64_t default_repetitions(std::int64_t t) {
  const auto log2_ceil = static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(t + 2) - 1));
  return std::max<std::int64_t>(4, log2_ceil + 2);
}

SolutionProfile bounded_solution_knapsack(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg) {
  require(t >= 0, "capacity must be non-negative");
  require_zero_one(items);
  return bounded_solution_impl(t, items, effective_c(cfg, t), cfg.exact_base_case, SplitMix64(cfg.seed)).profile;
}

SolutionProfile bounded_range_knapsack(std::int64_t t, const std::vector<Item>& items, std::int64_t r1, std::int64_t r2,
                                       const SolverConfig& cfg) {
  require(t >= 0, "capacity must be non-negative");
  require(r1 >= 1 && r1 <= r2 && r2 <= 2 * r1, "size range must satisfy 1 <= r1 <= r2 <= 2 r1");
  require_zero_one(items);
  for (const Item& it : items) require(it.size >= r1 && it.size <= r2, "item size outside [r1, r2]");
  std::vector<Item> fitting;
  for (const Item& it : items) {
    if (it.size <= t) fitting.push_back(it);
  }
  return bounded_range_impl(t, fitting, r1, r2, effective_c(cfg, t), cfg.exact_base_case, SplitMix64(cfg.seed))
      .profile;
}

SolutionProfile merge_knapsack_profiles(std::int64_t t, const std::vector<KnapsackInstance>& instances,
                                        const std::vector<SolutionProfile>& profiles) {
  require(t >= 0, "capacity must be non-negative");
  require(instances.size() == profiles.size(), "one profile per instance");
  std::vector<KnapsackInstance> insts;
  std::vector<MaxPlusVec> profs;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    require(profiles[i].size() == static_cast<std::size_t>(instances[i].capacity) + 1,
            "profile length must be capacity + 1");
    const std::int64_t cap = std::min(instances[i].capacity, t);
    insts.push_back({cap, instances[i].items});
    profs.push_back(truncate(to_maxplus(profiles[i]), cap));
  }
  return merge_impl(t, std::move(insts), std::move(profs));
}

SolutionProfile knapsack_via_conv(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg) {
  require(t >= 0, "capacity must be non-negative");
  require_zero_one(items);
  const std::int64_t c = effective_c(cfg, t);
  const SplitMix64 rng(cfg.seed);
  // Bucket i holds sizes in [2^(i-1), 2^i - 1].
  std::map<int, std::vector<Item>> buckets;
  for (const Item& it : items) {
    if (it.size <= t) buckets[std::bit_width(static_cast<std::uint64_t>(it.size))].push_back(it);
  }
  std::vector<KnapsackInstance> insts;
  std::vector<MaxPlusVec> profs;
  for (const auto& [i, bucket] : buckets) {
    const std::int64_t r1 = std::int64_t{1} << (i - 1);
    const std::int64_t r2 = std::min<std::int64_t>((std::int64_t{1} << i) - 1, 2 * r1);
    const ListResult br = bounded_range_impl(t, bucket, r1, r2, c, cfg.exact_base_case, rng.split(static_cast<std::uint64_t>(i)));
    insts.push_back({t, bucket});
    profs.push_back(to_maxplus(br.profile));
  }
  return merge_impl(t, std::move(insts), std::move(profs));
}

}  // namespace maxknap
