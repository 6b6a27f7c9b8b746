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

#ifndef MAXKNAP_SOLVERS_HPP_
#define MAXKNAP_SOLVERS_HPP_

#include <cstdint>
#include <vector>

#include "maxknap/knapsack_types.hpp"

namespace maxknap {

// Exact profile over capacities 0..t for 0/1, bounded and unbounded items.
// Bounded multiplicities use a sliding-window maximum per size residue.
SolutionProfile classic_dp(std::int64_t t, const std::vector<Item>& items);

// Repetition count for the convolution-based solvers when c_const is unset:
// max(4, ceil(log2(t + 2)) + 2).
std::int64_t default_repetitions(std::int64_t t);

// Profile over 0..t of solutions with few items: C rounds of scattering the
// items into C^2 lists and combining each list's best single item. Stops
// early once a round separates every item, which makes it exact. With
// exact_base_case set, inputs small enough for direct DP to beat the rounds
// are solved directly.
SolutionProfile bounded_solution_knapsack(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg = {});

// Profile over 0..t for 0/1 items whose sizes lie in [r1, r2] with r2 <= 2 r1.
// Honors exact_base_case like bounded_solution_knapsack, for the whole input
// and for each list.
SolutionProfile bounded_range_knapsack(std::int64_t t, const std::vector<Item>& items, std::int64_t r1, std::int64_t r2,
                                       const SolverConfig& cfg = {});

// Combines exact 0/1 profiles of disjoint item sets with knapsack
// convolutions along a balanced tree, truncating to capacity t.
SolutionProfile merge_knapsack_profiles(std::int64_t t, const std::vector<KnapsackInstance>& instances,
                                        const std::vector<SolutionProfile>& profiles);

// 0/1 knapsack profile over 0..t: items are bucketed by size into dyadic
// ranges, each bucket is solved by bounded_range_knapsack and the bucket
// profiles are merged. Correct with high probability, never above optimum.
SolutionProfile knapsack_via_conv(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg = {});

struct SmallSizesResult {
  std::int64_t optimum = 0;
  // Best values for the capacities window_lo .. window_lo + window.size() - 1
  // in the final merge; empty when every item fits.
  std::int64_t window_lo = 0;
  std::vector<std::int64_t> window;
};

// Optimum at capacity t for 0/1 items of small size: items are scattered into
// ceil(t / s_max) buckets, each solved exactly, then merged pairwise while
// keeping only capacities near each group's expected share. The window
// constant defaults to ceil(40 ln(n + 2)). With exact_base_case set, the
// merge work is computed up front and direct DP is used when it is cheaper;
// the window then covers 0..t.
SmallSizesResult knapsack_small_sizes(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg = {});

// Optimum at capacity t with unbounded items: most copies of the best-ratio
// item are committed greedily, the remainder (capacity about s_max^2) is
// solved exactly or by the small-size solver.
std::int64_t knapsack_infinite_mult(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg = {});

// Optimum at capacity t with bounded multiplicities, using the same greedy
// commitment over items sorted by ratio.
std::int64_t knapsack_given_mult(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg = {});

// Optimum at capacity t with unbounded items of small size, via the
// small-size solver on the best item per size. Copies are grouped in powers
// of two unless literal_expansion is set.
std::int64_t unbounded_small_sizes(std::int64_t t, const std::vector<Item>& items, const SolverConfig& cfg = {},
                                   bool literal_expansion = false);

// 0/1 items equivalent to `copies` copies of it: single copies, or groups of
// 1, 2, 4, ... copies plus a remainder.
std::vector<Item> expand_copies(const Item& it, std::int64_t copies, bool literal);

}  // namespace maxknap

#endif  // MAXKNAP_SOLVERS_HPP_
