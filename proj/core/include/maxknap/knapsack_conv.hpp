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

#ifndef MAXKNAP_KNAPSACK_CONV_HPP_
#define MAXKNAP_KNAPSACK_CONV_HPP_

#include <cstdint>
#include <vector>

#include "maxknap/knapsack_types.hpp"
#include "maxknap/maxplus.hpp"
#include "maxknap/prediction.hpp"
#include "maxknap/rational.hpp"

namespace maxknap {

// Fractional greedy profile over capacities 0..T. For a merged profile,
// used_a[y] and used_b[y] give how much of capacity y the greedy spends on
// each side, including idle capacity; they are empty for a single instance.
struct FracProfile {
  std::vector<Rational> values;
  std::vector<std::int64_t> used_a;
  std::vector<std::int64_t> used_b;
};

// Greedy fractional optimum of a 0/1 instance at every capacity up to its
// capacity. Items are taken by decreasing value/size, ties by smaller size,
// then input order.
FracProfile greedy_fractional_profile(const KnapsackInstance& inst);

// Greedy fractional optimum over A and B jointly at every capacity up to
// t_a + t_b, never spending more than t_a on A or t_b on B.
FracProfile fractional_conv_profile(const KnapsackInstance& a_inst, const KnapsackInstance& b_inst);

// Certificate for profile(A) * profile(B) with e_max = 4 * v_max, derived
// from the fractional profiles alone.
UncertainSolution knapsack_certificate(const KnapsackInstance& a_inst, const KnapsackInstance& b_inst);

// profile(A) * profile(B) for 0/1 instances, where a and b are their exact
// solution profiles (lengths t_a + 1 and t_b + 1). Profiles that are only
// feasible lower bounds yield a feasible, non-decreasing lower bound.
MaxPlusVec knapsack_conv(const KnapsackInstance& a_inst, const KnapsackInstance& b_inst, const MaxPlusVec& a,
                         const MaxPlusVec& b, const PredictionOptions& options = {});

}  // namespace maxknap

#endif  // MAXKNAP_KNAPSACK_CONV_HPP_
