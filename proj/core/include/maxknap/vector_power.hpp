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

#ifndef MAXKNAP_VECTOR_POWER_HPP_
#define MAXKNAP_VECTOR_POWER_HPP_

#include <cstdint>
#include <optional>

#include "maxknap/knapsack_types.hpp"
#include "maxknap/maxplus.hpp"
#include "maxknap/prediction.hpp"

namespace maxknap {

// Certificate for hi * lo where hi = a^k, lo = a^k', |k - k'| <= 1 and a has
// entries in [0, e]. Row i spans the columns whose lo-prefix-max is close to
// hi's prefix max at i; the window grows with the largest drop of each
// operand below its running maximum. The error bound is 5e whenever neither
// operand drops more than e below its running maximum, which holds on the
// first |a| entries of any power.
UncertainSolution power_certificate(const MaxPlusVec& hi, const MaxPlusVec& lo, std::int64_t e);

// hi * lo via power_certificate and conv_via_prediction.
MaxPlusVec fast_power_step(const MaxPlusVec& hi, const MaxPlusVec& lo, std::int64_t e,
                           const PredictionOptions& options = {});

// a^k for k >= 1 and entries in [0, max(a)], by halving k. With prefix_cap set,
// only the first prefix_cap entries are produced, which requires a_0 = 0.
MaxPlusVec fast_power(const MaxPlusVec& a, std::int64_t k, std::optional<std::size_t> prefix_cap = std::nullopt,
                      const PredictionOptions& options = {});

// Unbounded knapsack profile over capacities 0..t: the t-th power of the
// best-item-per-size vector.
SolutionProfile unbounded_via_power(std::int64_t t, const std::vector<Item>& items,
                                    const PredictionOptions& options = {});

}  // namespace maxknap

#endif  // MAXKNAP_VECTOR_POWER_HPP_
