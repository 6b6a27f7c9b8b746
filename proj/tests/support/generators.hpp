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

#ifndef MAXKNAP_TESTS_SUPPORT_GENERATORS_HPP_
#define MAXKNAP_TESTS_SUPPORT_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "maxknap/knapsack_types.hpp"
#include "maxknap/maxplus.hpp"
#include "maxknap/prediction.hpp"
#include "maxknap/rng.hpp"

namespace maxknap::testing {

// Entries uniform in [lo, hi]; each is -inf or +inf with the given
// probabilities in percent.
MaxPlusVec random_vec(SplitMix64& rng, std::size_t len, std::int64_t lo, std::int64_t hi, int neg_inf_pct = 0,
                      int pos_inf_pct = 0);

// A pair with a common linear trend plus noise in [0, e / 2], so its
// distortion is at most e. Offsets and slope are arbitrary.
struct RampPair {
  MaxPlusVec a;
  MaxPlusVec b;
};
RampPair ramp_pair(SplitMix64& rng, std::size_t la, std::size_t lb, std::int64_t e);

// A valid certificate for finite a * b: one optimal witness per output
// index, rows widened to be monotone, e_max set to the largest in-row gap.
UncertainSolution witness_certificate(const MaxPlusVec& a, const MaxPlusVec& b, SplitMix64& rng);

// 0/1 items with sizes in [1, s_max] and values in [0, v_max].
std::vector<Item> random_items(SplitMix64& rng, std::size_t n, std::int64_t s_max, std::int64_t v_max,
                               std::int64_t multiplicity = 1);

}  // namespace maxknap::testing

#endif  // MAXKNAP_TESTS_SUPPORT_GENERATORS_HPP_
