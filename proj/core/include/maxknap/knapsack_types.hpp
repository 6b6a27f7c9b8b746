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

#ifndef MAXKNAP_KNAPSACK_TYPES_HPP_
#define MAXKNAP_KNAPSACK_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "maxknap/maxplus.hpp"

namespace maxknap {

inline constexpr std::int64_t kUnbounded = -1;

struct Item {
  std::int64_t size = 1;
  std::int64_t value = 0;
  // Number of available copies, or kUnbounded.
  std::int64_t multiplicity = 1;

  bool unbounded() const noexcept { return multiplicity == kUnbounded; }
  friend bool operator==(const Item&, const Item&) = default;
};

struct KnapsackInstance {
  std::int64_t capacity = 0;
  std::vector<Item> items;
};

// Entry j is the best total value of a packing of total size at most j.
using SolutionProfile = std::vector<std::int64_t>;

// Sizes >= 1, values >= 0, multiplicities >= 1 or kUnbounded; throws DomainError.
void validate_items(const std::vector<Item>& items);
void validate_instance(const KnapsackInstance& inst);

std::int64_t max_value(const std::vector<Item>& items);
std::int64_t max_size(const std::vector<Item>& items);

// True iff item a has a strictly better value-to-size ratio than item b.
bool better_ratio(const Item& a, const Item& b);

MaxPlusVec to_maxplus(const SolutionProfile& p);
SolutionProfile to_profile(const MaxPlusVec& v);

struct SolverConfig {
  // Repetition and window constant; each solver documents its default.
  std::optional<std::int64_t> c_const;
  // Independent repetitions for solvers that take the best of several runs.
  std::int64_t repetitions = 2;
  std::uint64_t seed = 0;
  // Solve a randomized subproblem by direct dynamic programming when that is
  // cheaper than its list fold. The result is then exact.
  bool exact_base_case = true;
};

}  // namespace maxknap

#endif  // MAXKNAP_KNAPSACK_TYPES_HPP_
