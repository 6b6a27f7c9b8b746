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

#include "maxknap/knapsack_types.hpp"

#include <algorithm>

#include "maxknap/errors.hpp"

namespace maxknap {

void validate_items(const std::vector<Item>& items) {
  for (const Item& it : items) {
    require(it.size >= 1, "item sizes must be positive");
    require(it.value >= 0, "item values must be non-negative");
    require(it.multiplicity >= 1 || it.unbounded(), "item multiplicity must be positive or unbounded");
  }
}

void validate_instance(const KnapsackInstance& inst) {
  require(inst.capacity >= 0, "capacity must be non-negative");
  validate_items(inst.items);
}

std::int64_t max_value(const std::vector<Item>& items) {
  std::int64_t m = 0;
  for (const Item& it : items) m = std::max(m, it.value);
  return m;
}

std::int64_t max_size(const std::vector<Item>& items) {
  std::int64_t m = 0;
  for (const Item& it : items) m = std::max(m, it.size);
  return m;
}

bool better_ratio(const Item& a, const Item& b) {
  return static_cast<__int128>(a.value) * b.size > static_cast<__int128>(b.value) * a.size;
}

MaxPlusVec to_maxplus(const SolutionProfile& p) { return MaxPlusVec::from_ints(p); }

SolutionProfile to_profile(const MaxPlusVec& v) { return v.to_ints(); }

}  // namespace maxknap
