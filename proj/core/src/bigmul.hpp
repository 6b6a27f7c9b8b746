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

#ifndef MAXKNAP_SRC_BIGMUL_HPP_
#define MAXKNAP_SRC_BIGMUL_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxknap/bounded_conv.hpp"

namespace maxknap::internal {

using Limbs = std::vector<std::uint64_t>;

// Little-endian product; the result has a.size() + b.size() limbs.
Limbs multiply(const Limbs& a, const Limbs& b, MulBackend backend);

inline void set_bit(Limbs& limbs, std::uint64_t pos) { limbs[pos >> 6] |= std::uint64_t{1} << (pos & 63); }

// Highest set bit in [lo, hi) relative to lo, or -1.
std::int64_t top_bit_in_range(const Limbs& limbs, std::uint64_t lo, std::uint64_t hi);

}  // namespace maxknap::internal

#endif  // MAXKNAP_SRC_BIGMUL_HPP_
