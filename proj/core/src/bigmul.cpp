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

#include "bigmul.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>

namespace maxknap::internal {

static_assert(sizeof(mp_limb_t) == sizeof(std::uint64_t) && GMP_NUMB_BITS == 64,
              "64-bit GMP limbs required");

namespace {

Limbs multiply_gmp(const Limbs& a, const Limbs& b) {
  Limbs r(a.size() + b.size(), 0);
  const Limbs& big = a.size() >= b.size() ? a : b;
  const Limbs& small = a.size() >= b.size() ? b : a;
  auto* rp = reinterpret_cast<mp_limb_t*>(r.data());
  const auto* up = reinterpret_cast<const mp_limb_t*>(big.data());
  const auto* vp = reinterpret_cast<const mp_limb_t*>(small.data());
  const auto un = static_cast<mp_size_t>(big.size());
  const auto vn = static_cast<mp_size_t>(small.size());
  if (&a == &b) {
    mpn_sqr(rp, up, un);
  } else {
    mpn_mul(rp, up, un, vp, vn);
  }
  return r;
}

Limbs multiply_schoolbook(const Limbs& a, const Limbs& b) {
  Limbs r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    unsigned __int128 carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      unsigned __int128 cur = static_cast<unsigned __int128>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
    for (std::size_t k = i + b.size(); carry != 0; ++k) {
      unsigned __int128 cur = static_cast<unsigned __int128>(r[k]) + carry;
      r[k] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
  }
  return r;
}

}  // namespace

Limbs multiply(const Limbs& a, const Limbs& b, MulBackend backend) {
  if (a.empty() || b.empty()) return Limbs(a.size() + b.size(), 0);
  return backend == MulBackend::kSchoolbook ? multiply_schoolbook(a, b) : multiply_gmp(a, b);
}

std::int64_t top_bit_in_range(const Limbs& limbs, std::uint64_t lo, std::uint64_t hi) {
  if (hi <= lo) return -1;
  std::uint64_t first = lo >> 6;
  std::uint64_t last = (hi - 1) >> 6;
  for (std::uint64_t l = last + 1; l-- > first;) {
    if (l >= limbs.size()) continue;
    std::uint64_t word = limbs[l];
    if (l == last && ((hi & 63) != 0)) word &= (std::uint64_t{1} << (hi & 63)) - 1;
    if (l == first) word &= ~std::uint64_t{0} << (lo & 63);
    if (word != 0) {
      const std::uint64_t bit = l * 64 + 63 - static_cast<std::uint64_t>(std::countl_zero(word));
      return static_cast<std::int64_t>(bit - lo);
    }
  }
  return -1;
}

}  // namespace maxknap::internal
