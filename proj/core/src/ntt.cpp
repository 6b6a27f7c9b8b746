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

#include "ntt.hpp"

#include <bit>

#include "maxknap/errors.hpp"

namespace maxknap::internal {

namespace {

constexpr std::uint32_t kP = Ntt::kModulus;
constexpr std::uint32_t kGenerator = 3;

std::uint32_t power(std::uint32_t base, std::uint64_t exp) {
  std::uint32_t result = Ntt::one(), b = Ntt::encode(base);
  for (; exp != 0; exp >>= 1) {
    if (exp & 1) result = Ntt::mul(result, b);
    b = Ntt::mul(b, b);
  }
  return result;
}

}  // namespace

// Vector-friendly loops get an AVX2 clone on x86-64, picked at load time.
#if defined(__x86_64__) && defined(__GNUC__) && !defined(__clang__)
#define MAXKNAP_VECTOR_CLONES __attribute__((target_clones("avx2", "default")))
#else
#define MAXKNAP_VECTOR_CLONES
#endif

Ntt::Ntt(std::size_t length) : n_(length), roots_(length), inv_roots_(length) {
  require(std::has_single_bit(length) && length <= kMaxLength, "transform length must be a power of two up to 2^23");
  for (std::size_t len = 1; len < n_; len <<= 1) {
    const std::uint32_t w = power(kGenerator, (kP - 1) / (2 * len));
    const std::uint32_t w_inv = power(kGenerator, (kP - 1) - (kP - 1) / (2 * len));
    std::uint32_t cur = one(), cur_inv = one();
    for (std::size_t j = 0; j < len; ++j) {
      roots_[len + j] = cur;
      inv_roots_[len + j] = cur_inv;
      cur = mul(cur, w);
      cur_inv = mul(cur_inv, w_inv);
    }
  }
}

MAXKNAP_VECTOR_CLONES void Ntt::forward(std::vector<std::uint32_t>& a) const {
  for (std::size_t len = n_ >> 1; len >= 1; len >>= 1) {
    const std::uint32_t* w = roots_.data() + len;
    for (std::size_t i = 0; i < n_; i += 2 * len) {
      std::uint32_t* lo = a.data() + i;
      std::uint32_t* hi = lo + len;
      for (std::size_t j = 0; j < len; ++j) {
        const std::uint32_t u = lo[j], v = hi[j];
        lo[j] = add(u, v);
        hi[j] = mul(sub(u, v), w[j]);
      }
    }
  }
}

MAXKNAP_VECTOR_CLONES void Ntt::inverse_unscaled(std::vector<std::uint32_t>& a) const {
  for (std::size_t len = 1; len < n_; len <<= 1) {
    const std::uint32_t* w = inv_roots_.data() + len;
    for (std::size_t i = 0; i < n_; i += 2 * len) {
      std::uint32_t* lo = a.data() + i;
      std::uint32_t* hi = lo + len;
      for (std::size_t j = 0; j < len; ++j) {
        const std::uint32_t u = lo[j], v = mul(hi[j], w[j]);
        lo[j] = add(u, v);
        hi[j] = sub(u, v);
      }
    }
  }
}

MAXKNAP_VECTOR_CLONES void Ntt::multiply_accumulate(std::vector<std::uint32_t>& sum,
                                                    const std::vector<std::uint32_t>& x,
                                                    const std::vector<std::uint32_t>& y) const {
  for (std::size_t k = 0; k < n_; ++k) sum[k] = add(sum[k], mul(x[k], y[k]));
}

}  // namespace maxknap::internal
