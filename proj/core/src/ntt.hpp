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

#ifndef MAXKNAP_SRC_NTT_HPP_
#define MAXKNAP_SRC_NTT_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace maxknap::internal {

namespace ntt_detail {

// -p^{-1} mod 2^32 by Newton iteration.
constexpr std::uint32_t neg_inverse(std::uint32_t p) noexcept {
  std::uint32_t inv = p;
  for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
  return ~inv + 1;
}

// 2^64 mod p, used to enter Montgomery form.
constexpr std::uint32_t r_squared(std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>((static_cast<unsigned __int128>(1) << 64) % p);
}

}  // namespace ntt_detail

// Number-theoretic transform modulo 998244353 = 119 * 2^23 + 1 on power-of-two
// lengths up to 2^23. Values are kept in Montgomery form throughout.
class Ntt {
 public:
  static constexpr std::uint32_t kModulus = 998244353;
  static constexpr std::size_t kMaxLength = std::size_t{1} << 23;

  explicit Ntt(std::size_t length);

  std::size_t length() const noexcept { return n_; }

  static constexpr std::uint32_t reduce(std::uint64_t t) noexcept {
    const std::uint32_t m = static_cast<std::uint32_t>(t) * kNegInverse;
    const auto u = static_cast<std::uint32_t>((t + static_cast<std::uint64_t>(m) * kModulus) >> 32);
    return u >= kModulus ? u - kModulus : u;
  }
  static constexpr std::uint32_t encode(std::uint32_t x) noexcept {
    return reduce(static_cast<std::uint64_t>(x) * kR2);
  }
  // Plain residue of a Montgomery value.
  static constexpr std::uint32_t decode(std::uint32_t a) noexcept { return reduce(a); }
  static constexpr std::uint32_t zero() noexcept { return 0; }
  static constexpr std::uint32_t one() noexcept { return encode(1); }
  static constexpr std::uint32_t mul(std::uint32_t a, std::uint32_t b) noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  static constexpr std::uint32_t add(std::uint32_t a, std::uint32_t b) noexcept {
    const std::uint32_t s = a + b;
    return s >= kModulus ? s - kModulus : s;
  }
  static constexpr std::uint32_t sub(std::uint32_t a, std::uint32_t b) noexcept {
    return a >= b ? a - b : a + kModulus - b;
  }

  // Forward transform; the output is in bit-reversed order.
  void forward(std::vector<std::uint32_t>& a) const;
  // Inverse of forward without the 1/length scaling, so the result is length
  // times the original input.
  void inverse_unscaled(std::vector<std::uint32_t>& a) const;
  // sum[k] += x[k] * y[k] for every k.
  void multiply_accumulate(std::vector<std::uint32_t>& sum, const std::vector<std::uint32_t>& x,
                           const std::vector<std::uint32_t>& y) const;

 private:
  static constexpr std::uint32_t kNegInverse = ntt_detail::neg_inverse(kModulus);
  static constexpr std::uint32_t kR2 = ntt_detail::r_squared(kModulus);

  std::size_t n_;
  // roots_[len + j] = w_{2 len}^j for each power of two len < n_.
  std::vector<std::uint32_t> roots_;
  std::vector<std::uint32_t> inv_roots_;
};

}  // namespace maxknap::internal

#endif  // MAXKNAP_SRC_NTT_HPP_
