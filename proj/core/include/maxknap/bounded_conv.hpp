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

#ifndef MAXKNAP_BOUNDED_CONV_HPP_
#define MAXKNAP_BOUNDED_CONV_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxknap/maxplus.hpp"

namespace maxknap {

// How the counting product behind bounded_range_conv is computed. kGmp packs
// both operands into big integers and multiplies them with GMP. kSchoolbook
// does the same with a quadratic multiplier kept for differential testing.
// kNtt transforms one indicator vector per value modulo a prime. kAuto picks
// kNtt for small e_max and moderate lengths and kGmp otherwise.
// kronecker_product always builds big integers and treats kAuto and kNtt as kGmp.
enum class MulBackend { kAuto, kGmp, kSchoolbook, kNtt };

// Product of two vectors packed as big integers. Entry v of the inputs is
// encoded as base^v with base = 2^digit_bits > min(|a|, |b|); -inf encodes as 0.
// Each output coefficient occupies its own slot of slot_bits bits.
struct KroneckerProduct {
  int digit_bits = 0;
  std::int64_t slot_bits = 0;
  std::size_t slots = 0;
  std::vector<std::uint64_t> limbs;

  // Position of the highest set bit of coefficient i within its slot, or -1.
  std::int64_t slot_top_bit(std::size_t i) const;
  // Little-endian 64-bit limbs of coefficient i.
  std::vector<std::uint64_t> slot_limbs(std::size_t i) const;
};

// Finite entries must lie in [0, e_max]; +inf entries are not encoded.
KroneckerProduct kronecker_product(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e_max,
                                   MulBackend backend = MulBackend::kAuto);

// Exact (max,+) convolution of vectors whose finite entries lie in [0, e_max].
// The packed path does one big-integer multiplication of about
// (|a|+|b|)(2 e_max + 1) log n bits. The transform path does 4 e_max + 3
// transforms of length bit_ceil(|a|+|b|-1) plus (e_max+1)^2 pointwise passes.
// -inf and +inf entries are allowed.
MaxPlusVec bounded_range_conv(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e_max,
                              MulBackend backend = MulBackend::kAuto);

// Rationals numerator / denominator sharing one positive denominator.
struct ScaledVec {
  std::vector<ExtVal> numerators;
  std::int64_t denominator = 1;
};

// c = (floor(2a) * floor(2b)) / 2, which satisfies (a*b)_i - 1 < c_i <= (a*b)_i.
// Denominators must be powers of two up to 2^20 and finite values must lie in
// [0, e_max]. The result has denominator 2.
ScaledVec approx_conv(const ScaledVec& a, const ScaledVec& b, std::int64_t e_max,
                      MulBackend backend = MulBackend::kAuto);

}  // namespace maxknap

#endif  // MAXKNAP_BOUNDED_CONV_HPP_
