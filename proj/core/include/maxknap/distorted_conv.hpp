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

#ifndef MAXKNAP_DISTORTED_CONV_HPP_
#define MAXKNAP_DISTORTED_CONV_HPP_

#include <cstdint>
#include <vector>

#include "maxknap/bounded_conv.hpp"
#include "maxknap/maxplus.hpp"

namespace maxknap {

// Largest gap (a*b)_{i+j} - a_i - b_j over all index pairs of finite vectors.
std::int64_t distortion(const MaxPlusVec& a, const MaxPlusVec& b);

// True iff every pair sum a_i + b_j is within e of (a*b)_{i+j}.
bool check_distortion(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e);

// Equal-length operands after adding a common linear ramp and offsets, stored
// as exact integers over `scale`. For distortion-e inputs the shifted values
// satisfy a' in [e, 5e] and b' in [0, 6e].
struct RampTransform {
  std::int64_t scale = 1;
  std::vector<__int128> a_scaled;
  std::vector<__int128> b_scaled;
};

RampTransform ramp_transform(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e);

// Exact convolution of equal-length finite vectors. With distortion at most e
// the work is one bounded-range product over a range of 12e; inputs whose
// transformed range exceeds that, or exceeds 64 times the length, fall back to
// direct evaluation.
MaxPlusVec distorted_square_conv(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e,
                                 MulBackend backend = MulBackend::kAuto);

// Exact convolution of finite vectors of any lengths, tiling the longer
// operand with windows of the shorter one's length.
MaxPlusVec distorted_conv(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e,
                          MulBackend backend = MulBackend::kAuto);

}  // namespace maxknap

#endif  // MAXKNAP_DISTORTED_CONV_HPP_
