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

#ifndef MAXKNAP_MAXPLUS_HPP_
#define MAXKNAP_MAXPLUS_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "maxknap/ext_val.hpp"

namespace maxknap {

// A non-empty sequence of extended integers. Reads past the end yield -inf.
class MaxPlusVec {
 public:
  MaxPlusVec(std::initializer_list<ExtVal> init);
  explicit MaxPlusVec(std::vector<ExtVal> elems);
  MaxPlusVec(std::size_t n, ExtVal fill);

  static MaxPlusVec from_ints(std::span<const std::int64_t> values);

  std::size_t size() const noexcept { return elems_.size(); }
  ExtVal operator[](std::size_t i) const { return elems_[i]; }
  ExtVal& operator[](std::size_t i) { return elems_[i]; }
  ExtVal padded(std::size_t i) const { return i < elems_.size() ? elems_[i] : ExtVal::neg_inf(); }

  std::span<const ExtVal> elems() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool all_finite() const noexcept;
  // Finite values; throws DomainError if any entry is infinite.
  std::vector<std::int64_t> to_ints() const;
  // Largest finite entry, or -inf if there is none.
  ExtVal max_finite() const noexcept;
  // The first min(len, size()) entries; len must be positive.
  MaxPlusVec prefix(std::size_t len) const;

  friend bool operator==(const MaxPlusVec& a, const MaxPlusVec& b) = default;

 private:
  std::vector<ExtVal> elems_;
};

std::ostream& operator<<(std::ostream& os, const MaxPlusVec& v);

// Pair term of a convolution: -inf if either side is -inf, else checked sum.
ExtVal conv_term(ExtVal x, ExtVal y);

// c_i = max_j (a_j + b_{i-j}), |c| = |a| + |b| - 1, by direct evaluation.
MaxPlusVec naive_conv(const MaxPlusVec& a, const MaxPlusVec& b);

// c_i = min_j (a_j + b_{i-j}); +inf plays the role -inf plays in naive_conv.
MaxPlusVec naive_min_conv(const MaxPlusVec& a, const MaxPlusVec& b);

// a convolved with itself k times (k >= 1), |result| = k(|a| - 1) + 1.
MaxPlusVec naive_power(const MaxPlusVec& a, std::int64_t k);

// dst[offset + i] = max(dst[offset + i], src[i]) for every i inside dst.
void max_merge(MaxPlusVec& dst, const MaxPlusVec& src, std::size_t offset);

}  // namespace maxknap

#endif  // MAXKNAP_MAXPLUS_HPP_
