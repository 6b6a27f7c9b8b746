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

#include "maxknap/maxplus.hpp"

#include <algorithm>

#include "maxknap/errors.hpp"

namespace maxknap {

MaxPlusVec::MaxPlusVec(std::initializer_list<ExtVal> init) : elems_(init) {
  require(!elems_.empty(), "MaxPlusVec must be non-empty");
}

MaxPlusVec::MaxPlusVec(std::vector<ExtVal> elems) : elems_(std::move(elems)) {
  require(!elems_.empty(), "MaxPlusVec must be non-empty");
}

MaxPlusVec::MaxPlusVec(std::size_t n, ExtVal fill) : elems_(n, fill) {
  require(n > 0, "MaxPlusVec must be non-empty");
}

MaxPlusVec MaxPlusVec::from_ints(std::span<const std::int64_t> values) {
  return MaxPlusVec(std::vector<ExtVal>(values.begin(), values.end()));
}

bool MaxPlusVec::all_finite() const noexcept {
  return std::all_of(elems_.begin(), elems_.end(), [](ExtVal v) { return v.is_finite(); });
}

std::vector<std::int64_t> MaxPlusVec::to_ints() const {
  std::vector<std::int64_t> out;
  out.reserve(elems_.size());
  for (ExtVal v : elems_) out.push_back(v.value());
  return out;
}

ExtVal MaxPlusVec::max_finite() const noexcept {
  ExtVal best = ExtVal::neg_inf();
  for (ExtVal v : elems_) {
    if (v.is_finite() && v > best) best = v;
  }
  return best;
}

MaxPlusVec MaxPlusVec::prefix(std::size_t len) const {
  require(len > 0, "prefix length must be positive");
  len = std::min(len, elems_.size());
  return MaxPlusVec(std::vector<ExtVal>(elems_.begin(), elems_.begin() + static_cast<std::ptrdiff_t>(len)));
}

std::ostream& operator<<(std::ostream& os, const MaxPlusVec& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ']';
}

ExtVal conv_term(ExtVal x, ExtVal y) {
  if (x.is_neg_inf() || y.is_neg_inf()) return ExtVal::neg_inf();
  return x + y;
}

namespace {

MaxPlusVec naive_conv_finite(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<std::int64_t> c(n, INT64_MIN);
  bool overflow = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t ai = a[i];
    std::int64_t* out = c.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::int64_t s;
      overflow |= __builtin_add_overflow(ai, b[j], &s);
      out[j] = std::max(out[j], s);
    }
  }
  if (overflow) throw OverflowError("int64 addition overflow in convolution");
  return MaxPlusVec::from_ints(c);
}

}  // namespace

MaxPlusVec naive_conv(const MaxPlusVec& a, const MaxPlusVec& b) {
  if (a.all_finite() && b.all_finite()) return naive_conv_finite(a.to_ints(), b.to_ints());
  MaxPlusVec c(a.size() + b.size() - 1, ExtVal::neg_inf());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_neg_inf()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = std::max(c[i + j], conv_term(a[i], b[j]));
    }
  }
  return c;
}

namespace {

MaxPlusVec negated(const MaxPlusVec& v) {
  std::vector<ExtVal> out;
  out.reserve(v.size());
  for (ExtVal x : v) out.push_back(-x);
  return MaxPlusVec(std::move(out));
}

}  // namespace

MaxPlusVec naive_min_conv(const MaxPlusVec& a, const MaxPlusVec& b) {
  return negated(naive_conv(negated(a), negated(b)));
}

MaxPlusVec naive_power(const MaxPlusVec& a, std::int64_t k) {
  require(k >= 1, "naive_power requires k >= 1");
  MaxPlusVec acc = a;
  for (std::int64_t i = 1; i < k; ++i) acc = naive_conv(acc, a);
  return acc;
}

void max_merge(MaxPlusVec& dst, const MaxPlusVec& src, std::size_t offset) {
  for (std::size_t i = 0; i < src.size() && offset + i < dst.size(); ++i) {
    if (src[i] > dst[offset + i]) dst[offset + i] = src[i];
  }
}

}  // namespace maxknap
