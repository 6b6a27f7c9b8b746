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

#include "maxknap/distorted_conv.hpp"

#include <algorithm>

#include "maxknap/errors.hpp"

namespace maxknap {

namespace {

__int128 floor_div(__int128 p, __int128 q) {
  __int128 d = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
  return d;
}

__int128 ceil_div(__int128 p, __int128 q) { return -floor_div(-p, q); }

}  // namespace

std::int64_t distortion(const MaxPlusVec& a, const MaxPlusVec& b) {
  require(a.all_finite() && b.all_finite(), "distortion requires finite vectors");
  const MaxPlusVec c = naive_conv(a, b);
  std::int64_t worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const __int128 gap = static_cast<__int128>(c[i + j].value()) - a[i].value() - b[j].value();
      worst = std::max(worst, narrow_checked(gap));
    }
  }
  return worst;
}

bool check_distortion(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e) {
  return distortion(a, b) <= e;
}

RampTransform ramp_transform(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e) {
  require(a.size() == b.size() && a.size() >= 2, "ramp_transform needs equal lengths >= 2");
  require(a.all_finite() && b.all_finite(), "ramp_transform requires finite vectors");
  require(e >= 0, "e must be non-negative");
  const std::size_t n = a.size();
  const __int128 d = static_cast<__int128>(n - 1);
  const __int128 a0 = a[0].value(), alast = a[n - 1].value(), blast = b[n - 1].value();
  const __int128 slope = a0 - alast;
  const __int128 e128 = e;
  RampTransform t;
  t.scale = static_cast<std::int64_t>(n - 1);
  t.a_scaled.resize(n);
  t.b_scaled.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const __int128 ramp = static_cast<__int128>(i) * slope;
    t.a_scaled[i] = (a[i].value() + 3 * e128 - a0) * d + ramp;
    t.b_scaled[i] = (b[i].value() + 3 * e128 + alast - a0 - blast) * d + ramp;
  }
  return t;
}

MaxPlusVec distorted_square_conv(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e, MulBackend backend) {
  require(a.size() == b.size(), "distorted_square_conv needs equal lengths");
  require(a.all_finite() && b.all_finite(), "distorted_square_conv requires finite vectors");
  require(e >= 0, "e must be non-negative");
  const std::size_t n = a.size();
  if (n == 1) return MaxPlusVec{a[0] + b[0]};

  const RampTransform t = ramp_transform(a, b, e);
  const __int128 d = t.scale;
  // floor(2x) of each transformed value, kept exact.
  std::vector<__int128> fa(n), fb(n);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = floor_div(2 * t.a_scaled[i], d);
    fb[i] = floor_div(2 * t.b_scaled[i], d);
  }
  const auto [amin, amax] = std::minmax_element(fa.begin(), fa.end());
  const auto [bmin, bmax] = std::minmax_element(fb.begin(), fb.end());
  const __int128 lo_a = *amin, lo_b = *bmin;
  const __int128 span = std::max(*amax - lo_a, *bmax - lo_b);
  // Direct evaluation is cheaper once the value range outgrows the length.
  if (span > 12 * static_cast<__int128>(e) + 2 || span > 64 * static_cast<__int128>(n)) return naive_conv(a, b);

  std::vector<ExtVal> sa(n), sb(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = ExtVal(static_cast<std::int64_t>(fa[i] - lo_a));
    sb[i] = ExtVal(static_cast<std::int64_t>(fb[i] - lo_b));
  }
  const MaxPlusVec doubled = bounded_range_conv(MaxPlusVec(std::move(sa)), MaxPlusVec(std::move(sb)),
                                                static_cast<std::int64_t>(span), backend);

  // c_k = ceil(doubled_k / 2 - offset - k * slope / d), over the common denominator 2d.
  const __int128 a0 = a[0].value(), alast = a[n - 1].value(), blast = b[n - 1].value();
  const __int128 slope = a0 - alast;
  const __int128 offset = 6 * static_cast<__int128>(e) + alast - 2 * a0 - blast;
  std::vector<std::int64_t> c(2 * n - 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const __int128 twice = static_cast<__int128>(doubled[k].value()) + lo_a + lo_b;
    const __int128 num = twice * d - 2 * offset * d - 2 * static_cast<__int128>(k) * slope;
    c[k] = narrow_checked(ceil_div(num, 2 * d));
  }
  return MaxPlusVec::from_ints(c);
}

MaxPlusVec distorted_conv(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e, MulBackend backend) {
  if (a.size() > b.size()) return distorted_conv(b, a, e, backend);
  require(a.all_finite() && b.all_finite(), "distorted_conv requires finite vectors");
  const std::size_t w = a.size();
  const std::size_t blocks = (b.size() + w - 1) / w;
  MaxPlusVec c(a.size() + b.size() - 1, ExtVal::neg_inf());
  const auto& bv = b.elems();
  for (std::size_t i = 0; i < blocks; ++i) {
    // The last window is right-aligned so every window is full.
    const std::size_t start = (i + 1 == blocks) ? b.size() - w : i * w;
    MaxPlusVec window(std::vector<ExtVal>(bv.begin() + static_cast<std::ptrdiff_t>(start),
                                          bv.begin() + static_cast<std::ptrdiff_t>(start + w)));
    max_merge(c, distorted_square_conv(a, window, e, backend), start);
  }
  return c;
}

}  // namespace maxknap
