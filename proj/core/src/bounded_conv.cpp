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

#include "maxknap/bounded_conv.hpp"

#include <algorithm>
#include <bit>

#include "bigmul.hpp"
#include "ntt.hpp"
#include "maxknap/errors.hpp"

namespace maxknap {

namespace {

using internal::Limbs;

// Refuse products beyond 2^36 bits (8 GiB per operand).
constexpr unsigned __int128 kMaxPackedBits = static_cast<unsigned __int128>(1) << 36;

std::uint64_t packed_bits(std::size_t slots, std::int64_t slot_bits) {
  const unsigned __int128 total = static_cast<unsigned __int128>(slots) * static_cast<std::uint64_t>(slot_bits);
  if (total > kMaxPackedBits) throw DomainError("packed convolution too large");
  return static_cast<std::uint64_t>(total);
}

Limbs zero_limbs(std::uint64_t bits) { return Limbs((bits + 63) / 64 + 1, 0); }

void check_range(const MaxPlusVec& v, std::int64_t e_max) {
  for (ExtVal x : v) {
    if (x.is_finite() && (x.value() < 0 || x.value() > e_max)) {
      throw DomainError("entry " + x.to_string() + " outside [0, e_max]");
    }
  }
}

// Indices i with (a_j, b_{i-j}) both not -inf and at least one +inf.
std::vector<bool> pos_inf_support(const MaxPlusVec& a, const MaxPlusVec& b, MulBackend backend) {
  const std::size_t out = a.size() + b.size() - 1;
  std::vector<bool> result(out, false);
  const bool any = std::any_of(a.begin(), a.end(), [](ExtVal v) { return v.is_pos_inf(); }) ||
                   std::any_of(b.begin(), b.end(), [](ExtVal v) { return v.is_pos_inf(); });
  if (!any) return result;
  // Slot counts are bounded by min(|a|, |b|), so one extra bit prevents carries.
  const auto slot_bits = static_cast<std::int64_t>(std::bit_width(a.size() + b.size()) + 1);
  auto pack = [&](const MaxPlusVec& v, bool pos_only) {
    Limbs limbs = zero_limbs(packed_bits(v.size(), slot_bits));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (pos_only ? v[i].is_pos_inf() : !v[i].is_neg_inf()) internal::set_bit(limbs, i * slot_bits);
    }
    return limbs;
  };
  const Limbs pa = pack(a, true), la = pack(a, false), pb = pack(b, true), lb = pack(b, false);
  const Limbs left = internal::multiply(pa, lb, backend);
  const Limbs right = internal::multiply(la, pb, backend);
  for (std::size_t i = 0; i < out; ++i) {
    const std::uint64_t lo = i * slot_bits, hi = lo + slot_bits;
    result[i] = internal::top_bit_in_range(left, lo, hi) >= 0 || internal::top_bit_in_range(right, lo, hi) >= 0;
  }
  return result;
}

// kAuto picks the transform path for long inputs with small values, where it
// matches or beats the packed GMP product and avoids its cost jumps.
constexpr std::int64_t kAutoNttMaxValue = 32;
constexpr std::size_t kAutoNttMinLength = std::size_t{1} << 15;
constexpr std::size_t kAutoNttMaxWords = std::size_t{1} << 26;

// For every output index i and sum s, counts the pairs with a_j + b_{i-j} = s
// by transforming one indicator vector per value. Counts stay below the
// modulus and the length is invertible, so the top non-zero count gives c_i
// exactly even without the 1/length scaling.
MaxPlusVec transform_conv(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e_max) {
  using internal::Ntt;
  const std::size_t out = a.size() + b.size() - 1;
  const internal::Ntt ntt(std::bit_ceil(out));
  const std::size_t len = ntt.length();
  const auto values = static_cast<std::size_t>(e_max) + 1;
  auto planes = [&](const MaxPlusVec& v) {
    std::vector<std::vector<std::uint32_t>> p(values);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_finite()) continue;
      auto& plane = p[static_cast<std::size_t>(v[i].value())];
      if (plane.empty()) plane.assign(len, Ntt::zero());
      plane[i] = Ntt::one();
    }
    for (auto& plane : p) {
      if (!plane.empty()) ntt.forward(plane);
    }
    return p;
  };
  const auto pa = planes(a), pb = planes(b);
  std::vector<std::vector<std::uint32_t>> sums(2 * values - 1);
  for (std::size_t v = 0; v < values; ++v) {
    if (pa[v].empty()) continue;
    for (std::size_t w = 0; w < values; ++w) {
      if (pb[w].empty()) continue;
      auto& sum = sums[v + w];
      if (sum.empty()) sum.assign(len, Ntt::zero());
      ntt.multiply_accumulate(sum, pa[v], pb[w]);
    }
  }
  MaxPlusVec c(out, ExtVal::neg_inf());
  std::vector<bool> done(out, false);
  for (std::size_t s = sums.size(); s-- > 0;) {
    if (sums[s].empty()) continue;
    ntt.inverse_unscaled(sums[s]);
    for (std::size_t i = 0; i < out; ++i) {
      if (!done[i] && sums[s][i] != Ntt::zero()) {
        c[i] = ExtVal(static_cast<std::int64_t>(s));
        done[i] = true;
      }
    }
  }
  return c;
}

bool transform_fits(std::size_t out, std::int64_t e_max, std::size_t max_words) {
  if (out > internal::Ntt::kMaxLength || e_max < 0) return false;
  const auto planes = static_cast<unsigned __int128>(4 * static_cast<unsigned __int128>(e_max) + 3);
  return planes * std::bit_ceil(out) <= max_words;
}

}  // namespace

std::int64_t KroneckerProduct::slot_top_bit(std::size_t i) const {
  const std::uint64_t lo = i * static_cast<std::uint64_t>(slot_bits);
  return internal::top_bit_in_range(limbs, lo, lo + slot_bits);
}

std::vector<std::uint64_t> KroneckerProduct::slot_limbs(std::size_t i) const {
  const std::uint64_t lo = i * static_cast<std::uint64_t>(slot_bits);
  std::vector<std::uint64_t> out((slot_bits + 63) / 64, 0);
  for (std::int64_t bit = 0; bit < slot_bits; ++bit) {
    const std::uint64_t pos = lo + bit;
    if (pos / 64 < limbs.size() && ((limbs[pos / 64] >> (pos % 64)) & 1)) {
      out[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }
  return out;
}

KroneckerProduct kronecker_product(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e_max,
                                   MulBackend backend) {
  require(e_max >= 0, "e_max must be non-negative");
  check_range(a, e_max);
  check_range(b, e_max);
  KroneckerProduct p;
  // A slot sums at most min(|a|, |b|) terms, so the base only has to exceed that.
  p.digit_bits = std::bit_width(std::min(a.size(), b.size()));
  // A coefficient is below base^(2 e_max + 1), so this width never carries.
  const __int128 width = static_cast<__int128>(p.digit_bits) * (2 * static_cast<__int128>(e_max) + 1);
  if (width > (static_cast<__int128>(1) << 40)) throw DomainError("e_max too large for packing");
  p.slot_bits = static_cast<std::int64_t>(width);
  p.slots = a.size() + b.size() - 1;
  auto pack = [&](const MaxPlusVec& v) {
    Limbs limbs = zero_limbs(packed_bits(v.size(), p.slot_bits));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_finite()) {
        internal::set_bit(limbs, i * p.slot_bits + static_cast<std::uint64_t>(p.digit_bits * v[i].value()));
      }
    }
    return limbs;
  };
  p.limbs = internal::multiply(pack(a), pack(b), backend);
  return p;
}

MaxPlusVec bounded_range_conv(const MaxPlusVec& a, const MaxPlusVec& b, std::int64_t e_max,
                              MulBackend backend) {
  const std::size_t out = a.size() + b.size() - 1;
  const bool use_transform =
      backend == MulBackend::kNtt ||
      (backend == MulBackend::kAuto && e_max <= kAutoNttMaxValue && std::bit_ceil(out) >= kAutoNttMinLength &&
       transform_fits(out, e_max, kAutoNttMaxWords));
  if (use_transform) {
    require(e_max >= 0, "e_max must be non-negative");
    if (!transform_fits(out, e_max, SIZE_MAX)) throw DomainError("input too long for the transform backend");
    check_range(a, e_max);
    check_range(b, e_max);
    MaxPlusVec c = transform_conv(a, b, e_max);
    const std::vector<bool> pos = pos_inf_support(a, b, MulBackend::kGmp);
    for (std::size_t i = 0; i < out; ++i) {
      if (pos[i]) c[i] = ExtVal::pos_inf();
    }
    return c;
  }
  const KroneckerProduct p = kronecker_product(a, b, e_max, backend);
  const std::vector<bool> pos = pos_inf_support(a, b, backend);
  MaxPlusVec c(p.slots, ExtVal::neg_inf());
  for (std::size_t i = 0; i < p.slots; ++i) {
    if (pos[i]) {
      c[i] = ExtVal::pos_inf();
      continue;
    }
    // base^c <= coefficient < base^(c+1), so c is the digit count minus one.
    const std::int64_t top = p.slot_top_bit(i);
    if (top >= 0) c[i] = ExtVal(top / p.digit_bits);
  }
  return c;
}

ScaledVec approx_conv(const ScaledVec& a, const ScaledVec& b, std::int64_t e_max, MulBackend backend) {
  auto doubled_floor = [&](const ScaledVec& v) {
    require(!v.numerators.empty(), "approx_conv operands must be non-empty");
    require(v.denominator > 0 && v.denominator <= (1 << 20) && std::has_single_bit(static_cast<std::uint64_t>(v.denominator)),
            "denominator must be a power of two in [1, 2^20]");
    std::vector<ExtVal> out;
    out.reserve(v.numerators.size());
    for (ExtVal x : v.numerators) {
      if (!x.is_finite()) {
        out.push_back(x);
        continue;
      }
      const __int128 num = x.value();
      require(num >= 0 && num <= static_cast<__int128>(e_max) * v.denominator, "entry outside [0, e_max]");
      out.push_back(ExtVal(static_cast<std::int64_t>(2 * num / v.denominator)));
    }
    return MaxPlusVec(std::move(out));
  };
  require(e_max >= 0 && e_max <= INT64_MAX / 2, "e_max out of range");
  const MaxPlusVec c = bounded_range_conv(doubled_floor(a), doubled_floor(b), 2 * e_max, backend);
  return ScaledVec{std::vector<ExtVal>(c.begin(), c.end()), 2};
}

}  // namespace maxknap
