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

#ifndef MAXKNAP_EXT_VAL_HPP_
#define MAXKNAP_EXT_VAL_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace maxknap {

// An integer extended with -inf and +inf, ordered -inf < finite < +inf.
// Default-constructs to -inf, the neutral element of max.
class ExtVal {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  constexpr ExtVal() noexcept = default;
  // Implicit so that integer literals read naturally in vector literals.
  constexpr ExtVal(std::int64_t v) noexcept  // NOLINT(google-explicit-constructor)
      : kind_(Kind::kFinite), value_(v) {}

  static constexpr ExtVal neg_inf() noexcept { return ExtVal(Kind::kNegInf); }
  static constexpr ExtVal pos_inf() noexcept { return ExtVal(Kind::kPosInf); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::kFinite; }
  constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::kNegInf; }
  constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::kPosInf; }

  // The finite value; throws DomainError on an infinity.
  std::int64_t value() const;

  // Checked addition. -inf absorbs finite values, +inf likewise; mixing the
  // two infinities throws DomainError, finite overflow throws OverflowError.
  friend ExtVal operator+(ExtVal a, ExtVal b);
  ExtVal& operator+=(ExtVal o) { return *this = *this + o; }

  // Negation swaps the infinities.
  ExtVal operator-() const;

  friend constexpr bool operator==(ExtVal a, ExtVal b) noexcept {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtVal a, ExtVal b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::kFinite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  // "-inf", "+inf" or the decimal value.
  std::string to_string() const;

 private:
  explicit constexpr ExtVal(Kind k) noexcept : kind_(k) {}

  Kind kind_ = Kind::kNegInf;
  std::int64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ExtVal v);

// Parses "-inf", "+inf", "inf" or a decimal integer; throws DomainError.
ExtVal parse_ext_val(const std::string& token);

}  // namespace maxknap

#endif  // MAXKNAP_EXT_VAL_HPP_
