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

#include "maxknap/ext_val.hpp"

#include <charconv>

#include "maxknap/errors.hpp"

namespace maxknap {

std::int64_t ExtVal::value() const {
  if (kind_ != Kind::kFinite) throw DomainError("value() called on an infinity");
  return value_;
}

ExtVal operator+(ExtVal a, ExtVal b) {
  if (a.is_finite() && b.is_finite()) return ExtVal(checked_add(a.value_, b.value_));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw DomainError("+inf + -inf is undefined");
  }
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtVal::neg_inf();
  return ExtVal::pos_inf();
}

ExtVal ExtVal::operator-() const {
  switch (kind_) {
    case Kind::kNegInf:
      return pos_inf();
    case Kind::kPosInf:
      return neg_inf();
    case Kind::kFinite:
      break;
  }
  if (value_ == INT64_MIN) throw OverflowError("negation overflow");
  return ExtVal(-value_);
}

std::string ExtVal::to_string() const {
  switch (kind_) {
    case Kind::kNegInf:
      return "-inf";
    case Kind::kPosInf:
      return "+inf";
    case Kind::kFinite:
      break;
  }
  return std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, ExtVal v) { return os << v.to_string(); }

ExtVal parse_ext_val(const std::string& token) {
  if (token == "-inf") return ExtVal::neg_inf();
  if (token == "+inf" || token == "inf") return ExtVal::pos_inf();
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) throw OverflowError("integer out of range: " + token);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("not an extended integer: '" + token + "'");
  }
  return ExtVal(v);
}

}  // namespace maxknap
