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

#ifndef MAXKNAP_ERRORS_HPP_
#define MAXKNAP_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxknap {

// Raised when an input violates a documented precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when exact 64-bit arithmetic would overflow.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Raised when an internal invariant fails; indicates a bug or an invalid
// certificate that slipped past validation.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}

inline std::int64_t narrow_checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit in int64");
  return static_cast<std::int64_t>(v);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

}  // namespace maxknap

#endif  // MAXKNAP_ERRORS_HPP_
