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

#ifndef MAXKNAP_CLI_GENERATE_HPP_
#define MAXKNAP_CLI_GENERATE_HPP_

#include <cstdint>
#include <string>

namespace maxknap::cli {

enum class GenKind { kBoundedValue, kBoundedSize, kUnbounded, kMult, kTree, kVector };

// Parses "bounded-value", "bounded-size", "unbounded", "mult", "tree" or
// "vector"; throws DomainError otherwise.
GenKind parse_gen_kind(const std::string& name);

struct GenParams {
  std::int64_t n = 10;        // items, tree vertices or vector length
  std::int64_t t = 100;       // capacity
  std::int64_t s_max = 0;     // largest size; 0 means t (or 10 for unbounded and mult)
  std::int64_t v_max = 10;    // largest value, or largest entry of a vector
  std::int64_t m_max = 5;     // largest multiplicity for mult
  std::int64_t w_max = 10;    // largest tree edge weight
};

// Deterministic file contents for (kind, params, seed). Sizes are uniform in
// [1, s_max], values in [0, v_max], multiplicities in [1, m_max], vector
// entries in [0, v_max]; trees decode a uniform Pruefer sequence and draw
// weights uniformly from [0, w_max].
std::string gen_instance(GenKind kind, const GenParams& params, std::uint64_t seed);

}  // namespace maxknap::cli

#endif  // MAXKNAP_CLI_GENERATE_HPP_
