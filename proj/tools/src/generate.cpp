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

#include "maxknap/cli/generate.hpp"

#include "maxknap/cli/formats.hpp"
#include "maxknap/errors.hpp"
#include "maxknap/rng.hpp"
#include "maxknap/tree.hpp"

namespace maxknap::cli {

GenKind parse_gen_kind(const std::string& name) {
  if (name == "bounded-value") return GenKind::kBoundedValue;
  if (name == "bounded-size") return GenKind::kBoundedSize;
  if (name == "unbounded") return GenKind::kUnbounded;
  if (name == "mult") return GenKind::kMult;
  if (name == "tree") return GenKind::kTree;
  if (name == "vector") return GenKind::kVector;
  throw DomainError("unknown generator kind '" + name + "'");
}

std::string gen_instance(GenKind kind, const GenParams& p, std::uint64_t seed) {
  require(p.n >= 0 && p.t >= 0 && p.s_max >= 0 && p.v_max >= 0, "generator parameters must be non-negative");
  require(p.m_max >= 1, "m_max must be at least 1");
  require(p.w_max >= 0, "w_max must be non-negative");
  SplitMix64 rng(seed);

  if (kind == GenKind::kTree) {
    require(p.n >= 1 && p.n <= (1 << 24), "tree size must lie in [1, 2^24]");
    return format_tree(random_tree(static_cast<int>(p.n), p.w_max, rng));
  }
  if (kind == GenKind::kVector) {
    require(p.n >= 1, "vector length must be positive");
    std::vector<std::int64_t> v(static_cast<std::size_t>(p.n));
    for (auto& x : v) x = rng.uniform(0, p.v_max);
    return format_ints(v) + "\n";
  }

  const bool small_sizes = kind == GenKind::kUnbounded || kind == GenKind::kMult;
  std::int64_t s_max = p.s_max;
  if (s_max == 0) s_max = small_sizes ? 10 : std::max<std::int64_t>(p.t, 1);
  KnapsackInstance inst;
  inst.capacity = p.t;
  for (std::int64_t i = 0; i < p.n; ++i) {
    Item it;
    it.size = rng.uniform(1, s_max);
    it.value = rng.uniform(0, p.v_max);
    if (kind == GenKind::kUnbounded) it.multiplicity = kUnbounded;
    if (kind == GenKind::kMult) it.multiplicity = rng.uniform(1, p.m_max);
    inst.items.push_back(it);
  }
  return format_instance(inst);
}

}  // namespace maxknap::cli
