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

#include <algorithm>
#include <cstdlib>

#include "maxknap/errors.hpp"
#include "maxknap/tree.hpp"

namespace maxknap {

MaxCovGadget maxcov_gadget(const MaxPlusVec& a, const MaxPlusVec& b, const MaxPlusVec& c) {
  require(a.size() == b.size(), "gadget needs |a| = |b|");
  require(c.size() == 2 * a.size() - 1, "gadget needs |c| = 2|a| - 1");
  require(a.all_finite() && b.all_finite() && c.all_finite(), "gadget needs finite vectors");
  const int n = static_cast<int>(a.size());
  // A floor of 2 keeps any cut of four or more finite edges at or above 3M.
  std::int64_t mx = 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    require(a[i].value() > INT64_MIN && b[i].value() > INT64_MIN, "gadget entry out of range");
    mx = std::max({mx, std::abs(a[i].value()), std::abs(b[i].value())});
  }
  const std::int64_t big_m = checked_mul(10, mx);
  // Every pair sum lies in [-2mx, 2mx]; clamping c to just outside that range
  // keeps each comparison and keeps all weights non-negative and small.
  auto c_at = [&](int k) { return std::clamp(c[static_cast<std::size_t>(k)].value(), -2 * mx - 1, 2 * mx); };
  const ExtVal blocked(checked_add(checked_mul(checked_mul(7, big_m), n), 1));

  // Vertex 0 is the hub; then paths of 3n vertices for a and b, 2n - 1 for c,
  // and an uncuttable ballast path of 2n + 1 vertices. The ballast keeps the
  // hub's side above 4n + 1 vertices, so a side of exactly 4n + 1 must be cut
  // off by one finite edge on each of the three paths.
  const int a0 = 1, b0 = 1 + 3 * n, c0 = 1 + 6 * n, ballast0 = 8 * n;
  std::vector<TreeEdge> edges;
  auto add_path = [&](int first, const MaxPlusVec& v) {
    edges.push_back({0, first, blocked});
    for (int j = 0; j + 1 < 3 * n; ++j) {
      const int i = j - (n - 1);
      const ExtVal w = (i >= 0 && i < n) ? ExtVal(big_m - v[static_cast<std::size_t>(i)].value()) : blocked;
      edges.push_back({first + j, first + j + 1, w});
    }
  };
  add_path(a0, a);
  add_path(b0, b);
  edges.push_back({0, c0, ExtVal(big_m + c_at(2 * n - 2))});
  for (int i = 1; i <= 2 * n - 2; ++i) edges.push_back({c0 + i - 1, c0 + i, ExtVal(big_m + c_at(2 * n - 2 - i))});

  edges.push_back({0, ballast0, blocked});
  for (int i = 1; i <= 2 * n; ++i) edges.push_back({ballast0 + i - 1, ballast0 + i, blocked});

  return MaxCovGadget{WeightedTree(10 * n + 1, std::move(edges)), 4 * n + 1, big_m, checked_mul(3, big_m)};
}

bool maxcov_upperbound(const MaxPlusVec& a, const MaxPlusVec& b, const MaxPlusVec& c) {
  require(c.size() == a.size() + b.size() - 1, "c must have length |a| + |b| - 1");
  const MaxPlusVec conv = naive_conv(a, b);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] < conv[k]) return true;
  }
  return false;
}

}  // namespace maxknap
