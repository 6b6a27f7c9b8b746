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

#ifndef MAXKNAP_TREE_HPP_
#define MAXKNAP_TREE_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maxknap/ext_val.hpp"
#include "maxknap/maxplus.hpp"
#include "maxknap/rng.hpp"

namespace maxknap {

// Edge weights are non-negative integers or +inf.
struct TreeEdge {
  int u = 0;
  int v = 0;
  ExtVal weight = 0;
};

class WeightedTree {
 public:
  // Validates that the edges form a spanning tree on vertices 0..n-1.
  WeightedTree(int n, std::vector<TreeEdge> edges);

  int size() const noexcept { return n_; }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  // (neighbor, edge index) pairs, sorted by neighbor.
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int max_degree() const noexcept;
  // Largest finite weight (0 if none).
  std::int64_t max_finite_weight() const noexcept;
  bool has_infinite_weight() const noexcept;

 private:
  int n_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Tree encoded by a Pruefer sequence of length n - 2 (n >= 2), with
// weights assigned in edge order.
WeightedTree tree_from_pruefer(const std::vector<int>& sequence, const std::vector<ExtVal>& weights);

// Uniform random labelled tree with weights in [0, w_max].
WeightedTree random_tree(int n, std::int64_t w_max, SplitMix64& rng);

// Total weight of edges whose endpoints lie on different sides.
ExtVal cut_weight(const WeightedTree& tree, const std::vector<bool>& side);

// Entry m is the minimum cut weight over vertex sets of size m, m = 0..n.
// Exhaustive; n <= 22.
std::vector<ExtVal> brute_separability(const WeightedTree& tree);

enum class SeparabilityStrategy {
  kSubtreeDp,  // merge children one at a time
  kSpine,      // heavy-path decomposition with balanced path merges
};

// Same profile as brute_separability via (min,+) convolutions. With
// value_bound set, every convolution goes through the bounded-range kernel
// and any finite intermediate value above the bound raises DomainError.
std::vector<ExtVal> separability_profile(const WeightedTree& tree, SeparabilityStrategy strategy,
                                         std::optional<std::int64_t> value_bound = std::nullopt);

// 2 d_max w_max (ceil(log2 n) + 2): an upper bound on every subproblem value
// for finite weights, including subtrees with up to two vertices pinned.
std::int64_t separability_bound(const WeightedTree& tree);

// separability_profile with the spine strategy at separability_bound. Finite
// weights only.
std::vector<ExtVal> bounded_separability(const WeightedTree& tree);

// A vertex whose removal leaves components of size <= n/2 among `members`
// (a connected vertex set); the lowest id among the best candidates.
int find_centroid(const WeightedTree& tree, const std::vector<int>& members);

// A set of exactly m vertices (1 <= m < n) crossed by at most
// 2 d_max ceil(log2 n) edges, built by recursive centroid splitting.
std::vector<bool> centroid_partition(const WeightedTree& tree, int m);

std::int64_t crossing_edges(const WeightedTree& tree, const std::vector<bool>& side);

// Tree on 10n + 1 vertices whose separability at 4n + 1 is below 3M exactly
// when (a * b)_k > c_k for some k, with M = 10 max(2, |a_i|, |b_i|). Three
// paths hang off a hub: the a and b paths carry M - a_i and M - b_i on their
// middle edges, the c path carries M + c_k, and the remaining edges plus a
// ballast path of 2n + 1 vertices have a weight above any finite cut.
struct MaxCovGadget {
  WeightedTree tree;
  int m = 0;
  std::int64_t big_m = 0;
  std::int64_t threshold = 0;  // 3M
};

// |a| = |b| = n >= 1, |c| = 2n - 1, all finite.
MaxCovGadget maxcov_gadget(const MaxPlusVec& a, const MaxPlusVec& b, const MaxPlusVec& c);

// True iff (a * b)_k > c_k for some k, by direct evaluation.
bool maxcov_upperbound(const MaxPlusVec& a, const MaxPlusVec& b, const MaxPlusVec& c);

}  // namespace maxknap

#endif  // MAXKNAP_TREE_HPP_
