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
#include <bit>
#include <queue>
#include <set>

#include "maxknap/errors.hpp"
#include "maxknap/tree.hpp"

namespace maxknap {

WeightedTree::WeightedTree(int n, std::vector<TreeEdge> edges) : n_(n), edges_(std::move(edges)) {
  require(n >= 1, "a tree needs at least one vertex");
  require(edges_.size() == static_cast<std::size_t>(n - 1), "a tree on n vertices has n - 1 edges");
  adj_.resize(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const TreeEdge& e = edges_[i];
    require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n && e.u != e.v, "edge endpoint out of range");
    require(e.weight.is_pos_inf() || (e.weight.is_finite() && e.weight.value() >= 0),
            "edge weights must be non-negative or +inf");
    const int ru = find(e.u), rv = find(e.v);
    require(ru != rv, "edges contain a cycle");
    parent[static_cast<std::size_t>(ru)] = rv;
    adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, static_cast<int>(i));
    adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, static_cast<int>(i));
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int WeightedTree::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& nb : adj_) d = std::max(d, nb.size());
  return static_cast<int>(d);
}

std::int64_t WeightedTree::max_finite_weight() const noexcept {
  std::int64_t w = 0;
  for (const TreeEdge& e : edges_) {
    if (e.weight.is_finite()) w = std::max(w, e.weight.value());
  }
  return w;
}

bool WeightedTree::has_infinite_weight() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const TreeEdge& e) { return e.weight.is_pos_inf(); });
}

WeightedTree tree_from_pruefer(const std::vector<int>& sequence, const std::vector<ExtVal>& weights) {
  const int n = static_cast<int>(sequence.size()) + 2;
  require(weights.size() == static_cast<std::size_t>(n - 1), "one weight per edge");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    require(x >= 0 && x < n, "Pruefer entry out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  std::vector<TreeEdge> edges;
  for (int x : sequence) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, x, weights[edges.size()]});
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
  }
  const int u = *leaves.begin();
  const int v = *std::next(leaves.begin());
  edges.push_back({u, v, weights[edges.size()]});
  return WeightedTree(n, std::move(edges));
}

WeightedTree random_tree(int n, std::int64_t w_max, SplitMix64& rng) {
  require(n >= 1, "a tree needs at least one vertex");
  if (n == 1) return WeightedTree(1, {});
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<ExtVal> weights(static_cast<std::size_t>(n - 1));
  for (ExtVal& w : weights) w = ExtVal(rng.uniform(0, w_max));
  return tree_from_pruefer(seq, weights);
}

ExtVal cut_weight(const WeightedTree& tree, const std::vector<bool>& side) {
  ExtVal total = 0;
  for (const TreeEdge& e : tree.edges()) {
    if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) total += e.weight;
  }
  return total;
}

std::vector<ExtVal> brute_separability(const WeightedTree& tree) {
  const int n = tree.size();
  require(n <= 22, "brute force is limited to 22 vertices");
  std::vector<ExtVal> best(static_cast<std::size_t>(n) + 1, ExtVal::pos_inf());
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::int64_t finite = 0;
    bool infinite = false;
    for (const TreeEdge& e : tree.edges()) {
      if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U)) {
        if (e.weight.is_pos_inf()) infinite = true; else finite = checked_add(finite, e.weight.value());
      }
    }
    const ExtVal cost = infinite ? ExtVal::pos_inf() : ExtVal(finite);
    auto& slot = best[static_cast<std::size_t>(std::popcount(mask))];
    slot = std::min(slot, cost);
  }
  return best;
}

int find_centroid(const WeightedTree& tree, const std::vector<int>& members) {
  require(!members.empty(), "centroid of an empty set");
  std::vector<char> inside(static_cast<std::size_t>(tree.size()), 0);
  for (int v : members) inside[static_cast<std::size_t>(v)] = 1;
  // Root at members[0]; sizes via reverse BFS order.
  std::vector<int> order{members[0]}, parent(static_cast<std::size_t>(tree.size()), -1);
  parent[static_cast<std::size_t>(members[0])] = members[0];
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto [w, e] : tree.neighbors(order[i])) {
      if (inside[static_cast<std::size_t>(w)] && parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = order[i];
        order.push_back(w);
      }
    }
  }
  require(order.size() == members.size(), "centroid members must be connected");
  const int total = static_cast<int>(members.size());
  std::vector<int> sub(static_cast<std::size_t>(tree.size()), 1), heaviest(static_cast<std::size_t>(tree.size()), 0);
  for (std::size_t i = order.size(); i-- > 1;) {
    const int v = order[i], p = parent[static_cast<std::size_t>(v)];
    sub[static_cast<std::size_t>(p)] += sub[static_cast<std::size_t>(v)];
    heaviest[static_cast<std::size_t>(p)] = std::max(heaviest[static_cast<std::size_t>(p)], sub[static_cast<std::size_t>(v)]);
  }
  int best = -1, best_load = total + 1;
  for (int v : members) {
    const int load = std::max(heaviest[static_cast<std::size_t>(v)], total - sub[static_cast<std::size_t>(v)]);
    if (load < best_load || (load == best_load && v < best)) {
      best = v;
      best_load = load;
    }
  }
  return best;
}

std::vector<bool> centroid_partition(const WeightedTree& tree, int m) {
  const int n = tree.size();
  require(m >= 1 && m < n, "centroid_partition needs 1 <= m < n");
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::vector<char> inside(static_cast<std::size_t>(n), 1);
  std::vector<int> component(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) component[static_cast<std::size_t>(v)] = v;
  int target = m;

  // Collects the part of the current component reachable from start without
  // passing through blocked.
  auto collect = [&](int start, int blocked) {
    std::vector<int> out{start};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(start)] = 1;
    seen[static_cast<std::size_t>(blocked)] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto [w, e] : tree.neighbors(out[i])) {
        if (inside[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          out.push_back(w);
        }
      }
    }
    return out;
  };

  while (target > 0) {
    if (target == static_cast<int>(component.size())) {
      for (int v : component) chosen[static_cast<std::size_t>(v)] = true;
      break;
    }
    // Take the centroid, then whole neighbouring subtrees while they fit;
    // recurse into the first one that does not.
    const int c = find_centroid(tree, component);
    chosen[static_cast<std::size_t>(c)] = true;
    int taken = 1;
    std::vector<int> next;
    for (auto [w, e] : tree.neighbors(c)) {
      if (taken == target) break;
      if (!inside[static_cast<std::size_t>(w)]) continue;
      std::vector<int> part = collect(w, c);
      if (taken + static_cast<int>(part.size()) <= target) {
        for (int v : part) chosen[static_cast<std::size_t>(v)] = true;
        taken += static_cast<int>(part.size());
      } else {
        next = std::move(part);
        break;
      }
    }
    target -= taken;
    if (target == 0) break;
    std::fill(inside.begin(), inside.end(), 0);
    for (int v : next) inside[static_cast<std::size_t>(v)] = 1;
    component = std::move(next);
  }
  return chosen;
}

std::int64_t crossing_edges(const WeightedTree& tree, const std::vector<bool>& side) {
  std::int64_t count = 0;
  for (const TreeEdge& e : tree.edges()) {
    if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) ++count;
  }
  return count;
}

}  // namespace maxknap
