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
#include <array>
#include <bit>

#include "maxknap/bounded_conv.hpp"
#include "maxknap/errors.hpp"
#include "maxknap/tree.hpp"

namespace maxknap {

namespace {

using Profile = MaxPlusVec;

class MinConv {
 public:
  explicit MinConv(std::optional<std::int64_t> bound) : bound_(bound) {}

  Profile operator()(const Profile& x, const Profile& y) const {
    if (!bound_) return naive_min_conv(x, y);
    // min(x + y) = 2B - max((B - x) + (B - y)) with B - x in [0, B].
    const std::int64_t b = *bound_;
    const Profile nx = flip(x), ny = flip(y);
    const Profile r = bounded_range_conv(nx, ny, b);
    std::vector<ExtVal> out;
    out.reserve(r.size());
    for (ExtVal v : r) out.push_back(v.is_neg_inf() ? ExtVal::pos_inf() : ExtVal(2 * b - v.value()));
    return Profile(std::move(out));
  }

  void check(const Profile& x) const {
    if (!bound_) return;
    for (ExtVal v : x) {
      if (v.is_finite() && (v.value() < 0 || v.value() > *bound_)) {
        throw DomainError("subproblem value " + v.to_string() + " exceeds the separability bound");
      }
    }
  }

 private:
  Profile flip(const Profile& x) const {
    check(x);
    std::vector<ExtVal> out;
    out.reserve(x.size());
    for (ExtVal v : x) out.push_back(v.is_pos_inf() ? ExtVal::neg_inf() : ExtVal(*bound_ - v.value()));
    return Profile(std::move(out));
  }

  std::optional<std::int64_t> bound_;
};

Profile elementwise_min(const Profile& x, const Profile& y) {
  std::vector<ExtVal> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return Profile(std::move(out));
}

Profile plus_weight(const Profile& x, ExtVal w) {
  std::vector<ExtVal> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + w;
  return Profile(std::move(out));
}

// Child profile seen from its parent: entry k is the cost when k vertices of
// the child's subtree share the parent's side, including the edge if cut.
Profile hang(const Profile& child, ExtVal w) {
  const std::size_t s = child.size() - 1;
  std::vector<ExtVal> out(s + 1);
  for (std::size_t k = 0; k <= s; ++k) out[k] = std::min(child[k], child[s - k] + w);
  return Profile(std::move(out));
}

Profile fold(std::vector<Profile> parts, const MinConv& conv) {
  if (parts.empty()) return Profile{0};
  while (parts.size() > 1) {
    std::vector<Profile> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(conv(parts[i], parts[i + 1]));
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

struct Rooted {
  std::vector<int> order;         // BFS order from vertex 0
  std::vector<int> parent;
  std::vector<ExtVal> up_weight;  // weight of the edge to the parent
  std::vector<int> subtree;
  std::vector<int> heavy;         // child with the largest subtree, or -1
};

Rooted root_tree(const WeightedTree& tree, const std::vector<ExtVal>& weights) {
  const auto n = static_cast<std::size_t>(tree.size());
  Rooted r;
  r.parent.assign(n, -1);
  r.up_weight.assign(n, ExtVal(0));
  r.subtree.assign(n, 1);
  r.heavy.assign(n, -1);
  r.order.push_back(0);
  r.parent[0] = 0;
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    const int v = r.order[i];
    for (auto [w, e] : tree.neighbors(v)) {
      if (r.parent[static_cast<std::size_t>(w)] >= 0) continue;
      r.parent[static_cast<std::size_t>(w)] = v;
      r.up_weight[static_cast<std::size_t>(w)] = weights[static_cast<std::size_t>(e)];
      r.order.push_back(w);
    }
  }
  for (std::size_t i = n; i-- > 1;) {
    const int v = r.order[i];
    const int p = r.parent[static_cast<std::size_t>(v)];
    r.subtree[static_cast<std::size_t>(p)] += r.subtree[static_cast<std::size_t>(v)];
  }
  for (std::size_t i = 1; i < n; ++i) {
    const int v = r.order[i];
    int& h = r.heavy[static_cast<std::size_t>(r.parent[static_cast<std::size_t>(v)])];
    if (h < 0 || r.subtree[static_cast<std::size_t>(v)] > r.subtree[static_cast<std::size_t>(h)]) h = v;
  }
  return r;
}

// Profile of each vertex: entry i is the cheapest cut of its subtree with i
// vertices, the vertex itself included, on the vertex's side.
Profile subtree_dp(const Rooted& r, const MinConv& conv) {
  const std::size_t n = r.order.size();
  std::vector<std::optional<Profile>> prof(n);
  for (std::size_t i = n; i-- > 0;) {
    const int v = r.order[i];
    auto& pv = prof[static_cast<std::size_t>(v)];
    if (!pv) pv = Profile{ExtVal::pos_inf(), 0};
    conv.check(*pv);
    if (i == 0) break;
    auto& pp = prof[static_cast<std::size_t>(r.parent[static_cast<std::size_t>(v)])];
    if (!pp) pp = Profile{ExtVal::pos_inf(), 0};
    const Profile h = hang(*pv, r.up_weight[static_cast<std::size_t>(v)]);
    conv.check(h);
    pp = conv(*pp, h);
    pv.reset();
  }
  return *prof[0];
}

// Path segment profiles indexed by (side of first vertex, side of last
// vertex); entry i counts vertices on side 0. Missing entries are all +inf.
struct Segment {
  std::array<std::optional<Profile>, 4> p;
  std::optional<Profile>& at(int first, int last) { return p[static_cast<std::size_t>(first * 2 + last)]; }
  const std::optional<Profile>& at(int first, int last) const { return p[static_cast<std::size_t>(first * 2 + last)]; }
};

std::optional<Profile> opt_min(const std::optional<Profile>& x, const std::optional<Profile>& y) {
  if (!x) return y;
  if (!y) return x;
  return elementwise_min(*x, *y);
}

Segment join(const Segment& left, const Segment& right, ExtVal w, const MinConv& conv) {
  // Fold the connecting edge into the right half: entry (rho, tau) is the
  // cost when the last left vertex sits on side rho.
  Segment adj;
  for (int tau = 0; tau < 2; ++tau) {
    for (int rho = 0; rho < 2; ++rho) {
      const auto& other = right.at(1 - rho, tau);
      adj.at(rho, tau) = opt_min(right.at(rho, tau), other ? std::optional<Profile>(plus_weight(*other, w)) : std::nullopt);
      if (adj.at(rho, tau)) conv.check(*adj.at(rho, tau));
    }
  }
  Segment out;
  for (int sigma = 0; sigma < 2; ++sigma) {
    for (int tau = 0; tau < 2; ++tau) {
      std::optional<Profile> best;
      for (int rho = 0; rho < 2; ++rho) {
        if (left.at(sigma, rho) && adj.at(rho, tau)) best = opt_min(best, conv(*left.at(sigma, rho), *adj.at(rho, tau)));
      }
      out.at(sigma, tau) = std::move(best);
    }
  }
  return out;
}

Segment build_segment(const std::vector<Profile>& local, const std::vector<ExtVal>& links, std::size_t lo,
                      std::size_t hi, const MinConv& conv) {
  if (lo == hi) {
    Segment s;
    const Profile& l = local[lo];
    std::vector<ExtVal> flipped(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) flipped[i] = l[l.size() - 1 - i];
    s.at(0, 0) = l;
    s.at(1, 1) = Profile(std::move(flipped));
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return join(build_segment(local, links, lo, mid, conv), build_segment(local, links, mid + 1, hi, conv), links[mid],
              conv);
}

Profile spine_dp(const Rooted& r, const MinConv& conv) {
  const std::size_t n = r.order.size();
  std::vector<std::vector<int>> children(n);
  for (std::size_t i = 1; i < n; ++i) {
    const int v = r.order[i];
    children[static_cast<std::size_t>(r.parent[static_cast<std::size_t>(v)])].push_back(v);
  }
  std::vector<std::optional<Profile>> top_profile(n);
  for (std::size_t i = n; i-- > 0;) {
    const int top = r.order[i];
    if (i != 0 && r.heavy[static_cast<std::size_t>(r.parent[static_cast<std::size_t>(top)])] == top) continue;
    // Light subtrees hanging off the heavy path starting at top were all
    // finished earlier in reverse BFS order.
    std::vector<Profile> local;
    std::vector<ExtVal> links;
    for (int v = top; v >= 0; v = r.heavy[static_cast<std::size_t>(v)]) {
      std::vector<Profile> hung;
      for (int c : children[static_cast<std::size_t>(v)]) {
        if (c == r.heavy[static_cast<std::size_t>(v)]) continue;
        hung.push_back(hang(*top_profile[static_cast<std::size_t>(c)], r.up_weight[static_cast<std::size_t>(c)]));
        conv.check(hung.back());
        top_profile[static_cast<std::size_t>(c)].reset();
      }
      const Profile light = fold(std::move(hung), conv);
      std::vector<ExtVal> own{ExtVal::pos_inf()};
      own.insert(own.end(), light.begin(), light.end());
      local.emplace_back(std::move(own));
      conv.check(local.back());
      const int h = r.heavy[static_cast<std::size_t>(v)];
      if (h >= 0) links.push_back(r.up_weight[static_cast<std::size_t>(h)]);
    }
    const Segment seg = build_segment(local, links, 0, local.size() - 1, conv);
    const std::optional<Profile> result = opt_min(seg.at(0, 0), seg.at(0, 1));
    conv.check(*result);
    top_profile[static_cast<std::size_t>(top)] = *result;
  }
  return *top_profile[0];
}

}  // namespace

std::vector<ExtVal> separability_profile(const WeightedTree& tree, SeparabilityStrategy strategy,
                                         std::optional<std::int64_t> value_bound) {
  const int n = tree.size();
  // +inf edges become a finite weight above any cut of finite edges.
  std::int64_t finite_total = 0;
  for (const TreeEdge& e : tree.edges()) {
    if (e.weight.is_finite()) finite_total = checked_add(finite_total, e.weight.value());
  }
  const std::int64_t big = checked_add(finite_total, 1);
  require(!value_bound || !tree.has_infinite_weight(), "bounded separability needs finite weights");
  require(!value_bound || *value_bound >= 0, "value bound must be non-negative");
  std::vector<ExtVal> weights;
  for (const TreeEdge& e : tree.edges()) weights.push_back(e.weight.is_finite() ? e.weight : ExtVal(big));

  const MinConv conv(value_bound);
  const Rooted r = root_tree(tree, weights);
  const Profile root = strategy == SeparabilityStrategy::kSpine ? spine_dp(r, conv) : subtree_dp(r, conv);

  // The root may lie on either side of the chosen set.
  std::vector<ExtVal> out(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    ExtVal v = std::min(root[static_cast<std::size_t>(m)], root[static_cast<std::size_t>(n - m)]);
    if (v.is_finite() && v.value() >= big) v = ExtVal::pos_inf();
    out[static_cast<std::size_t>(m)] = v;
  }
  return out;
}

std::int64_t separability_bound(const WeightedTree& tree) {
  const auto log_n = static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(tree.size()) - 1));
  return checked_mul(checked_mul(2 * static_cast<std::int64_t>(tree.max_degree()), tree.max_finite_weight()),
                     log_n + 2);
}

std::vector<ExtVal> bounded_separability(const WeightedTree& tree) {
  require(!tree.has_infinite_weight(), "bounded separability needs finite weights");
  return separability_profile(tree, SeparabilityStrategy::kSpine, separability_bound(tree));
}

}  // namespace maxknap
