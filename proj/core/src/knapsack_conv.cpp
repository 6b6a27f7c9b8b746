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

#include "maxknap/knapsack_conv.hpp"

#include <algorithm>
#include <numeric>

#include "maxknap/errors.hpp"

namespace maxknap {

namespace {

struct Candidate {
  Item item;
  int side = 0;  // 0 for A, 1 for B
  std::size_t index = 0;
  bool filler = false;
};

// Decreasing ratio, then smaller size, side and input order. Zero-value
// fillers that absorb idle capacity come last.
bool greedy_before(const Candidate& l, const Candidate& r) {
  if (l.filler != r.filler) return r.filler;
  if (better_ratio(l.item, r.item)) return true;
  if (better_ratio(r.item, l.item)) return false;
  if (l.item.size != r.item.size) return l.item.size < r.item.size;
  if (l.side != r.side) return l.side < r.side;
  return l.index < r.index;
}

void add_side(std::vector<Candidate>& out, const KnapsackInstance& inst, int side) {
  for (std::size_t i = 0; i < inst.items.size(); ++i) out.push_back({inst.items[i], side, i, false});
  if (inst.capacity > 0) out.push_back({Item{inst.capacity, 0, 1}, side, inst.items.size(), true});
}

struct Piece {
  int side;
  std::int64_t length;
  std::int64_t value;
  std::int64_t size;
};

// The greedy run at unlimited total capacity; any smaller capacity uses a
// prefix of these pieces.
std::vector<Piece> greedy_pieces(std::vector<Candidate> cands, std::int64_t cap_a, std::int64_t cap_b) {
  std::stable_sort(cands.begin(), cands.end(), greedy_before);
  std::int64_t rem[2] = {cap_a, cap_b};
  std::vector<Piece> pieces;
  for (const Candidate& c : cands) {
    const std::int64_t len = std::min(c.item.size, rem[c.side]);
    if (len <= 0) continue;
    rem[c.side] -= len;
    pieces.push_back({c.side, len, c.item.value, c.item.size});
  }
  return pieces;
}

void check_zero_one(const KnapsackInstance& inst) {
  validate_instance(inst);
  for (const Item& it : inst.items) require(it.multiplicity == 1, "knapsack convolution needs 0/1 items");
}

// Sum of terms num_k / den_k compared against bound, exactly.
class FractionSum {
 public:
  void add(const Rational& r, int sign) { terms_[count_++] = {r, sign}; }
  bool at_most(std::int64_t bound) const {
    __int128 den = 1;
    for (int k = 0; k < count_; ++k) den = mul(den, terms_[k].r.den());
    __int128 num = 0;
    for (int k = 0; k < count_; ++k) {
      const __int128 term = mul(terms_[k].r.num(), den / terms_[k].r.den());
      num += terms_[k].sign * term;
    }
    return num <= mul(bound, den);
  }

 private:
  static __int128 mul(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("fraction comparison overflow");
    return r;
  }
  struct Term {
    Rational r;
    int sign;
  };
  Term terms_[4];
  int count_ = 0;
};

}  // namespace

FracProfile greedy_fractional_profile(const KnapsackInstance& inst) {
  check_zero_one(inst);
  std::vector<Candidate> cands;
  add_side(cands, inst, 0);
  const std::vector<Piece> pieces = greedy_pieces(std::move(cands), inst.capacity, 0);
  FracProfile p;
  p.values.reserve(static_cast<std::size_t>(inst.capacity) + 1);
  p.values.emplace_back(0);
  std::int64_t whole = 0;
  for (const Piece& pc : pieces) {
    for (std::int64_t u = 1; u <= pc.length; ++u) {
      const __int128 num = static_cast<__int128>(whole) * pc.size + static_cast<__int128>(pc.value) * u;
      p.values.emplace_back(narrow_checked(num), pc.size);
    }
    whole = checked_add(whole, pc.length == pc.size ? pc.value : 0);
  }
  return p;
}

FracProfile fractional_conv_profile(const KnapsackInstance& a_inst, const KnapsackInstance& b_inst) {
  const FracProfile pa = greedy_fractional_profile(a_inst);
  const FracProfile pb = greedy_fractional_profile(b_inst);
  std::vector<Candidate> cands;
  add_side(cands, a_inst, 0);
  add_side(cands, b_inst, 1);
  const std::vector<Piece> pieces = greedy_pieces(std::move(cands), a_inst.capacity, b_inst.capacity);
  FracProfile p;
  const std::size_t total = static_cast<std::size_t>(a_inst.capacity + b_inst.capacity) + 1;
  p.used_a.reserve(total);
  p.used_b.reserve(total);
  std::int64_t used[2] = {0, 0};
  p.used_a.push_back(0);
  p.used_b.push_back(0);
  for (const Piece& pc : pieces) {
    for (std::int64_t u = 0; u < pc.length; ++u) {
      ++used[pc.side];
      p.used_a.push_back(used[0]);
      p.used_b.push_back(used[1]);
    }
  }
  p.values.reserve(total);
  for (std::size_t y = 0; y < p.used_a.size(); ++y) {
    p.values.push_back(pa.values[static_cast<std::size_t>(p.used_a[y])] +
                       pb.values[static_cast<std::size_t>(p.used_b[y])]);
  }
  return p;
}

UncertainSolution knapsack_certificate(const KnapsackInstance& a_inst, const KnapsackInstance& b_inst) {
  const FracProfile pa = greedy_fractional_profile(a_inst);
  const FracProfile pb = greedy_fractional_profile(b_inst);
  const FracProfile pc = fractional_conv_profile(a_inst, b_inst);
  const std::int64_t v_max = std::max(max_value(a_inst.items), max_value(b_inst.items));
  const std::int64_t ta = a_inst.capacity, tb = b_inst.capacity;

  // first_use[x]: smallest capacity at which the joint greedy spends x on A.
  std::vector<std::int64_t> first_use(static_cast<std::size_t>(ta) + 1, -1);
  for (std::size_t y = 0; y < pc.used_a.size(); ++y) {
    auto& slot = first_use[static_cast<std::size_t>(pc.used_a[y])];
    if (slot < 0) slot = static_cast<std::int64_t>(y);
  }

  UncertainSolution u;
  u.e_max = checked_mul(4, v_max);
  u.x.resize(static_cast<std::size_t>(ta) + 1);
  u.y.resize(static_cast<std::size_t>(ta) + 1);
  for (std::int64_t i = 0; i <= ta; ++i) {
    // gap(j) = c'(i + j) - a'(i) - b'(j) is non-negative, zero at the pivot,
    // non-increasing before it and non-decreasing after it.
    auto small_gap = [&](std::int64_t j) {
      const auto y = static_cast<std::size_t>(i + j);
      FractionSum s;
      s.add(pa.values[static_cast<std::size_t>(pc.used_a[y])], 1);
      s.add(pb.values[static_cast<std::size_t>(pc.used_b[y])], 1);
      s.add(pa.values[static_cast<std::size_t>(i)], -1);
      s.add(pb.values[static_cast<std::size_t>(j)], -1);
      return s.at_most(2 * v_max);
    };
    const std::int64_t pivot = first_use[static_cast<std::size_t>(i)] - i;
    if (pivot < 0 || pivot > tb) throw InvariantError("fractional pivot out of range");
    std::int64_t lo = 0, hi = pivot;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (small_gap(mid)) hi = mid; else lo = mid + 1;
    }
    u.x[static_cast<std::size_t>(i)] = lo;
    lo = pivot;
    hi = tb;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (small_gap(mid)) lo = mid; else hi = mid - 1;
    }
    u.y[static_cast<std::size_t>(i)] = lo;
  }
  for (std::size_t i = 1; i < u.x.size(); ++i) {
    if (u.x[i] < u.x[i - 1] || u.y[i] < u.y[i - 1]) throw InvariantError("knapsack certificate not monotone");
  }
  return u;
}

MaxPlusVec knapsack_conv(const KnapsackInstance& a_inst, const KnapsackInstance& b_inst, const MaxPlusVec& a,
                         const MaxPlusVec& b, const PredictionOptions& options) {
  check_zero_one(a_inst);
  check_zero_one(b_inst);
  require(a.size() == static_cast<std::size_t>(a_inst.capacity) + 1, "profile a must have length t_a + 1");
  require(b.size() == static_cast<std::size_t>(b_inst.capacity) + 1, "profile b must have length t_b + 1");
  MaxPlusVec c = conv_via_prediction(a, b, knapsack_certificate(a_inst, b_inst), options);
  // A packing that fits capacity k also fits k + 1.
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = std::max(c[k], c[k - 1]);
  return c;
}

}  // namespace maxknap
