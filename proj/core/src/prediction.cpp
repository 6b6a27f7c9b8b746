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

#include "maxknap/prediction.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "maxknap/distorted_conv.hpp"
#include "maxknap/errors.hpp"

namespace maxknap {

namespace {

thread_local PredictionStatsCollector* active_collector = nullptr;

Interval project(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y, std::int64_t alpha,
                 std::int64_t beta) {
  // x is non-decreasing, so rows with x_i <= alpha form a prefix; y is
  // non-decreasing, so rows with y_i >= beta form a suffix.
  const auto end = std::upper_bound(x.begin(), x.end(), alpha) - x.begin();
  const auto begin = std::lower_bound(y.begin(), y.end(), beta) - y.begin();
  return {static_cast<std::int64_t>(begin), static_cast<std::int64_t>(end) - 1};
}

Interval interval_minus(Interval p, Interval q) {
  if (p.empty() || q.empty() || q.hi < p.lo || q.lo > p.hi) return p;
  if (q.lo <= p.lo && q.hi >= p.hi) return {p.lo, p.lo - 1};
  if (q.lo <= p.lo) return {q.hi + 1, p.hi};
  if (q.hi >= p.hi) return {p.lo, q.lo - 1};
  throw InvariantError("projection difference is not an interval");
}

MaxPlusVec slice(const MaxPlusVec& v, std::int64_t lo, std::int64_t hi) {
  const auto& e = v.elems();
  return MaxPlusVec(std::vector<ExtVal>(e.begin() + lo, e.begin() + hi + 1));
}

}  // namespace

void check_certificate_shape(const UncertainSolution& u, std::size_t rows, std::size_t cols) {
  require(u.x.size() == rows && u.y.size() == rows, "certificate must have one row per entry of a");
  require(u.e_max >= 0, "certificate e_max must be non-negative");
  const auto ncols = static_cast<std::int64_t>(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(u.x[i] >= 0 && u.x[i] <= ncols, "certificate row start out of range");
    require(u.y[i] >= u.x[i] - 1 && u.y[i] < ncols, "certificate row end out of range");
    if (i > 0) require(u.x[i - 1] <= u.x[i] && u.y[i - 1] <= u.y[i], "certificate rows must be monotone");
  }
}

Interval projection(const UncertainSolution& u, std::int64_t alpha, std::int64_t beta) {
  require(alpha <= beta, "projection needs alpha <= beta");
  return project(u.x, u.y, alpha, beta);
}

Interval projection_diff(const UncertainSolution& u, std::int64_t alpha1, std::int64_t beta1, std::int64_t alpha2,
                         std::int64_t beta2) {
  require(alpha1 <= beta1 && alpha2 <= beta2, "projection needs alpha <= beta");
  require(beta1 < alpha2 || beta2 < alpha1, "projection_diff needs disjoint column ranges");
  return interval_minus(project(u.x, u.y, alpha1, beta1), project(u.x, u.y, alpha2, beta2));
}

bool validate_uncertain(const MaxPlusVec& a, const MaxPlusVec& b, const UncertainSolution& u) {
  try {
    check_certificate_shape(u, a.size(), b.size());
  } catch (const DomainError&) {
    return false;
  }
  const MaxPlusVec c = naive_conv(a, b);
  std::vector<bool> witnessed(c.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::int64_t j = u.x[i]; j <= u.y[i]; ++j) {
      const ExtVal pair = conv_term(a[i], b[static_cast<std::size_t>(j)]);
      const ExtVal best = c[i + static_cast<std::size_t>(j)];
      if (pair + ExtVal(u.e_max) < best) return false;
      if (pair == best) witnessed[i + static_cast<std::size_t>(j)] = true;
    }
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!witnessed[k] && !c[k].is_neg_inf()) return false;
  }
  return true;
}

MaxPlusVec approx_from_uncertain(const MaxPlusVec& a, const MaxPlusVec& b, const UncertainSolution& u) {
  check_certificate_shape(u, a.size(), b.size());
  const std::size_t m = a.size();
  // i + x_i and i + y_i are strictly increasing, so the rows whose interval
  // reaches output k form a contiguous range.
  std::vector<std::int64_t> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = static_cast<std::int64_t>(i) + u.x[i];
    hi[i] = static_cast<std::int64_t>(i) + u.y[i];
  }
  MaxPlusVec c(a.size() + b.size() - 1, ExtVal::neg_inf());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    const auto first = std::lower_bound(hi.begin(), hi.end(), kk) - hi.begin();
    const auto last = std::upper_bound(lo.begin(), lo.end(), kk) - lo.begin();
    if (first >= last) throw DomainError("output index " + std::to_string(k) + " has no certificate row");
    const auto i = static_cast<std::size_t>(first);
    c[k] = conv_term(a[i], b[k - i]);
  }
  return c;
}

MaxPlusVec conv_via_prediction(const MaxPlusVec& a, const MaxPlusVec& b, const UncertainSolution& u,
                               const PredictionOptions& options, PredictionStats* stats) {
  require(a.all_finite() && b.all_finite(), "conv_via_prediction requires finite vectors");
  check_certificate_shape(u, a.size(), b.size());

  const std::size_t n = std::bit_ceil(std::max(a.size(), b.size()));
  const auto nn = static_cast<std::int64_t>(n);
  const auto bsize = static_cast<std::int64_t>(b.size());
  // Padding rows carry empty intervals just past the real columns.
  std::vector<std::int64_t> x = u.x, y = u.y;
  x.resize(n, bsize);
  y.resize(n, bsize - 1);

  PredictionStats local;
  local.padded_n = nn;
  MaxPlusVec c(a.size() + b.size() - 1, ExtVal::neg_inf());
  std::vector<std::int64_t> reuse(n + 1);
  const int levels = std::countr_zero(n);
  for (int s = 0; s <= levels; ++s) {
    const std::int64_t len = nn >> s;
    const std::int64_t count = std::int64_t{1} << s;
    RoundStats round;
    std::fill(reuse.begin(), reuse.end(), 0);
    for (std::int64_t i = 0; i < count; ++i) {
      const std::int64_t alpha = i * len, beta = alpha + len - 1;
      Interval rows = project(x, y, alpha, beta);
      if (s > 0) {
        const std::int64_t sib = i ^ 1;
        rows = interval_minus(rows, project(x, y, sib * len, sib * len + len - 1));
      }
      if (rows.empty()) continue;
      // Rows covering [alpha, beta] are real rows, whose columns lie inside b.
      if (rows.hi >= static_cast<std::int64_t>(a.size()) || beta >= bsize) {
        throw InvariantError("subproblem reaches padding");
      }
      const MaxPlusVec a_part = slice(a, rows.lo, rows.hi);
      const MaxPlusVec b_part = slice(b, alpha, beta);
      if (options.verify_blocks && !check_distortion(a_part, b_part, u.e_max)) {
        throw InvariantError("subproblem distortion exceeds e_max");
      }
      max_merge(c, distorted_conv(a_part, b_part, u.e_max, options.backend),
                static_cast<std::size_t>(alpha + rows.lo));
      ++round.blocks;
      round.a_length += rows.length();
      round.c_length += rows.length() + len - 1;
      ++reuse[static_cast<std::size_t>(rows.lo)];
      --reuse[static_cast<std::size_t>(rows.hi + 1)];
    }
    std::int64_t running = 0;
    for (std::size_t i = 0; i < n; ++i) {
      running += reuse[i];
      round.max_row_reuse = std::max(round.max_row_reuse, running);
    }
    if (round.a_length > 2 * nn || round.c_length > 3 * nn || round.max_row_reuse > 2) {
      throw InvariantError("prediction round exceeds its size bounds");
    }
    local.rounds.push_back(round);
  }
  if (active_collector != nullptr) active_collector->record(local);
  if (stats != nullptr) *stats = std::move(local);
  return c;
}

PredictionStatsCollector::PredictionStatsCollector() : previous_(active_collector) { active_collector = this; }

PredictionStatsCollector::~PredictionStatsCollector() { active_collector = previous_; }

void PredictionStatsCollector::record(const PredictionStats& stats) {
  ++runs_;
  const double n = static_cast<double>(stats.padded_n);
  for (const RoundStats& r : stats.rounds) {
    max_a_ratio_ = std::max(max_a_ratio_, static_cast<double>(r.a_length) / n);
    max_c_ratio_ = std::max(max_c_ratio_, static_cast<double>(r.c_length) / n);
    max_row_reuse_ = std::max(max_row_reuse_, r.max_row_reuse);
  }
  if (previous_ != nullptr) previous_->record(stats);
}

}  // namespace maxknap
