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

#ifndef MAXKNAP_PREDICTION_HPP_
#define MAXKNAP_PREDICTION_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxknap/bounded_conv.hpp"
#include "maxknap/maxplus.hpp"

namespace maxknap {

// Closed index range [lo, hi]; empty when hi < lo.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const noexcept { return hi < lo; }
  std::int64_t length() const noexcept { return empty() ? 0 : hi - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A certificate for the convolution a * b: row i pairs a_i with the columns
// b_{x_i..y_i}. Every pair inside a row is within e_max of the optimum at its
// output index, every output index has an optimal witness inside some row,
// and both x and y are non-decreasing. Empty rows have y_i = x_i - 1.
struct UncertainSolution {
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
  std::int64_t e_max = 0;

  std::size_t rows() const noexcept { return x.size(); }
  Interval row(std::size_t i) const { return {x[i], y[i]}; }
};

// Checks the structural part of a certificate against |a| = rows and
// |b| = cols: lengths, monotonicity, column ranges and empty-row encoding.
// Throws DomainError.
void check_certificate_shape(const UncertainSolution& u, std::size_t rows, std::size_t cols);

// Rows i with x_i <= alpha and y_i >= beta, i.e. rows covering [alpha, beta].
Interval projection(const UncertainSolution& u, std::int64_t alpha, std::int64_t beta);

// Rows covering [alpha1, beta1] but not [alpha2, beta2]. The two column ranges
// must be disjoint; the difference is always a single interval.
Interval projection_diff(const UncertainSolution& u, std::int64_t alpha1, std::int64_t beta1,
                         std::int64_t alpha2, std::int64_t beta2);

// Full check of all certificate conditions by direct evaluation.
bool validate_uncertain(const MaxPlusVec& a, const MaxPlusVec& b, const UncertainSolution& u);

// Picks one in-certificate pair per output index, giving an e_max-approximation.
MaxPlusVec approx_from_uncertain(const MaxPlusVec& a, const MaxPlusVec& b, const UncertainSolution& u);

struct RoundStats {
  std::int64_t blocks = 0;          // non-empty subproblems
  std::int64_t a_length = 0;        // total a-slice length
  std::int64_t c_length = 0;        // total subproblem output length
  std::int64_t max_row_reuse = 0;   // most subproblems sharing one a-index
};

struct PredictionStats {
  std::int64_t padded_n = 0;
  std::vector<RoundStats> rounds;
};

struct PredictionOptions {
  // Check every subproblem's distortion against e_max by direct evaluation.
  bool verify_blocks = false;
  MulBackend backend = MulBackend::kAuto;
};

// Exact a * b for finite vectors given a valid certificate, by solving
// O(log n) rounds of disjoint distortion-bounded subproblems. Per-round totals
// (a-slice length <= 2n, output length <= 3n, a-index reuse <= 2) are checked
// on every call and raise InvariantError if violated.
MaxPlusVec conv_via_prediction(const MaxPlusVec& a, const MaxPlusVec& b, const UncertainSolution& u,
                               const PredictionOptions& options = {}, PredictionStats* stats = nullptr);

// Observes every conv_via_prediction call made on this thread while alive.
class PredictionStatsCollector {
 public:
  PredictionStatsCollector();
  ~PredictionStatsCollector();
  PredictionStatsCollector(const PredictionStatsCollector&) = delete;
  PredictionStatsCollector& operator=(const PredictionStatsCollector&) = delete;

  std::int64_t runs() const noexcept { return runs_; }
  // Largest observed a_length / n and c_length / n.
  double max_a_ratio() const noexcept { return max_a_ratio_; }
  double max_c_ratio() const noexcept { return max_c_ratio_; }
  std::int64_t max_row_reuse() const noexcept { return max_row_reuse_; }

  void record(const PredictionStats& stats);

 private:
  PredictionStatsCollector* previous_;
  std::int64_t runs_ = 0;
  double max_a_ratio_ = 0;
  double max_c_ratio_ = 0;
  std::int64_t max_row_reuse_ = 0;
};

}  // namespace maxknap

#endif  // MAXKNAP_PREDICTION_HPP_
