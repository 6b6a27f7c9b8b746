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

#ifndef MAXKNAP_CLI_BENCH_HPP_
#define MAXKNAP_CLI_BENCH_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxknap/maxplus.hpp"

namespace maxknap::cli {

// Benchmarked algorithms and the meaning of a ladder size for each:
//   naive_conv, bounded_range_conv, distorted_conv: vector length n
//   fast_power: output length n of a^k for a random a of length 16
//   knapsack_classic, knapsack_conv, unbounded_power: capacity t, with
//   max(1, t / 4) items
const std::vector<std::string>& bench_algorithms();

struct BenchSpec {
  std::vector<std::string> algorithms;
  std::vector<std::int64_t> sizes;  // strictly increasing
  std::vector<std::uint64_t> seeds;
  std::int64_t e_max = 4;           // entry or item-value bound
  int runs = 5;                     // timed runs per cell, after one warm-up,
                                    // taken round-robin over an algorithm's cells
  bool verify = false;              // compare against a direct oracle up to size 1024
};

struct BenchRecord {
  std::string algorithm;
  std::int64_t n = 0;
  std::int64_t t_or_e_max = 0;
  std::uint64_t seed = 0;
  std::int64_t wall_nanos = 0;  // median over the timed runs
  std::uint64_t result_checksum = 0;
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 64-bit FNV-1a over the little-endian bytes of each value.
std::uint64_t fnv1a(std::span<const std::int64_t> values);
// Checksum of a vector, with -inf and +inf hashed as INT64_MIN and INT64_MAX.
std::uint64_t checksum(const MaxPlusVec& v);

// Runs every (algorithm, size, seed) cell in order. Throws DomainError for an
// invalid spec and VerificationError if a checked result disagrees with its
// oracle.
std::vector<BenchRecord> run_bench(const BenchSpec& spec);

std::string bench_to_json(const std::vector<BenchRecord>& records);
std::string bench_to_csv(const std::vector<BenchRecord>& records);

}  // namespace maxknap::cli

#endif  // MAXKNAP_CLI_BENCH_HPP_
