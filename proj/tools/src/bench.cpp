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

#include "maxknap/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>

#include "maxknap/bounded_conv.hpp"
#include "maxknap/distorted_conv.hpp"
#include "maxknap/errors.hpp"
#include "maxknap/rng.hpp"
#include "maxknap/solvers.hpp"
#include "maxknap/vector_power.hpp"

namespace maxknap::cli {

namespace {

constexpr std::int64_t kVerifyLimit = 1024;

using Result = std::vector<std::int64_t>;

Result flatten(const MaxPlusVec& v) {
  Result out;
  out.reserve(v.size());
  for (ExtVal x : v) {
    if (x.is_finite()) {
      out.push_back(x.value());
    } else {
      out.push_back(x.is_neg_inf() ? INT64_MIN : INT64_MAX);
    }
  }
  return out;
}

MaxPlusVec random_entries(SplitMix64& rng, std::int64_t n, std::int64_t e) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = rng.uniform(0, e);
  return MaxPlusVec::from_ints(v);
}

std::vector<Item> random_items(SplitMix64& rng, std::int64_t t, std::int64_t v_max, std::int64_t multiplicity) {
  std::vector<Item> items(static_cast<std::size_t>(std::max<std::int64_t>(1, t / 4)));
  for (Item& it : items) {
    it.size = rng.uniform(1, std::max<std::int64_t>(1, t));
    it.value = rng.uniform(0, v_max);
    it.multiplicity = multiplicity;
  }
  return items;
}

// One benchmark cell: the timed computation and, for verification, an
// independent direct computation of the same result.
struct Cell {
  std::int64_t n = 0;
  std::int64_t t_or_e_max = 0;
  std::function<Result()> run;
  std::function<Result()> oracle;
};

Cell make_cell(const std::string& algo, std::int64_t size, std::int64_t e, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Cell cell;
  if (algo == "naive_conv" || algo == "bounded_range_conv") {
    auto a = std::make_shared<MaxPlusVec>(random_entries(rng, size, e));
    auto b = std::make_shared<MaxPlusVec>(random_entries(rng, size, e));
    cell = {size, e, nullptr, [a, b] { return flatten(naive_conv(*a, *b)); }};
    if (algo == "naive_conv") {
      cell.run = cell.oracle;
    } else {
      cell.run = [a, b, e] { return flatten(bounded_range_conv(*a, *b, e)); };
    }
  } else if (algo == "distorted_conv") {
    // A shared linear trend plus noise in [0, e / 2] has distortion at most e.
    const std::int64_t slope = rng.uniform(-3, 3);
    std::vector<std::int64_t> av(static_cast<std::size_t>(size)), bv(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) {
      const std::int64_t trend = slope * static_cast<std::int64_t>(i);
      av[i] = trend + rng.uniform(0, e / 2);
      bv[i] = trend + rng.uniform(0, e / 2);
    }
    auto a = std::make_shared<MaxPlusVec>(MaxPlusVec::from_ints(av));
    auto b = std::make_shared<MaxPlusVec>(MaxPlusVec::from_ints(bv));
    cell = {size, e, [a, b, e] { return flatten(distorted_conv(*a, *b, e)); },
            [a, b] { return flatten(naive_conv(*a, *b)); }};
  } else if (algo == "fast_power") {
    auto a = std::make_shared<MaxPlusVec>(random_entries(rng, 16, e));
    const std::int64_t k = std::max<std::int64_t>(1, (size - 1) / 15);
    cell = {k * 15 + 1, e, [a, k] { return flatten(fast_power(*a, k)); },
            [a, k] { return flatten(naive_power(*a, k)); }};
  } else if (algo == "knapsack_classic" || algo == "knapsack_conv" || algo == "unbounded_power") {
    const bool unbounded = algo == "unbounded_power";
    auto items = std::make_shared<std::vector<Item>>(random_items(rng, size, e, unbounded ? kUnbounded : 1));
    cell = {static_cast<std::int64_t>(items->size()), size, nullptr,
            [items, size] { return classic_dp(size, *items); }};
    if (algo == "knapsack_classic") {
      cell.run = cell.oracle;
    } else if (unbounded) {
      cell.run = [items, size] { return unbounded_via_power(size, *items); };
    } else {
      cell.run = [items, size, seed] {
        SolverConfig cfg;
        cfg.seed = seed;
        return knapsack_via_conv(size, *items, cfg);
      };
    }
  } else {
    throw DomainError("unknown bench algorithm '" + algo + "'");
  }
  return cell;
}

}  // namespace

const std::vector<std::string>& bench_algorithms() {
  static const std::vector<std::string> names{"naive_conv",       "bounded_range_conv", "distorted_conv", "fast_power",
                                              "knapsack_classic", "knapsack_conv",      "unbounded_power"};
  return names;
}

std::uint64_t fnv1a(std::span<const std::int64_t> values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t v : values) {
    auto bits = static_cast<std::uint64_t>(v);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (bits >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

std::uint64_t checksum(const MaxPlusVec& v) { return fnv1a(flatten(v)); }

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
  require(!spec.algorithms.empty(), "bench needs at least one algorithm");
  require(!spec.sizes.empty(), "bench needs at least one size");
  require(!spec.seeds.empty(), "bench needs at least one seed");
  require(spec.runs >= 3, "bench needs at least 3 timed runs");
  require(spec.e_max >= 0, "e_max must be non-negative");
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    require(spec.sizes[i] >= 1, "bench sizes must be positive");
    require(i == 0 || spec.sizes[i - 1] < spec.sizes[i], "bench sizes must be strictly increasing");
  }
  for (const std::string& algo : spec.algorithms) {
    const auto& known = bench_algorithms();
    require(std::find(known.begin(), known.end(), algo) != known.end(), "unknown bench algorithm '" + algo + "'");
  }

  std::vector<BenchRecord> records;
  for (const std::string& algo : spec.algorithms) {
    // Timed runs go round-robin over the cells of one algorithm, so a burst of
    // background load hits one run of several cells instead of most runs of one.
    std::vector<Cell> cells;
    std::vector<std::int64_t> cell_sizes;
    std::vector<std::uint64_t> cell_seeds;
    std::vector<Result> results;
    for (std::int64_t size : spec.sizes) {
      for (std::uint64_t seed : spec.seeds) {
        cells.push_back(make_cell(algo, size, spec.e_max, seed));
        cell_sizes.push_back(size);
        cell_seeds.push_back(seed);
        results.push_back(cells.back().run());  // warm-up
      }
    }
    std::vector<std::vector<std::int64_t>> times(cells.size());
    for (int r = 0; r < spec.runs; ++r) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto start = std::chrono::steady_clock::now();
        results[c] = cells[c].run();
        const auto stop = std::chrono::steady_clock::now();
        times[c].push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      }
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto& t = times[c];
      std::nth_element(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.end());
      BenchRecord rec{algo, cells[c].n, cells[c].t_or_e_max, cell_seeds[c], t[t.size() / 2], fnv1a(results[c])};
      if (spec.verify && cell_sizes[c] <= kVerifyLimit && fnv1a(cells[c].oracle()) != rec.result_checksum) {
        throw VerificationError("checksum mismatch for " + algo + " at size " + std::to_string(cell_sizes[c]) +
                                ", seed " + std::to_string(cell_seeds[c]));
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string bench_to_json(const std::vector<BenchRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const BenchRecord& r : records) {
    out.push_back({{"algorithm", r.algorithm},
                   {"n", r.n},
                   {"t_or_e_max", r.t_or_e_max},
                   {"seed", r.seed},
                   {"wall_nanos", r.wall_nanos},
                   {"result_checksum", r.result_checksum}});
  }
  return out.dump(2) + "\n";
}

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "algorithm,n,t_or_e_max,seed,wall_nanos,result_checksum\n";
  for (const BenchRecord& r : records) {
    os << r.algorithm << ',' << r.n << ',' << r.t_or_e_max << ',' << r.seed << ',' << r.wall_nanos << ','
       << r.result_checksum << '\n';
  }
  return os.str();
}

}  // namespace maxknap::cli
