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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "maxknap/knapsack_types.hpp"
#include "maxknap/rng.hpp"
#include "maxknap/solvers.hpp"
#include "maxknap/vector_power.hpp"

namespace maxknap {
namespace {

std::vector<Item> random_items(std::size_t n, std::int64_t s_max, std::int64_t v_max, std::int64_t multiplicity,
                               std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Item> items(n);
  for (Item& it : items) it = Item{rng.uniform(1, s_max), rng.uniform(0, v_max), multiplicity};
  return items;
}

// Capacity t with t / 4 items of size up to t and value up to 4.
void BM_ClassicDp(benchmark::State& state) {
  const std::int64_t t = state.range(0);
  const auto items = random_items(static_cast<std::size_t>(t / 4), t, 4, 1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(classic_dp(t, items));
}
BENCHMARK(BM_ClassicDp)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Unit(benchmark::kMillisecond);

void BM_KnapsackViaConv(benchmark::State& state) {
  const std::int64_t t = state.range(0);
  const auto items = random_items(static_cast<std::size_t>(t / 4), t, 4, 1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(knapsack_via_conv(t, items));
}
BENCHMARK(BM_KnapsackViaConv)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Unit(benchmark::kMillisecond);

void BM_UnboundedViaPower(benchmark::State& state) {
  const std::int64_t t = state.range(0);
  const auto items = random_items(64, t, 6, kUnbounded, 6);
  for (auto _ : state) benchmark::DoNotOptimize(unbounded_via_power(t, items));
}
BENCHMARK(BM_UnboundedViaPower)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_SmallSizes(benchmark::State& state) {
  const std::int64_t t = state.range(0);
  const auto items = random_items(static_cast<std::size_t>(t / 4), 8, 20, 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(knapsack_small_sizes(t, items));
}
BENCHMARK(BM_SmallSizes)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_InfiniteMultiplicity(benchmark::State& state) {
  const std::int64_t t = state.range(0);
  const auto items = random_items(16, 6, 20, kUnbounded, 8);
  for (auto _ : state) benchmark::DoNotOptimize(knapsack_infinite_mult(t, items));
}
BENCHMARK(BM_InfiniteMultiplicity)->RangeMultiplier(100)->Range(100, 100000000);

}  // namespace
}  // namespace maxknap
