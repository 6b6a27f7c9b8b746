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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "maxknap/bounded_conv.hpp"
#include "maxknap/distorted_conv.hpp"
#include "maxknap/maxplus.hpp"
#include "maxknap/rng.hpp"
#include "maxknap/vector_power.hpp"

namespace maxknap {
namespace {

MaxPlusVec random_bounded(std::size_t n, std::int64_t e, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = rng.uniform(0, e);
  return MaxPlusVec::from_ints(v);
}

// A shared linear trend plus noise in [0, e / 2], so the pair has distortion at most e.
MaxPlusVec ramp(std::size_t n, std::int64_t e, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::int64_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = -3 * static_cast<std::int64_t>(i) + rng.uniform(0, e / 2);
  return MaxPlusVec::from_ints(v);
}

void BM_NaiveConv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MaxPlusVec a = random_bounded(n, 4, 1), b = random_bounded(n, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(naive_conv(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NaiveConv)->RangeMultiplier(2)->Range(1 << 8, 1 << 13)->Complexity(benchmark::oNSquared);

template <MulBackend kBackend>
void BM_BoundedRangeConv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::int64_t e = state.range(1);
  const MaxPlusVec a = random_bounded(n, e, 1), b = random_bounded(n, e, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_range_conv(a, b, e, kBackend));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_TEMPLATE(BM_BoundedRangeConv, MulBackend::kAuto)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 17, 2), {4}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_BoundedRangeConv, MulBackend::kGmp)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 17, 2), {4, 16}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_BoundedRangeConv, MulBackend::kNtt)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 17, 2), {4, 16}})
    ->Unit(benchmark::kMillisecond);

void BM_DistortedConv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MaxPlusVec a = ramp(n, 4, 1), b = ramp(n, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(distorted_conv(a, b, 4));
}
BENCHMARK(BM_DistortedConv)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

// Non-decreasing with a_0 = 0, the shape knapsack profiles have.
MaxPlusVec rising(std::size_t n, std::int64_t e, std::uint64_t seed) {
  std::vector<std::int64_t> v = random_bounded(n, e, seed).to_ints();
  v[0] = 0;
  for (std::size_t i = 1; i < n; ++i) v[i] = std::max(v[i], v[i - 1]);
  return MaxPlusVec::from_ints(v);
}

void BM_FastPower(benchmark::State& state) {
  const MaxPlusVec a = rising(16, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(fast_power(a, state.range(0)));
}
BENCHMARK(BM_FastPower)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

void BM_NaivePower(benchmark::State& state) {
  const MaxPlusVec a = rising(16, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(naive_power(a, state.range(0)));
}
BENCHMARK(BM_NaivePower)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

// Entries that fall below their running maximum widen every window, so the
// cost grows with the drop.
void BM_FastPowerFallingTail(benchmark::State& state) {
  MaxPlusVec a = random_bounded(16, 6, 3);
  a[0] = ExtVal(0);
  for (auto _ : state) benchmark::DoNotOptimize(fast_power(a, state.range(0)));
}
BENCHMARK(BM_FastPowerFallingTail)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace maxknap
