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

#include "maxknap/rng.hpp"
#include "maxknap/tree.hpp"

namespace maxknap {
namespace {

template <SeparabilityStrategy kStrategy>
void BM_SeparabilityProfile(benchmark::State& state) {
  SplitMix64 rng(9);
  const WeightedTree tree = random_tree(static_cast<int>(state.range(0)), 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(separability_profile(tree, kStrategy));
}
BENCHMARK_TEMPLATE(BM_SeparabilityProfile, SeparabilityStrategy::kSubtreeDp)
    ->RangeMultiplier(4)
    ->Range(64, 4096)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_SeparabilityProfile, SeparabilityStrategy::kSpine)
    ->RangeMultiplier(4)
    ->Range(64, 4096)
    ->Unit(benchmark::kMillisecond);

void BM_BoundedSeparability(benchmark::State& state) {
  SplitMix64 rng(9);
  const WeightedTree tree = random_tree(static_cast<int>(state.range(0)), 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_separability(tree));
}
BENCHMARK(BM_BoundedSeparability)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_CentroidPartition(benchmark::State& state) {
  SplitMix64 rng(9);
  const int n = static_cast<int>(state.range(0));
  const WeightedTree tree = random_tree(n, 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(centroid_partition(tree, n / 3));
}
BENCHMARK(BM_CentroidPartition)->RangeMultiplier(8)->Range(64, 1 << 18);

}  // namespace
}  // namespace maxknap
