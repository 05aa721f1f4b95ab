// Copyright 2026 The callgraph-metrics Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "cgm/cgm.hpp"

namespace {

cgm::CallGraph gnm(std::size_t n, std::size_t m) {
  return cgm::generate_random({cgm::RandomModel::kErdosRenyiGnm, n, m, 2.5, 3});
}

cgm::CallGraph configuration(std::size_t n) {
  return cgm::largest_wcc(cgm::generate_random({cgm::RandomModel::kErasedConfiguration, n, 0, 2.5, 3}));
}

void BM_Betweenness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const cgm::CallGraph g = gnm(n, 4 * n);
  for (auto _ : state) benchmark::DoNotOptimize(cgm::betweenness(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Betweenness)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_ClusteringProfile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const cgm::CallGraph g = gnm(n, 4 * n);
  for (auto _ : state) benchmark::DoNotOptimize(cgm::clustering_profile(g, 4));
}
BENCHMARK(BM_ClusteringProfile)->RangeMultiplier(2)->Range(256, 4096);

void BM_FitPowerLaw(benchmark::State& state) {
  const cgm::CallGraph g = configuration(static_cast<std::size_t>(state.range(0)));
  const cgm::DegreeSequence seq = cgm::degree_sequence(g, cgm::DegreeMode::kIn);
  for (auto _ : state) benchmark::DoNotOptimize(cgm::fit_power_law(seq));
}
BENCHMARK(BM_FitPowerLaw)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SpectralRadius(benchmark::State& state) {
  const cgm::CallGraph g = configuration(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cgm::spectral_radius(g));
}
BENCHMARK(BM_SpectralRadius)->Arg(1000)->Arg(10000);

void BM_StrongComponents(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const cgm::CallGraph g = gnm(n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(cgm::strong_component_labels(g));
}
BENCHMARK(BM_StrongComponents)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
