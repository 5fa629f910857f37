// Copyright 2026 The Realz Authors
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
#include <vector>

#include <benchmark/benchmark.h>

#include "realz/realz.hpp"

namespace {

using realz::CorrelationPair;
using realz::Domain;

void BM_EnumerateHardcoreRing(benchmark::State& state) {
  const std::vector<int> dims{static_cast<int>(state.range(0))};
  const Domain domain = Domain::torus(dims, 1, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(realz::count_configurations(domain));
  state.counters["configurations"] = static_cast<double>(realz::count_configurations(domain));
}
BENCHMARK(BM_EnumerateHardcoreRing)->DenseRange(6, 18, 4);

void BM_EnumerateCapped(benchmark::State& state) {
  const Domain domain = Domain::uniform(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(realz::count_configurations(domain));
}
BENCHMARK(BM_EnumerateCapped)->DenseRange(4, 10, 2);

void BM_FullLpLatticeGas(benchmark::State& state) {
  const Domain domain = Domain::lattice_gas(static_cast<std::size_t>(state.range(0)));
  const auto corr = realz::correlations_of(realz::hardcore_gibbs(domain, 0.7).distribution);
  for (auto _ : state) benchmark::DoNotOptimize(realz::check_realizability(domain, corr));
}
BENCHMARK(BM_FullLpLatticeGas)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

void BM_FullLpRational(benchmark::State& state) {
  const Domain domain = Domain::lattice_gas(static_cast<std::size_t>(state.range(0)));
  const auto corr = realz::correlations_of(
      realz::hardcore_gibbs(domain, realz::Rational(7, 10)).distribution);
  realz::SolverOptions opts;
  opts.arithmetic_mode = realz::ArithmeticMode::kRational;
  for (auto _ : state) benchmark::DoNotOptimize(realz::check_realizability(domain, corr, opts));
}
BENCHMARK(BM_FullLpRational)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

CorrelationPair ring_correlations(const Domain& domain) {
  return realz::correlations_of(realz::hardcore_gibbs(domain, 1.0).distribution);
}

void BM_RingFullLp(benchmark::State& state) {
  const std::vector<int> dims{static_cast<int>(state.range(0))};
  const Domain domain = Domain::torus(dims, 1, 1.5);
  const auto corr = ring_correlations(domain);
  for (auto _ : state) benchmark::DoNotOptimize(realz::check_realizability(domain, corr));
}
BENCHMARK(BM_RingFullLp)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

void BM_RingStationaryLp(benchmark::State& state) {
  const std::vector<int> dims{static_cast<int>(state.range(0))};
  const Domain domain = Domain::torus(dims, 1, 1.5);
  const auto corr = ring_correlations(domain);
  const auto group = realz::translation_group(dims);
  for (auto _ : state) {
    benchmark::DoNotOptimize(realz::check_realizability_stationary(domain, corr, group));
  }
}
BENCHMARK(BM_RingStationaryLp)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
