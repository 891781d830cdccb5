// Copyright 2026 The gexit Authors.
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

#include <array>

#include "gexit/distributions.hpp"
#include "gexit/evt.hpp"
#include "gexit/exitsim.hpp"
#include "gexit/rng.hpp"

namespace {

void BM_Philox(benchmark::State& state) {
  std::array<std::uint32_t, 4> ctr{0, 0, 0, 0};
  const std::array<std::uint32_t, 2> key{1, 2};
  for (auto _ : state) {
    ++ctr[0];
    benchmark::DoNotOptimize(gexit::philox4x32(ctr, key));
  }
}
BENCHMARK(BM_Philox);

void BM_Normal(benchmark::State& state) {
  gexit::RngStream s(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.normal());
}
BENCHMARK(BM_Normal);

void BM_GaussianTail(benchmark::State& state) {
  double r = 0.0;
  for (auto _ : state) {
    r = r > 37.0 ? 0.0 : r + 0.37;
    benchmark::DoNotOptimize(gexit::gaussian_tail(r));
  }
}
BENCHMARK(BM_GaussianTail);

void BM_ExactExit(benchmark::State& state) {
  const auto p = gexit::ExitProblem::make(1.0, 0.01, 1.0, 1e-3);
  gexit::RngStream s(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(gexit::simulate_exit_exact(p, s));
}
BENCHMARK(BM_ExactExit);

void BM_TruncatedGaussian(benchmark::State& state) {
  gexit::RngStream s(3, 0);
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gexit::truncated_gaussian(r, s));
}
BENCHMARK(BM_TruncatedGaussian)->Arg(0)->Arg(2)->Arg(10);

void BM_SolveNormalizers(benchmark::State& state) {
  const auto g = gexit::gaussian_model();
  for (auto _ : state) benchmark::DoNotOptimize(gexit::solve_normalizers(g, 1000000000));
}
BENCHMARK(BM_SolveNormalizers);

}  // namespace

BENCHMARK_MAIN();
