// Copyright 2026 The modx Authors.
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

#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "modx/convolution_experiment.hpp"
#include "modx/error_bounds.hpp"
#include "modx/expansion_coeffs.hpp"
#include "modx/poisson_charlier.hpp"
#include "modx/primes.hpp"

namespace {

void BM_BuildNu(benchmark::State& state) {
  const modx::NuSpec spec{static_cast<double>(state.range(0)), {0.3, -0.1, 0.05, 0.02}};
  for (auto _ : state) benchmark::DoNotOptimize(modx::build_nu(spec));
}
BENCHMARK(BM_BuildNu)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Convolve(benchmark::State& state) {
  const auto po = modx::poisson_measure(static_cast<double>(state.range(0)));
  const auto ys = modx::ys_measure(4);
  for (auto _ : state) benchmark::DoNotOptimize(modx::convolve(po, ys));
}
BENCHMARK(BM_Convolve)->Arg(16)->Arg(256);

void BM_CharFn(benchmark::State& state) {
  const auto nu = modx::build_nu({static_cast<double>(state.range(0)), {0.3, -0.1}});
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(modx::char_fn(nu, theta));
    theta = theta > 3.0 ? 0.1 : theta + 0.01;
  }
}
BENCHMARK(BM_CharFn)->Arg(100)->Arg(10000);

void BM_GammaR(benchmark::State& state) {
  const modx::ExpansionCoeffs a{modx::Basis::kThetaPower, {0.3, -0.2, 0.1}};
  for (auto _ : state) benchmark::DoNotOptimize(modx::gamma_r(a));
}
BENCHMARK(BM_GammaR);

void BM_IntervalBound(benchmark::State& state) {
  modx::BoundInputs in;
  in.gamma_terms = {{0.5, 2.0}};
  in.rho = 2.0 * 200.0 / (std::numbers::pi * std::numbers::pi);
  const auto mu = modx::poisson_measure(200.0);
  const auto nu = modx::build_nu({200.0, {0.0, 0.4}});
  for (auto _ : state) benchmark::DoNotOptimize(modx::bound_cor0(in, mu, nu, true));
}
BENCHMARK(BM_IntervalBound);

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(modx::sieve_factor_counts(static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_EulerExpansion(benchmark::State& state) {
  const modx::PrimeTable table(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(modx::euler_expansion(modx::EulerKind::kPhi1, 6, table));
  }
}
BENCHMARK(BM_EulerExpansion)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
