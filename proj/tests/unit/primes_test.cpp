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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "modx/errors.hpp"
#include "modx/poisson_charlier.hpp"
#include "modx/primes.hpp"

namespace modx {
namespace {

namespace fs = std::filesystem;

// High-precision values from tests/oracles/golden_values.py.
constexpr double kB1 = 0.26149721284764278376;
constexpr double kPrimeZeta2 = 0.45224742004106549851;
constexpr double kPhi1A2 = -1.0144003472811032704;
constexpr double kPhi2A1 = 1.0346538818974379116;

std::pair<int, int> trial_division(std::uint64_t n) {
  int w = 0, big = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    ++w;
    while (n % d == 0) {
      n /= d;
      ++big;
    }
  }
  if (n > 1) {
    ++w;
    ++big;
  }
  return {w, big};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("modx_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

TEST(PrimeTable, Counts) {
  EXPECT_EQ(PrimeTable(10).primes().size(), 4u);
  EXPECT_EQ(PrimeTable(1'000'000).primes().size(), 78498u);
  EXPECT_EQ(PrimeTable(2).primes().front(), 2u);
}

TEST(Sieve, SmallValues) {
  const auto c = sieve_factor_counts(100);
  EXPECT_EQ(c.omega[1], 0);
  EXPECT_EQ(c.big_omega[1], 0);
  EXPECT_EQ(c.omega[12], 2);
  EXPECT_EQ(c.big_omega[12], 3);
  for (int p : {2, 3, 5, 7, 97}) {
    EXPECT_EQ(c.omega[p], 1);
    EXPECT_EQ(c.big_omega[p], 1);
  }
  EXPECT_THROW(sieve_factor_counts(kMaxSieve + 1), PreconditionError);
}

TEST(Sieve, TrialDivisionOracle) {
  const std::uint64_t n_max = 3'000'000;
  const auto c = sieve_factor_counts(n_max);
  long long total = 0;
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto [w, big] = trial_division(n);
    ASSERT_EQ(c.omega[n], w) << n;
    ASSERT_EQ(c.big_omega[n], big) << n;
    total += w;
  }
  EXPECT_EQ(total, 24300);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> u(2, n_max);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = u(rng);
    const auto [w, big] = trial_division(n);
    ASSERT_EQ(c.omega[n], w) << n;
    ASSERT_EQ(c.big_omega[n], big) << n;
    ASSERT_LE(c.big_omega[n], std::log2(static_cast<double>(n)));
  }
}

TEST(Sieve, OmegaSumToTenMillion) {
  const auto c = sieve_factor_counts(10'000'000);
  long long total = 0;
  for (std::uint64_t n = 1; n <= c.n_max; ++n) total += c.omega[n];
  EXPECT_EQ(total, 30130317);
  const auto emp = empirical_counts(c, c.n_max, DivisorKind::kOmega);
  EXPECT_NEAR(emp.mean(), 3.0130317, 1e-12);
  EXPECT_NEAR(emp.mean(), std::log(std::log(1e7)) + kB1, 0.05);
}

TEST(Cache, RoundTripAndHeader) {
  const auto dir = scratch_dir("cache");
  const auto c = sieve_factor_counts(50'000);
  const auto file = dir / "counts.bin";
  save_factor_counts(c, file);
  EXPECT_EQ(fs::file_size(file), 5u + 8u + 50'000u);
  std::ifstream in(file, std::ios::binary);
  char head[13];
  in.read(head, 13);
  EXPECT_EQ(std::string(head, 5), "MODX1");
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= static_cast<std::uint64_t>(static_cast<unsigned char>(head[5 + i])) << (8 * i);
  EXPECT_EQ(n, 50'000u);

  const auto back = load_factor_counts(file);
  EXPECT_EQ(back.n_max, c.n_max);
  EXPECT_EQ(back.omega, c.omega);
  EXPECT_TRUE(back.big_omega_saturated);  // 2^15 <= 50000
  for (std::uint64_t k = 1; k <= c.n_max; ++k) {
    ASSERT_EQ(back.big_omega[k], std::min<int>(c.big_omega[k], 15));
  }
  EXPECT_EQ(back.big_omega[32768], 15);
  fs::remove_all(dir);
}

TEST(Cache, ReusesFile) {
  const auto dir = scratch_dir("reuse");
  const auto a = cached_factor_counts(20'000, dir);
  EXPECT_TRUE(fs::exists(dir / "factor_counts_20000.bin"));
  const auto b = cached_factor_counts(20'000, dir);
  EXPECT_EQ(a.omega, b.omega);
  EXPECT_EQ(a.big_omega, b.big_omega);
  EXPECT_FALSE(b.big_omega_saturated);
  fs::remove_all(dir);
}

TEST(Cache, RejectsCorruptFile) {
  const auto dir = scratch_dir("corrupt");
  std::ofstream(dir / "bad.bin", std::ios::binary) << "NOPE";
  EXPECT_ANY_THROW(load_factor_counts(dir / "bad.bin"));
  fs::remove_all(dir);
}

TEST(Euler, PhiOneCoefficients) {
  const auto e = euler_expansion(EulerKind::kPhi1, 2, 10'000'000);
  EXPECT_EQ(e.coeffs[0], 1.0);
  EXPECT_NEAR(e.coeffs[1], kB1, 1e-7);
  EXPECT_LE(std::abs(e.coeffs[1] - kB1), e.coeff_error[1]);
  EXPECT_NEAR(e.coeffs[2], kPhi1A2, 1e-7);
  EXPECT_LE(std::abs(e.coeffs[2] - kPhi1A2), e.coeff_error[2]);
  EXPECT_NEAR(e.coeffs[2], kB1 * kB1 / 2 - std::numbers::pi * std::numbers::pi / 12 - kPrimeZeta2 / 2,
              1e-7);
}

TEST(Euler, PhiTwoFirstCoefficient) {
  const auto e = euler_expansion(EulerKind::kPhi2, 2, 1'000'000);
  EXPECT_NEAR(e.coeffs[1], kPhi2A1, 1e-6);
  EXPECT_LE(std::abs(e.coeffs[1] - kPhi2A1), e.coeff_error[1]);
}

TEST(Euler, StableUnderCutoffDoubling) {
  for (auto kind : {EulerKind::kPhi1, EulerKind::kPhi2}) {
    const auto a = euler_expansion(kind, 6, 1'000'000);
    const auto b = euler_expansion(kind, 6, 2'000'000);
    for (int l = 1; l <= 6; ++l) {
      EXPECT_LE(std::abs(a.coeffs[l] - b.coeffs[l]), a.coeff_error[l]) << to_string(kind) << l;
    }
  }
}

TEST(Euler, Preconditions) {
  EXPECT_THROW(euler_expansion(EulerKind::kPhi1, 7, 1'000'000), PreconditionError);
  EXPECT_THROW(euler_expansion(EulerKind::kPhi1, 2, 1000), PreconditionError);
}

TEST(ErdosKac, OmegaParams) {
  const auto p = erdos_kac_params(DivisorKind::kOmega, 10'000'000);
  EXPECT_NEAR(p.a1, kB1, 1e-7);
  EXPECT_NEAR(p.x, 2.097181486889292, 1e-7);
  EXPECT_EQ(p.m, 2);
  EXPECT_NEAR(p.p, 0.3117394535333825, 1e-7);
  EXPECT_NEAR(p.offset, -2.05024224068574, 1e-7);
}

TEST(ErdosKac, BigOmegaParams) {
  const auto p = erdos_kac_params(DivisorKind::kBigOmega, 10'000'000);
  EXPECT_EQ(p.m, 0);
  EXPECT_NEAR(p.p, 0.5194892415628943, 1e-7);
  EXPECT_NEAR(p.offset, 0.5151646403345436, 1e-7);
}

TEST(ErdosKac, FirstOrderMeasureFormula) {
  const double L = std::log(std::log(1e7));
  const auto nu = build_nu({L, {kB1}});
  const auto po = poisson_measure(L);
  for (std::int64_t j = 0; j <= 12; ++j) {
    EXPECT_NEAR(nu.at(j), po.at(j) * (1.0 - kB1 * (1.0 - j / L)), 1e-15);
  }
  EXPECT_NEAR(nu.mean(), L + kB1, 1e-12);
}

TEST(ErdosKac, ExpansionBeatsPoissonAtTenMillion) {
  const auto counts = sieve_factor_counts(10'000'000);
  const auto expansion = euler_expansion(EulerKind::kPhi1, 2, 10'000'000);
  const std::vector<std::uint64_t> ladder = {100'000, 10'000'000};
  const auto rows = erdos_kac_compare(counts, ladder, 2, DivisorKind::kOmega, expansion);
  ASSERT_EQ(rows.size(), 2u);
  const auto& top = rows.back();
  EXPECT_LT(top.nu1_d_k, top.poisson_d_k);
  EXPECT_LT(top.q_d_k, top.poisson_d_k);
  ASSERT_TRUE(top.nu2_d_k.has_value());
  EXPECT_NEAR(top.empirical_mean, 3.0130317, 1e-12);
  EXPECT_THROW(erdos_kac_compare(counts, std::vector<std::uint64_t>{1000}, 1, DivisorKind::kOmega,
                                 expansion),
               PreconditionError);
}

}  // namespace
}  // namespace modx
