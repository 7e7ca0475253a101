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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "modx/errors.hpp"
#include "modx/poisson_charlier.hpp"

namespace modx {
namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

TEST(PoissonPmf, GoldenAndEdgeCases) {
  EXPECT_NEAR(poisson_pmf(100.0, 100), 0.039860996809147135234, 1e-15);
  EXPECT_NEAR(poisson_pmf(2.0, 0), std::exp(-2.0), 1e-16);
  EXPECT_THROW(poisson_pmf(0.0, 1), PreconditionError);
  EXPECT_THROW(poisson_pmf(1.0, -1), PreconditionError);
}

TEST(PoissonMeasure, MassAccountsForTruncation) {
  for (double lambda : {0.3, 1.0, 7.5, 100.0, 2500.0}) {
    const auto po = poisson_measure(lambda);
    EXPECT_NEAR(po.total_mass() + po.truncated_mass(), 1.0, 1e-12) << lambda;
    EXPECT_LE(po.truncated_mass(), 1e-14);
  }
}

TEST(Charlier, LowOrdersAndGolden) {
  EXPECT_DOUBLE_EQ(charlier(0, 5, 3.0), 1.0);
  EXPECT_NEAR(charlier(1, 4, 2.0), 1.0 - 4.0 / 2.0, 1e-15);
  EXPECT_NEAR(charlier(3, 7, 5.0), 0.16, 1e-14);
  EXPECT_THROW(charlier(kMaxCharlierOrder + 1, 1, 2.0), PreconditionError);
}

TEST(Charlier, ContextMatchesDirect) {
  const CharlierContext ctx(7.5, 8);
  for (std::int64_t j = 0; j < 30; ++j) {
    const auto v = ctx.values(j);
    for (int l = 0; l <= 8; ++l) EXPECT_NEAR(v[l], charlier(l, j, 7.5), 1e-12);
  }
}

TEST(Charlier, Orthogonality) {
  for (double lambda : {2.0, 10.0, 50.0}) {
    const auto po = poisson_measure(lambda, {1e-300, 400.0});
    const CharlierContext ctx(lambda, 6);
    std::vector<std::vector<double>> g(7, std::vector<double>(7, 0.0));
    for (std::int64_t j = po.offset(); j <= po.last(); ++j) {
      const auto v = ctx.values(j);
      for (int k = 0; k <= 6; ++k) {
        for (int l = 0; l <= 6; ++l) g[k][l] += po.at(j) * v[k] * v[l];
      }
    }
    for (int k = 0; k <= 6; ++k) {
      for (int l = 0; l <= 6; ++l) {
        if (k == l) {
          const double diag = factorial(k) / std::pow(lambda, k);
          EXPECT_NEAR(g[k][l] / diag, 1.0, 1e-8) << lambda << " " << k;
        } else {
          EXPECT_NEAR(g[k][l], 0.0, 1e-8) << lambda << " " << k << " " << l;
        }
      }
    }
  }
}

TEST(Charlier, BoundHoldsOnGrid) {
  for (double lambda : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 200.0}) {
    const int top = static_cast<int>(3 * lambda) + 20;
    for (int l = 0; l <= 10; ++l) {
      for (int j = 0; j <= top; ++j) {
        EXPECT_LE(std::abs(charlier(l, j, lambda)), charlier_bound(l, j, lambda) * (1 + 1e-12))
            << lambda << " " << l << " " << j;
      }
    }
  }
}

TEST(Chernoff, DecreasesInLambda) {
  EXPECT_LT(chernoff_tail(100.0, 0.5), chernoff_tail(10.0, 0.5));
  EXPECT_THROW(chernoff_tail(10.0, 0.0), PreconditionError);
  EXPECT_THROW(chernoff_tail(10.0, 1.5), PreconditionError);
  // Against the exact Poisson tail.
  const auto po = poisson_measure(60.0);
  const double tail = tail_mass(po, 30, 90) / 2.0;
  EXPECT_LE(tail, chernoff_tail(60.0, 0.5));
}

TEST(BuildNu, EmptyExpansionIsPoisson) {
  const auto nu = build_nu({8.0, {}});
  EXPECT_EQ(nu, poisson_measure(8.0));
}

TEST(BuildNu, FirstOrderPointwise) {
  const NuSpec spec{10.0, {0.3}};
  const auto nu = build_nu(spec);
  for (std::int64_t j = 0; j < 30; ++j) {
    const double expect = poisson_pmf(10.0, j) * (1.0 - 0.3 * (1.0 - j / 10.0));
    EXPECT_NEAR(nu.at(j), expect, 1e-16);
  }
}

TEST(BuildNu, CharacteristicFunctionAndMass) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> lam(0.5, 200.0);
  std::uniform_real_distribution<double> coef(-0.4, 0.4);
  std::uniform_int_distribution<int> ord(0, 6);
  for (int i = 0; i < 50; ++i) {
    NuSpec spec{lam(rng), {}};
    for (int l = ord(rng); l > 0; --l) spec.atilde.push_back(coef(rng));
    const auto nu = build_nu(spec);
    EXPECT_NEAR(nu.total_mass(), 1.0, 1e-10 + nu.truncated_mass());
    for (int k = 0; k < 512; ++k) {
      const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * k / 511.0;
      const ComplexPoint direct = char_fn(nu, theta);
      EXPECT_LE(std::abs(direct - nu_char_fn(spec, theta)), 1e-10 + nu.truncated_mass());
    }
  }
}

TEST(BuildNu, NonnegativeNearCentre) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lam(20.0, 300.0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    NuSpec spec{lam(rng), {u(rng), u(rng), u(rng)}};
    double s = 0.0;
    for (std::size_t l = 0; l < 3; ++l) s += std::pow(2.0, l + 1) * std::abs(spec.atilde[l]);
    for (auto& a : spec.atilde) a *= 1.5 / s;
    const auto nu = build_nu(spec);
    const double sd = std::sqrt(spec.lambda);
    for (auto j = static_cast<std::int64_t>(std::ceil(spec.lambda - sd));
         j <= static_cast<std::int64_t>(std::floor(spec.lambda + sd)); ++j) {
      EXPECT_GE(nu.at(j), 0.0) << spec.lambda << " " << j;
    }
  }
}

TEST(ABar, Definition) {
  EXPECT_DOUBLE_EQ(a_bar(std::vector<double>{}), 1.0);
  EXPECT_NEAR(a_bar(std::vector<double>{0.3, 0.1}), 2.0, 1e-15);
  EXPECT_NEAR(a_bar(std::vector<double>{-0.3, -0.1}), 2.0, 1e-15);
}

TEST(NuTail, BoundsAndWindows) {
  const NuSpec trivial{12.0, {}};
  EXPECT_DOUBLE_EQ(nu_tail_bound(trivial, 12, TailSide::kLower), 1.0);

  const NuSpec spec{50.0, {0.2, 0.1}};
  const auto nu = build_nu(spec);
  double lower = 0.0;
  for (std::int64_t j = 0; j <= 30; ++j) lower += std::abs(nu.at(j));
  EXPECT_LE(lower, nu_tail_bound(spec, 30, TailSide::kLower));
  double upper = nu.truncated_mass();
  for (std::int64_t j = 75; j <= nu.last(); ++j) upper += std::abs(nu.at(j));
  EXPECT_LE(upper, nu_tail_bound(spec, 75, TailSide::kUpper));

  EXPECT_THROW(nu_tail_bound(spec, 51, TailSide::kLower), PreconditionError);
  EXPECT_THROW(nu_tail_bound(spec, -1, TailSide::kLower), PreconditionError);
  EXPECT_THROW(nu_tail_bound(spec, 51, TailSide::kUpper), PreconditionError);
  EXPECT_THROW(nu_tail_bound(spec, 101, TailSide::kUpper), PreconditionError);
}

TEST(PoissonCf, GaussianEnvelope) {
  for (double lambda : {0.5, 3.0, 40.0}) {
    const double rho = 2.0 * lambda / (std::numbers::pi * std::numbers::pi);
    for (int k = -200; k <= 200; ++k) {
      const double theta = std::numbers::pi * k / 200.0;
      EXPECT_LE(std::abs(poisson_cf(lambda, theta)), std::exp(-rho * theta * theta) * (1 + 1e-14));
    }
  }
}

}  // namespace
}  // namespace modx
