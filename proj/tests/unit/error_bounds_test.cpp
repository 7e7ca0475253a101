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

#include "json.hpp"
#include "modx/error_bounds.hpp"
#include "modx/errors.hpp"
#include "modx/poisson_charlier.hpp"

namespace modx {
namespace {

constexpr double kPi = std::numbers::pi;

BoundInputs single(double gamma, double t, double rho) {
  BoundInputs in;
  in.gamma_terms = {{gamma, t}};
  in.rho = rho;
  return in;
}

TEST(NormalAbsMoment, QuadratureGolden) {
  EXPECT_NEAR(normal_abs_moment(1.0), 0.79788456080286535588, 1e-14);
  EXPECT_NEAR(normal_abs_moment(1.5), 0.86003998732451953538, 1e-14);
  EXPECT_NEAR(normal_abs_moment(2.0), 1.0, 1e-14);
  EXPECT_NEAR(normal_abs_moment(2.5), 1.2332684379936878285, 1e-14);
  EXPECT_NEAR(normal_abs_moment(3.0), 1.5957691216057307118, 1e-14);
  EXPECT_NEAR(normal_abs_moment(4.0), 3.0, 1e-13);
  EXPECT_NEAR(normal_abs_moment(0.0), 1.0, 1e-15);
  EXPECT_THROW(normal_abs_moment(-1.0), PreconditionError);
}

TEST(AlphaConstants, Branches) {
  const auto c1 = alpha_constants(1.0);
  EXPECT_NEAR(c1.alpha1, kPi / 2.0, 1e-15);
  EXPECT_NEAR(c1.alpha2, kPi, 1e-15);
  const auto c2 = alpha_constants(2.0);
  EXPECT_NEAR(c2.alpha2, kPi * kPi / 2.0, 1e-14);
  EXPECT_NEAR(c2.alpha1_prime, c2.alpha1 * std::pow(kPi * kPi / 2.0, 1.5), 1e-12);
  EXPECT_NEAR(c2.alpha2_prime, c2.alpha2 * (kPi * kPi / 2.0), 1e-12);
  for (double t : {0.3, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0}) {
    const auto c = alpha_constants(t);
    const double beta1p = std::pow(2.0, -(t + 1) / 2) * normal_abs_moment(t) / std::sqrt(2 * kPi);
    EXPECT_GE(c.alpha1, beta1p);
    EXPECT_GE(c.alpha1, std::pow(kPi, t) / (t + 1));
  }
  EXPECT_THROW(alpha_constants(0.0), PreconditionError);
}

TEST(SingleTermBound, ClampAndLinearity) {
  const auto r = bound_th0(single(1.0, 1.0, 0.0));
  EXPECT_NEAR(r.loc_bound, alpha_constants(1.0).alpha1, 1e-15);
  const auto r2 = bound_th0(single(2.0, 1.0, 0.0));
  EXPECT_DOUBLE_EQ(r2.loc_bound, 2.0 * r.loc_bound);
  EXPECT_DOUBLE_EQ(r2.kolmogorov_bound, 2.0 * r.kolmogorov_bound);
  const auto clamp = bound_th0(single(1.0, 2.0, 0.5));
  EXPECT_NEAR(clamp.loc_bound, alpha_constants(2.0).alpha1, 1e-15);
}

TEST(SingleTermBound, BernoulliPerturbedPoisson) {
  for (double lambda : {5.0, 50.0}) {
    const double q = 0.2;
    const auto po = poisson_measure(lambda);
    const auto mu = convolve(po, SignedMeasure(0, {1.0 - q, q}));
    BoundInputs in = single(q, 1.0, 2.0 * lambda / (kPi * kPi));
    const auto r = bound_th0(in);
    EXPECT_LE(distance(DistanceKind::kLocal, mu, po), r.loc_bound);
    EXPECT_LE(distance(DistanceKind::kKolmogorov, mu, po), r.kolmogorov_bound);
  }
}

TEST(SingleTermBound, MonotoneInGammaAndRho) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> g(0.0, 3.0), t(0.2, 4.0), rho(0.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double g1 = g(rng), g2 = g1 + g(rng), tt = t(rng), r1 = rho(rng), r2 = r1 + rho(rng);
    const auto a = bound_th0(single(g1, tt, r1));
    const auto b = bound_th0(single(g2, tt, r1));
    const auto c = bound_th0(single(g1, tt, r2));
    EXPECT_LE(a.loc_bound, b.loc_bound);
    EXPECT_LE(a.kolmogorov_bound, b.kolmogorov_bound);
    EXPECT_GE(a.loc_bound, c.loc_bound);
    EXPECT_GE(a.kolmogorov_bound, c.kolmogorov_bound);
  }
}

TEST(MultiTermBound, ReducesToSingleTerm) {
  BoundInputs in = single(0.7, 1.5, 9.0);
  const auto p = bound_th0_prime(in);
  const auto q = bound_th0(in);
  EXPECT_DOUBLE_EQ(p.loc_bound, q.loc_bound);
  EXPECT_DOUBLE_EQ(p.kolmogorov_bound, q.kolmogorov_bound);
  EXPECT_EQ(*p.interval_slope, 0.0);
}

TEST(MultiTermBound, FullThetaRangeDropsEta) {
  BoundInputs in = single(1.0, 1.0, 4.0);
  in.eta = 0.5;
  in.theta0 = kPi;
  const auto r = bound_th0_prime(in);
  EXPECT_EQ(r.constants_used.at("alpha_tilde2"), 0.0);
  EXPECT_EQ(*r.interval_slope, 0.0);
}

TEST(MultiTermBound, TwoTermsByHand) {
  BoundInputs in;
  in.gamma_terms = {{0.5, 1.0}, {0.25, 2.0}};
  in.rho = 4.0;
  in.gamma_chi = 2.0;
  in.epsilon = 0.01;
  in.eta = 0.02;
  in.theta0 = kPi / 2.0;
  const auto r = bound_th0_prime(in);
  const double at1 = std::min(0.5, 1.0 / (2.0 * std::sqrt(kPi * 4.0)));
  const double at2 = 0.5;
  const double slope = at1 * 2.0 * 0.01 + at2 * 0.02;
  const double loc = 0.5 * 2.0 * (kPi / 2.0) * std::pow(4.0, -1.0) +
                     0.25 * 2.0 * (kPi * kPi / 3.0) * std::pow(4.0, -1.5) + slope;
  const double kol = 0.5 * 2.0 * kPi * std::pow(4.0, -0.5) +
                     0.25 * 2.0 * (kPi * kPi / 2.0) * std::pow(4.0, -1.0);
  EXPECT_NEAR(r.loc_bound, loc, 1e-14);
  EXPECT_NEAR(r.kolmogorov_bound, kol, 1e-14);
  EXPECT_NEAR(*r.interval_slope, slope, 1e-15);
  in.theta0 = 0.0;
  EXPECT_THROW(bound_th0_prime(in), PreconditionError);
}

TEST(IntervalBound, NuInsideWindowGivesMuTail) {
  BoundInputs in = single(0.0, 1.0, 1.0);
  const SignedMeasure mu(0, {0.1, 0.4, 0.4, 0.1});
  const SignedMeasure nu(1, {0.5, 0.5});
  const auto r = bound_cor0(in, mu, nu, false);
  EXPECT_NEAR(r.kolmogorov_bound, 0.0, 1e-15);
  const auto r2 = bound_cor0(in, mu, mu, false);
  EXPECT_NEAR(r2.kolmogorov_bound, 0.0, 1e-15);
}

TEST(IntervalBound, PoissonPairAboveMeasured) {
  const auto mu = poisson_measure(21.0);
  const auto nu = poisson_measure(20.0);
  BoundInputs in = single(1.0, 1.0, 40.0 / (kPi * kPi));
  for (bool prob : {false, true}) {
    const auto r = bound_cor0(in, mu, nu, prob);
    EXPECT_TRUE(std::isfinite(r.kolmogorov_bound));
    EXPECT_GE(r.kolmogorov_bound, distance(DistanceKind::kKolmogorov, mu, nu));
    EXPECT_GE(*r.tv_bound, distance(DistanceKind::kTotalVariation, mu, nu));
  }
}

TEST(IntervalBound, WiderSupportNeverHurts) {
  BoundInputs in = single(0.3, 1.0, 5.0);
  in.epsilon = 1e-4;
  in.theta0 = 2.0;
  in.eta = 1e-4;
  const auto mu = poisson_measure(12.0);
  const auto nu = build_nu({12.0, {0.2}});
  const auto narrow = bound_cor0(in, mu, nu, true);
  // Padding nu with a negligible far point enlarges the search window.
  std::vector<double> w(nu.weights().begin(), nu.weights().end());
  w.resize(w.size() + 40, 0.0);
  w.back() = 1e-300;
  const SignedMeasure nu_wide(nu.offset(), std::move(w), nu.truncated_mass());
  const auto wide = bound_cor0(in, mu, nu_wide, true);
  EXPECT_LE(wide.kolmogorov_bound, narrow.kolmogorov_bound + 1e-15);
}

TEST(SmoothTvBound, FormulaAndHypotheses) {
  EXPECT_NEAR(beta3(2.0, 1.0), 1.0 / std::sqrt(kPi), 1e-15);
  BoundInputs in = single(1.0, 2.0, 4.0);
  in.gamma3 = 1.0;
  const auto r = bound_th0_tv(in);
  const double a3 = 2.0 / std::sqrt(kPi) + 5.0 * alpha_constants(2.0).alpha1 / 2.0;
  EXPECT_NEAR(*r.tv_bound, a3 / 4.0, 1e-14);
  in.gamma_terms[0].gamma = 2.0;
  EXPECT_DOUBLE_EQ(*bound_th0_tv(in).tv_bound, 2.0 * *r.tv_bound);
  in.rho = 0.5;
  EXPECT_THROW(bound_th0_tv(in), PreconditionError);
  in.rho = 4.0;
  in.gamma_terms[0].t = 1.5;
  EXPECT_THROW(bound_th0_tv(in), PreconditionError);
}

TEST(ParameterShiftBound, Examples) {
  const std::vector<double> a = {0.2}, ap = {0.1};
  const auto r = bound_newpars_coeffs(a, ap, 50.0);
  EXPECT_NEAR(r.loc_bound, 0.015503138340149910088, 1e-15);
  EXPECT_NEAR(r.kolmogorov_bound, 0.098696044010893586188, 1e-15);
  const auto same = bound_newpars_coeffs(a, a, 50.0);
  EXPECT_EQ(same.loc_bound, 0.0);
  EXPECT_EQ(same.kolmogorov_bound, 0.0);
  const auto near = bound_newpars(a, ap, 50.0, 50.0 - 1e-12);
  EXPECT_LT(near.constants_used.at("nu2_loc_bound"), 1e-11);
  EXPECT_LT(near.constants_used.at("nu2_kolmogorov_bound"), 1e-11);
  EXPECT_THROW(bound_newpars(a, ap, 50.0, 50.0), PreconditionError);
  EXPECT_THROW(bound_newpars(a, ap, 40.0, 50.0), PreconditionError);
}

TEST(ParameterShiftBound, LambdaShiftAgainstMeasured) {
  // nu2 for a = (): Po(lambda') against mu = Po(lambda).
  const std::vector<double> none;
  const auto r = bound_newpars(none, none, 30.0, 29.0);
  const auto mu = poisson_measure(30.0);
  const auto nu = poisson_measure(29.0);
  EXPECT_LE(distance(DistanceKind::kLocal, mu, nu), r.constants_used.at("nu2_loc_bound"));
  EXPECT_LE(distance(DistanceKind::kKolmogorov, mu, nu),
            r.constants_used.at("nu2_kolmogorov_bound"));
}

TEST(ExpansionTvBound, AlphaFiveGolden) {
  const auto r = bound_th2(1.0, 1e4, 2.0, 1, 1.6);
  EXPECT_NEAR(r.constants_used.at("alpha5"), 288.23085582300373274, 1e-10);
  EXPECT_NEAR(*r.tv_bound, 288.23085582300373274 * 1e-4 * std::sqrt(std::log(1e4 + 1.0)), 1e-10);
}

TEST(ExpansionTvBound, RegimesAndRejection) {
  const auto small = bound_th2(0.5, 100.0, 2.0, 1, 1.6);
  EXPECT_TRUE(small.constants_used.count("alpha4"));
  EXPECT_GT(*small.tv_bound, 0.0);
  EXPECT_EQ(*bound_th2(0.0, 100.0, 2.0, 1, 1.6).tv_bound, 0.0);
  EXPECT_THROW(bound_th2(10.0, 2.0, 2.0, 1, 1.6), PreconditionError);
  EXPECT_NO_THROW(bound_th2(10.0, 10.0, 2.0, 1, 1.6));
}

TEST(ExpansionBound, ScalesWithLambda) {
  const auto a = bound_th1(1.0, 100.0, 2.0);
  const auto c = alpha_constants(2.0);
  EXPECT_NEAR(a.loc_bound, c.alpha1_prime * std::pow(100.0, -1.5), 1e-15);
  EXPECT_NEAR(a.kolmogorov_bound, c.alpha2_prime / 100.0, 1e-15);
  const auto b = bound_th1(1.0, 0.5, 2.0);
  EXPECT_NEAR(b.loc_bound, c.alpha1_prime, 1e-13);
}

TEST(Report, JsonCarriesConstants) {
  const auto r = bound_th0(single(1.0, 2.0, 3.0));
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_DOUBLE_EQ(j.at("loc_bound").get<double>(), r.loc_bound);
  EXPECT_TRUE(j.at("tv_bound").is_null());
  EXPECT_DOUBLE_EQ(j.at("constants_used").at("alpha1").get<double>(),
                   r.constants_used.at("alpha1"));
}

}  // namespace
}  // namespace modx
