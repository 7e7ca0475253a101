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

#include "modx/error_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "json.hpp"

#include "modx/errors.hpp"

namespace modx {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kExhaustiveLimit = 5000;

double clamp_rho(double rho) { return std::max(rho, 1.0); }

void check_inputs(const BoundInputs& in) {
  require(std::isfinite(in.rho) && in.rho >= 0.0, "rho must be finite and non-negative");
  require(in.gamma_chi >= 0.0 && std::isfinite(in.gamma_chi), "gamma_chi must be non-negative");
  require(in.epsilon >= 0.0 && in.eta >= 0.0, "epsilon and eta must be non-negative");
  for (const auto& g : in.gamma_terms) {
    require(g.gamma >= 0.0 && std::isfinite(g.gamma), "gamma terms must be non-negative");
    require(g.t > 0.0 && std::isfinite(g.t), "exponents t must be positive");
  }
}

struct PrimeParts {
  double loc_sum = 0.0;    // sum gamma_m gamma alpha1 (rho v 1)^{-(t+1)/2}
  double kol_sum = 0.0;    // sum gamma_m gamma alpha2 (rho v 1)^{-t/2}
  double slope = 0.0;      // alpha~1 gamma epsilon + alpha~2 eta
  double alpha_tilde1 = 0.0;
  double alpha_tilde2 = 0.0;
};

PrimeParts prime_parts(const BoundInputs& in) {
  check_inputs(in);
  require(!in.gamma_terms.empty(), "at least one gamma term is required");
  require(in.theta0 > 0.0 && in.theta0 <= kPi, "theta0 must lie in (0, pi]");
  PrimeParts p;
  const double rv = clamp_rho(in.rho);
  for (const auto& g : in.gamma_terms) {
    const auto c = alpha_constants(g.t);
    p.loc_sum += g.gamma * in.gamma_chi * c.alpha1 * std::pow(rv, -(g.t + 1.0) / 2.0);
    p.kol_sum += g.gamma * in.gamma_chi * c.alpha2 * std::pow(rv, -g.t / 2.0);
  }
  p.alpha_tilde1 = in.theta0 / kPi;
  if (in.rho > 0.0) {
    p.alpha_tilde1 = std::min(p.alpha_tilde1, 1.0 / (2.0 * std::sqrt(kPi * in.rho)));
  }
  p.alpha_tilde2 = 1.0 - in.theta0 / kPi;
  p.slope = p.alpha_tilde1 * in.gamma_chi * in.epsilon + p.alpha_tilde2 * in.eta;
  return p;
}

void add_alpha(BoundReport& r, const AlphaConstants& c) {
  r.constants_used["alpha1"] = c.alpha1;
  r.constants_used["alpha2"] = c.alpha2;
  r.constants_used["alpha1_prime"] = c.alpha1_prime;
  r.constants_used["alpha2_prime"] = c.alpha2_prime;
}

}  // namespace

double normal_abs_moment(double t) {
  require(std::isfinite(t) && t > -1.0, "normal_abs_moment needs t > -1");
  return std::pow(2.0, t / 2.0) * std::tgamma((t + 1.0) / 2.0) / std::sqrt(kPi);
}

AlphaConstants alpha_constants(double t) {
  require(std::isfinite(t) && t > 0.0, "alpha_constants needs t > 0");
  AlphaConstants c;
  const double beta1 = std::pow(kPi, t) / (t + 1.0);
  const double beta1p =
      std::pow(2.0, -(t + 1.0) / 2.0) * normal_abs_moment(t) / std::sqrt(2.0 * kPi);
  c.alpha1 = std::max(beta1, beta1p);
  c.alpha2 = std::pow(kPi, t) / t;
  if (t > 1.0) {
    c.alpha2 = std::max(c.alpha2, std::pow(2.0, -t / 2.0) * normal_abs_moment(t - 1.0) *
                                      std::sqrt(kPi / 2.0));
  }
  const double h = kPi * kPi / 2.0;
  c.alpha1_prime = c.alpha1 * std::pow(h, (t + 1.0) / 2.0);
  c.alpha2_prime = c.alpha2 * std::pow(h, t / 2.0);
  return c;
}

BoundReport bound_th0(const BoundInputs& in) {
  check_inputs(in);
  require(in.gamma_terms.size() == 1, "bound_th0 takes exactly one gamma term");
  const auto [g1, t] = in.gamma_terms.front();
  const double gamma = g1 * in.gamma_chi;
  const auto c = alpha_constants(t);
  const double rv = clamp_rho(in.rho);
  BoundReport r;
  r.loc_bound = c.alpha1 * gamma * std::pow(rv, -(t + 1.0) / 2.0);
  r.kolmogorov_bound = c.alpha2 * gamma * std::pow(rv, -t / 2.0);
  add_alpha(r, c);
  r.constants_used["gamma"] = gamma;
  r.constants_used["rho"] = in.rho;
  r.constants_used["t"] = t;
  return r;
}

BoundReport bound_th0_prime(const BoundInputs& in) {
  const auto p = prime_parts(in);
  BoundReport r;
  r.loc_bound = p.loc_sum + p.slope;
  r.kolmogorov_bound = p.kol_sum;
  r.interval_slope = p.slope;
  r.constants_used["alpha_tilde1"] = p.alpha_tilde1;
  r.constants_used["alpha_tilde2"] = p.alpha_tilde2;
  r.constants_used["rho"] = in.rho;
  r.constants_used["theta0"] = in.theta0;
  return r;
}

BoundReport bound_cor0(const BoundInputs& in, const SignedMeasure& mu,
                       const SignedMeasure& nu, bool probability_mu) {
  const auto p = prime_parts(in);
  const std::int64_t lo = std::min(mu.offset(), nu.offset());
  const std::int64_t hi = std::max(mu.last(), nu.last());
  const auto n = static_cast<std::size_t>(hi - lo + 1);

  // Prefix sums of |mu|, |nu| and nu over [lo, hi].
  std::vector<double> abs_mu(n + 1, 0.0), abs_nu(n + 1, 0.0), sig_nu(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t j = lo + static_cast<std::int64_t>(k);
    abs_mu[k + 1] = abs_mu[k] + std::abs(mu.at(j));
    abs_nu[k + 1] = abs_nu[k] + std::abs(nu.at(j));
    sig_nu[k + 1] = sig_nu[k] + nu.at(j);
  }
  const double tot_mu = abs_mu[n] + mu.truncated_mass();
  const double tot_nu = abs_nu[n] + nu.truncated_mass();

  double best_k = std::numeric_limits<double>::infinity();
  double best_tv = best_k;
  std::int64_t arg_a = lo, arg_b = hi;
  auto visit = [&](std::size_t ia, std::size_t ib) {
    const double width = static_cast<double>(ib - ia + 1);
    const double out_mu = tot_mu - (abs_mu[ib + 1] - abs_mu[ia]);
    const double out_nu = tot_nu - (abs_nu[ib + 1] - abs_nu[ia]);
    const double eps_k = p.kol_sum + width * p.slope;
    const double eps_1 = width * (p.loc_sum + p.slope);
    double k = eps_k + out_mu + out_nu;
    if (probability_mu) {
      const double in_nu = sig_nu[ib + 1] - sig_nu[ia];
      k = std::min(k, 1.0 - in_nu + 2.0 * eps_k + out_nu);
    }
    if (k < best_k) {
      best_k = k;
      arg_a = lo + static_cast<std::int64_t>(ia);
      arg_b = lo + static_cast<std::int64_t>(ib);
    }
    best_tv = std::min(best_tv, eps_1 + out_mu + out_nu);
  };

  if (n <= kExhaustiveLimit) {
    for (std::size_t ia = 0; ia < n; ++ia) {
      for (std::size_t ib = ia; ib < n; ++ib) visit(ia, ib);
    }
  } else {
    std::set<std::int64_t> cand = {lo, hi};
    for (const SignedMeasure* m : {&mu, &nu}) {
      cand.insert(m->offset());
      cand.insert(m->last());
      const double mean = m->mean();
      const double var = m->variance();
      if (!std::isfinite(mean) || !std::isfinite(var) || var <= 0.0) continue;
      const double sd = std::sqrt(var);
      for (int k = 1; k <= 10; ++k) {
        for (double x : {mean - k * sd, mean + k * sd}) {
          const double c = std::clamp(std::round(x), static_cast<double>(lo),
                                      static_cast<double>(hi));
          cand.insert(static_cast<std::int64_t>(c));
        }
      }
    }
    const std::vector<std::int64_t> pts(cand.begin(), cand.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t k = i; k < pts.size(); ++k) {
        visit(static_cast<std::size_t>(pts[i] - lo), static_cast<std::size_t>(pts[k] - lo));
      }
    }
  }

  BoundReport r;
  r.loc_bound = p.loc_sum + p.slope;
  r.kolmogorov_bound = best_k;
  r.tv_bound = best_tv;
  r.constants_used["alpha_tilde1"] = p.alpha_tilde1;
  r.constants_used["alpha_tilde2"] = p.alpha_tilde2;
  r.constants_used["interval_a"] = static_cast<double>(arg_a);
  r.constants_used["interval_b"] = static_cast<double>(arg_b);
  r.constants_used["rho"] = in.rho;
  return r;
}

double beta3(double t, double gamma3) {
  return normal_abs_moment(t - 2.0) / (4.0 * t * std::pow(2.0, t / 2.0) * std::sqrt(kPi)) *
         (4.0 * t + (2.0 * t + 1.0) * gamma3 + (t + 1.0) * gamma3 * gamma3);
}

double alpha3(double t, double gamma3) {
  return 2.0 * beta3(t, gamma3) + 5.0 * alpha_constants(t).alpha1 / (t * (t - 1.0));
}

BoundReport bound_th0_tv(const BoundInputs& in) {
  check_inputs(in);
  require(in.gamma_terms.size() == 1, "bound_th0_tv takes exactly one gamma term");
  const auto [g1, t] = in.gamma_terms.front();
  require(t >= 2.0, "bound_th0_tv requires t >= 2");
  require(in.rho >= 1.0, "bound_th0_tv requires rho >= 1");
  require(in.gamma3 > 0.0 && std::isfinite(in.gamma3), "bound_th0_tv requires gamma3 > 0");
  const double gamma = g1 * in.gamma_chi;
  const auto c = alpha_constants(t);
  const double b3 = beta3(t, in.gamma3);
  const double a3 = alpha3(t, in.gamma3);
  const double tt = t * (t - 1.0);
  BoundReport r;
  r.tv_bound = a3 * gamma * std::pow(in.rho, -t / 2.0);
  r.loc_bound = c.alpha1 * gamma / tt * std::pow(in.rho, -(t + 1.0) / 2.0);
  r.kolmogorov_bound = std::min(*r.tv_bound, c.alpha2 * gamma / tt * std::pow(in.rho, -t / 2.0));
  add_alpha(r, c);
  r.constants_used["beta3"] = b3;
  r.constants_used["alpha3"] = a3;
  r.constants_used["gamma"] = gamma;
  r.constants_used["rho"] = in.rho;
  return r;
}

BoundReport bound_newpars_coeffs(std::span<const double> a, std::span<const double> a_prime,
                                 double lambda) {
  require(a.size() == a_prime.size(), "coefficient vectors must have equal length");
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive");
  const double rv = clamp_rho(2.0 * lambda / (kPi * kPi));
  BoundReport r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double l = static_cast<double>(i + 1);
    const auto c = alpha_constants(l);
    const double d = std::abs(a[i] - a_prime[i]);
    r.loc_bound += c.alpha1 * d * std::pow(rv, -(l + 1.0) / 2.0);
    r.kolmogorov_bound += c.alpha2 * d * std::pow(rv, -l / 2.0);
  }
  r.constants_used["rho"] = 2.0 * lambda / (kPi * kPi);
  return r;
}

BoundReport bound_newpars(std::span<const double> a, std::span<const double> a_prime,
                          double lambda, double lambda_prime) {
  require(std::isfinite(lambda_prime) && lambda_prime > 0.0, "lambda_prime must be positive");
  require(lambda > lambda_prime, "bound_newpars requires lambda > lambda_prime");
  BoundReport r = bound_newpars_coeffs(a, a_prime, lambda);
  const double rho_p = 2.0 * lambda_prime / (kPi * kPi);
  const double rv = clamp_rho(rho_p);
  double loc2 = 0.0, kol2 = 0.0;
  for (std::size_t l = 1; l <= a.size() + 1; ++l) {
    const double coef = l == 1 ? 1.0 : std::abs(a[l - 2]);
    const auto c = alpha_constants(static_cast<double>(l));
    const double ld = static_cast<double>(l);
    loc2 += c.alpha1 * coef * std::pow(rv, -(ld + 1.0) / 2.0);
    kol2 += c.alpha2 * coef * std::pow(rv, -ld / 2.0);
  }
  r.constants_used["nu2_loc_bound"] = (lambda - lambda_prime) * loc2;
  r.constants_used["nu2_kolmogorov_bound"] = (lambda - lambda_prime) * kol2;
  r.constants_used["rho_prime"] = rho_p;
  return r;
}

BoundReport bound_th1(double k_plus_g, double lambda, double t) {
  require(std::isfinite(k_plus_g) && k_plus_g >= 0.0, "K + G must be non-negative");
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive");
  const auto c = alpha_constants(t);
  const double lv = std::max(lambda, 1.0);
  BoundReport r;
  r.loc_bound = c.alpha1_prime * k_plus_g * std::pow(lv, -(t + 1.0) / 2.0);
  r.kolmogorov_bound = c.alpha2_prime * k_plus_g * std::pow(lv, -t / 2.0);
  add_alpha(r, c);
  r.constants_used["K_plus_G"] = k_plus_g;
  return r;
}

BoundReport bound_th2(double k_plus_g, double lambda, double t, int r_order, double a_bar) {
  require(r_order >= 0, "order r must be non-negative");
  require(std::isfinite(a_bar) && a_bar >= 1.0, "A_bar_r must be at least 1");
  BoundReport r = bound_th1(k_plus_g, lambda, t);
  const auto c = alpha_constants(t);
  const double rr = static_cast<double>(r_order);
  const double s6 = std::sqrt(6.0 * (rr + 1.0));
  const double log_l = std::sqrt(std::log(lambda + 1.0));
  if (k_plus_g < 1.0) {
    const double b3t = c.alpha1_prime * (s6 + rr + 4.0) + 2.0 * c.alpha2_prime + 4.0 * a_bar;
    const double b3tp = c.alpha1_prime * (rr + 4.0) + c.alpha2 + 2.0 * a_bar;
    const double a4 = std::max(b3t, b3tp);
    double tv = 0.0;
    if (k_plus_g > 0.0) {
      const double m = std::max({1.0, std::sqrt(std::abs(std::log(k_plus_g))), log_l});
      tv = a4 * k_plus_g * std::pow(std::max(lambda, 1.0), -t / 2.0) * m;
    }
    r.tv_bound = tv;
    r.constants_used["beta3t"] = b3t;
    r.constants_used["beta3t_prime"] = b3tp;
    r.constants_used["alpha4"] = a4;
  } else {
    if (std::pow(lambda, (rr + 1.0) / 2.0) < k_plus_g) {
      throw PreconditionError(
          "bound_th2: K + G >= 1 requires lambda^{(r+1)/2} >= K + G");
    }
    const double a5 = c.alpha1_prime * (s6 + rr + 2.0) + 2.0 * c.alpha2_prime + 4.0 * a_bar;
    r.tv_bound = a5 * k_plus_g * std::pow(lambda, -t / 2.0) * std::max(1.0, log_l);
    r.constants_used["alpha5"] = a5;
  }
  r.constants_used["B_r"] = a_bar;
  return r;
}

std::string to_json(const BoundReport& report, int indent) {
  nlohmann::ordered_json j;
  j["loc_bound"] = report.loc_bound;
  j["kolmogorov_bound"] = report.kolmogorov_bound;
  if (report.tv_bound) {
    j["tv_bound"] = *report.tv_bound;
  } else {
    j["tv_bound"] = nullptr;
  }
  if (report.interval_slope) j["interval_slope"] = *report.interval_slope;
  j["constants_used"] = report.constants_used;
  return j.dump(indent);
}

}  // namespace modx
