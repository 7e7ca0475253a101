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

// Explicit error bounds for signed measures on Z whose characteristic
// functions share a common factor chi with |chi(theta)| <= gamma e^{-rho theta^2}.

#ifndef MODX_ERROR_BOUNDS_HPP_
#define MODX_ERROR_BOUNDS_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modx/measure.hpp"

namespace modx {

// One term gamma |theta|^t of the bound on |psi_mu - psi_nu|.
struct GammaTerm {
  double gamma = 0.0;
  double t = 1.0;
};

struct BoundInputs {
  std::vector<GammaTerm> gamma_terms;
  double rho = 0.0;
  double epsilon = 0.0;
  double eta = 0.0;
  double theta0 = 3.14159265358979323846;
  double gamma_chi = 1.0;  // prefactor of the chi envelope
  double gamma3 = 0.0;     // |u''| <= gamma3 rho
};

struct BoundReport {
  double loc_bound = 0.0;
  // For the interval bound of bound_th0_prime this is the intercept; the
  // bound over [a0, b0] is kolmogorov_bound + (b0 - a0 + 1) * interval_slope.
  double kolmogorov_bound = 0.0;
  std::optional<double> tv_bound;
  std::optional<double> interval_slope;
  std::map<std::string, double> constants_used;
};

// E|Z|^t for standard normal Z; t > -1.
double normal_abs_moment(double t);

struct AlphaConstants {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha1_prime = 0.0;
  double alpha2_prime = 0.0;
};

AlphaConstants alpha_constants(double t);

// Single-term local and Kolmogorov bounds.
BoundReport bound_th0(const BoundInputs& in);

// Several terms plus an additive epsilon on |theta| <= theta0 and eta beyond.
BoundReport bound_th0_prime(const BoundInputs& in);

// Kolmogorov and total variation bounds from bound_th0_prime by optimising
// the interval [a, b] against the tail masses of mu and nu. The search is
// exhaustive when the joint support has at most 5000 points, and otherwise
// runs over support endpoints and mean +- k sd (k = 1..10) of both measures.
BoundReport bound_cor0(const BoundInputs& in, const SignedMeasure& mu,
                       const SignedMeasure& nu, bool probability_mu);

// Total variation bound for twice differentiable psi difference; the single
// gamma term bounds |d''| by gamma |theta|^{t-2}. Requires t >= 2, rho >= 1.
BoundReport bound_th0_tv(const BoundInputs& in);

double beta3(double t, double gamma3);
double alpha3(double t, double gamma3);

// Bounds for changing the theta-power coefficients a -> a' at fixed lambda.
BoundReport bound_newpars_coeffs(std::span<const double> a,
                                 std::span<const double> a_prime, double lambda);

// As above, plus the bounds for moving lambda down to lambda_prime at fixed
// a, reported as constants_used["nu2_loc_bound"] and ["nu2_kolmogorov_bound"].
BoundReport bound_newpars(std::span<const double> a, std::span<const double> a_prime,
                          double lambda, double lambda_prime);

// Local and Kolmogorov bounds between P_X and nu_r given K + G.
BoundReport bound_th1(double k_plus_g, double lambda, double t);

// Total variation bound between P_X and nu_r; a_bar plays the role of B_r.
BoundReport bound_th2(double k_plus_g, double lambda, double t, int r, double a_bar);

std::string to_json(const BoundReport& report, int indent = -1);

}  // namespace modx

#endif  // MODX_ERROR_BOUNDS_HPP_
