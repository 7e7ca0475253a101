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

// Expansion coefficients for the perturbing factor psi in phi_X = psi * p.
//
// Two bases are in use:
//   theta-power:  psi_r(theta)  = sum_l a_l (i theta)^l
//   w-power:      psitilde_r    = sum_l atilde_l w^l,  w = e^{i theta} - 1
// with a_0 = atilde_0 = 1 implicit. Matching Taylor coefficients in (i theta)
// gives the unit lower-triangular relation
//   a_j = sum_{l<=j} atilde_l [x^j] (e^x - 1)^l.

#ifndef MODX_EXPANSION_COEFFS_HPP_
#define MODX_EXPANSION_COEFFS_HPP_

#include <span>
#include <vector>

#include "modx/measure.hpp"

namespace modx {

enum class Basis { kThetaPower, kWPower };

struct ExpansionCoeffs {
  Basis basis = Basis::kWPower;
  std::vector<double> coeffs;  // coeffs[l-1] is the order-l coefficient

  int order() const noexcept { return static_cast<int>(coeffs.size()); }
};

// An expansion together with the constants of its residual bound
// |psi - psi_r| <= K |theta|^{r + delta}.
struct BoundedExpansion {
  ExpansionCoeffs expansion;
  double K = 0.0;
  double delta = 1.0;
};

ExpansionCoeffs to_w_basis(const ExpansionCoeffs& a);
ExpansionCoeffs to_theta_basis(const ExpansionCoeffs& atilde);

// Evaluates the expansion as a function of theta in its own basis.
ComplexPoint evaluate(const ExpansionCoeffs& e, double theta);

// psitilde_r(theta) - psi_r(theta) for the expansion in either basis, summed
// from its power series below |theta| = 0.5 and directly above.
class BasisResidual {
 public:
  explicit BasisResidual(const ExpansionCoeffs& e);
  ComplexPoint operator()(double theta) const;

 private:
  ExpansionCoeffs a_;
  ExpansionCoeffs at_;
  std::vector<double> c_;  // c_[j]: coefficient of (i theta)^j, j > r
};

ComplexPoint basis_residual(const ExpansionCoeffs& e, double theta);

// A valid Gamma_r for |psi_r(theta) - psitilde_r(theta)| <= Gamma_r
// |theta|^{r+1}: the supremum of the ratio over a 4096-point grid (1024
// log-spaced points in [1e-4, 0.1), 3072 uniform in [0.1, pi]) times 1.05.
// Near zero the difference is summed from its power series, which avoids the
// cancellation in evaluating both polynomials directly.
double gamma_r(const ExpansionCoeffs& a);

// G_{r delta} = Gamma_r pi^{1 - delta}.
double g_r_delta(double gamma, double delta);

// Factorial cumulants kappa_1..kappa_max: l! [w^l] log E(1+w)^X.
struct CumulantSet {
  std::vector<double> kappa;  // kappa[l-1] = kappa_l
  // Absolute mass the source pmf had dropped by truncation; moments are
  // computed from the retained weights only.
  double truncated_mass = 0.0;

  int max_order() const noexcept { return static_cast<int>(kappa.size()); }
  double at(int l) const { return kappa.at(static_cast<std::size_t>(l - 1)); }
};

inline constexpr int kMaxCumulantOrder = 12;

CumulantSet factorial_cumulants(const SignedMeasure& pmf, int max_order);

// Cumulants of an independent sum (factorial cumulants are additive).
CumulantSet sum_cumulants(std::span<const CumulantSet> sets);

// L_r = max(1, 3(r - 1)).
int independent_sum_length(int r);

// atilde_1..atilde_{L_r} of exp(sum_{l=2}^{r+1} kappa_l w^l / l!), truncated
// at L_r; atilde_1 = 0.
ExpansionCoeffs indept_sum_coeffs(const CumulantSet& cumulants, int r);

// 1 - d_TV(A, B + 1), with d_TV the halved total variation distance, so the
// result lies in [0, 1]. Passing the same pmf twice gives the overlap of a
// law with its unit translate.
double overlap_p(const SignedMeasure& pmf_a, const SignedMeasure& pmf_b);

// |sum_j kappa_2(X_j)|.
double centering_k(std::span<const CumulantSet> sets);

}  // namespace modx

#endif  // MODX_EXPANSION_COEFFS_HPP_
