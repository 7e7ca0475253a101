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

// Parametric families R_lambda used as the base of an approximation, and
// translated two-point mixtures Q_{mp}(R_lambda).

#ifndef MODX_FAMILIES_HPP_
#define MODX_FAMILIES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "modx/measure.hpp"

namespace modx {

class DiscreteFamily {
 public:
  virtual ~DiscreteFamily() = default;

  virtual std::string name() const = 0;
  virtual double lambda_min() const { return 1.0; }

  // R_lambda tabulated under the default truncation policy.
  virtual SignedMeasure measure(double lambda) const = 0;
  virtual double pmf(double lambda, std::int64_t j) const;
  virtual double mean(double lambda) const = 0;
  virtual double variance(double lambda) const = 0;
  virtual ComplexPoint cf(double lambda, double theta) const = 0;
  // log |r_lambda(theta)|; overridden where the modulus would underflow.
  virtual double log_abs_cf(double lambda, double theta) const;
};

std::shared_ptr<const DiscreteFamily> poisson_family();

// CP(lambda, mu): law of sum_j j Z_j with independent Z_j ~ Po(lambda mu_j).
// `jumps` must be a probability on Z \ {0}.
std::shared_ptr<const DiscreteFamily> compound_poisson_family(const SignedMeasure& jumps);

// B(lambda){j} = lambda^j / (j! (j-1)! L(lambda)), j >= 1.
std::shared_ptr<const DiscreteFamily> bessel_family();

// L(lambda) = sum_{j>=1} lambda^j / (j! (j-1)!).
double bessel_normaliser(double lambda);

struct TranslatedParams {
  double lambda_prime = 0.0;
  std::int64_t m = 0;
  double p = 0.0;
  // Set by general_params_solver: the root of sigma^2(lambda) = Var X.
  std::optional<double> lambda_zero;
};

// Q{j} = p R_{lambda'}{j - m - 1} + (1 - p) R_{lambda'}{j - m}.
SignedMeasure q_measure(const DiscreteFamily& family, const TranslatedParams& params);

// Characteristic function of q_measure in closed form.
ComplexPoint q_char_fn(const DiscreteFamily& family, const TranslatedParams& params,
                       double theta);

// (lambda + a1, 0, 0).
TranslatedParams poisson_mean_match(double lambda, double a1);

// With v = 2 a2 - a1^2 and x = a1 - v: m = floor(x), p = sqrt(x - m),
// lambda' = lambda + v - p (1 - p).
TranslatedParams translated_poisson_params(double lambda, double a1, double a2);

// Matches mean and variance of Q_{mp}(R_{lambda'}) to (mean_x, var_x). The
// returned lambda' is lambda(p*), which solves sigma^2(lambda') = var_x -
// p*(1 - p*); lambda(0) is reported alongside.
TranslatedParams general_params_solver(const DiscreteFamily& family, double mean_x,
                                       double var_x);

// 0.99 * min over theta = pi k / 4096, k = 1..4096, of -log|r_lambda(theta)| / theta^2.
double h_lambda(const DiscreteFamily& family, double lambda);

// sum_l atilde_l D^l R_lambda with atilde_0 = 1.
SignedMeasure family_nu(const DiscreteFamily& family, double lambda,
                        std::span<const double> atilde);

}  // namespace modx

#endif  // MODX_FAMILIES_HPP_
