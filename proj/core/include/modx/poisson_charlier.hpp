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

// Poisson laws, Charlier polynomials and the Poisson-Charlier signed
// measures
//
//   nu{j} = Po(lambda){j} (1 + sum_{l=1}^r (-1)^l atilde_l C_l(j; lambda)),
//
// whose characteristic function is
// sum_{l=0}^r atilde_l (e^{i theta} - 1)^l exp(lambda (e^{i theta} - 1)).

#ifndef MODX_POISSON_CHARLIER_HPP_
#define MODX_POISSON_CHARLIER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "modx/measure.hpp"

namespace modx {

// Charlier orders above this are rejected: the alternating sum loses all
// significant digits well before order 40 for moderate lambda.
inline constexpr int kMaxCharlierOrder = 30;

// e^{-lambda} lambda^j / j!, evaluated in extended precision log space.
double poisson_pmf(double lambda, std::int64_t j);

// Po(lambda) truncated by `policy`; dropped mass is recorded.
SignedMeasure poisson_measure(double lambda, const TruncationPolicy& policy = {});

// p_lambda(theta) = exp(lambda (e^{i theta} - 1)).
ComplexPoint poisson_cf(double lambda, double theta);

// C_l(j; lambda) = sum_{k=0}^l (-1)^k C(l,k) C(j,k) k! lambda^{-k}.
double charlier(int l, std::int64_t j, double lambda);

// 2^{l-1} (|1 - j/lambda|^l + (l / sqrt(lambda))^l), an upper bound on
// |C_l(j; lambda)|.
double charlier_bound(int l, std::int64_t j, double lambda);

// Evaluates C_0..C_{max_order} at a point, sharing the falling factorials.
class CharlierContext {
 public:
  CharlierContext(double lambda, int max_order);

  double lambda() const noexcept { return lambda_; }
  int max_order() const noexcept { return max_order_; }
  // values[l] = C_l(j; lambda), l = 0..max_order.
  std::vector<double> values(std::int64_t j) const;

 private:
  double lambda_;
  int max_order_;
  std::vector<std::vector<double>> binom_;  // binom_[l][k] = C(l, k)
};

// Chernoff bound on max{P[Z > lambda(1+delta)], P[Z < lambda(1-delta)]} for
// Z ~ Po(lambda): exp(-lambda delta^2 / (2 (1 + delta/3))), 0 < delta <= 1.
double chernoff_tail(double lambda, double delta);

// Parameters of a Poisson-Charlier measure; atilde_0 = 1 is implicit.
struct NuSpec {
  double lambda = 1.0;
  std::vector<double> atilde;

  int order() const noexcept { return static_cast<int>(atilde.size()); }
};

// The signed measure on N_0 described by `spec`. Its support is the
// truncated support of Po(lambda); |nu| outside it is recorded as
// truncated mass. Rejects orders above kMaxCharlierOrder.
SignedMeasure build_nu(const NuSpec& spec, const TruncationPolicy& policy = {});

// Closed-form characteristic function of build_nu(spec).
ComplexPoint nu_char_fn(const NuSpec& spec, double theta);

// Abar_r = 1 + sum_l 2^l |atilde_l|.
double a_bar(std::span<const double> atilde);

enum class TailSide { kLower, kUpper };

// Lower: |nu|{[0, m]} <= Abar_r exp(-(lambda - m)^2 / (3 lambda)),
//        valid for 0 <= m <= lambda.
// Upper: |nu|{[m, inf)} <= Abar_r exp(-(m - r - lambda)^2 / (3 lambda)),
//        valid for lambda + r <= m <= 2 lambda.
// Throws PreconditionError when m is outside the validity window.
double nu_tail_bound(const NuSpec& spec, std::int64_t m, TailSide side);

}  // namespace modx

#endif  // MODX_POISSON_CHARLIER_HPP_
