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

// X = Z + Y_s with Z ~ Po(lambda) and P[Y_s = j] = s! s / (j (j+1) ... (j+s)).

#ifndef MODX_CONVOLUTION_EXPERIMENT_HPP_
#define MODX_CONVOLUTION_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modx/expansion_coeffs.hpp"
#include "modx/families.hpp"
#include "modx/measure.hpp"

namespace modx {

double ys_pmf(int s, std::int64_t j);

// P[Y_s > J] = s! / ((J+1) ... (J+s)).
double ys_tail(int s, std::int64_t J);

// Y_s on [1, J] with J the first point where the tail drops to `tail`, capped
// at `max_support`; the dropped tail is recorded as truncated mass.
SignedMeasure ys_measure(int s, double tail = 1e-14, std::int64_t max_support = 1'000'000);

// atilde_1..atilde_{s-1}; requires s >= 2.
ExpansionCoeffs ys_coeffs(int s);

// E e^{i theta Y_s} in closed form, with u = 1 - e^{-i theta}:
// 1 + s sum_{l<s} u^l / (s - l) - s u^s log(1 - e^{i theta}).
ComplexPoint ys_cf(int s, double theta);

// psi_{Y_s}(theta) - psitilde_r(theta), summed as a power series in w for
// small |theta|.
ComplexPoint ys_remainder(int s, int r, double theta);

// Grid supremum of |psi - psitilde_r| / |theta|^{r+delta} times 1.05, over
// 1024 log-spaced points in [1e-8, 0.1) and 3072 uniform in [0.1, pi].
double ys_k_constant(int s, int r, double delta);

// delta = 1 below r = s - 1 and 0.9 at r = s - 1.
double ys_default_delta(int s, int r);

struct ConvolutionRow {
  double lambda = 0.0;
  double d_loc = 0.0;
  double d_k = 0.0;
  double tv = 0.0;
  double bound_loc = 0.0;
  double bound_k = 0.0;
  // Translated Poisson matched on mean and variance; needs s >= 3.
  std::optional<TranslatedParams> translated;
  std::optional<double> translated_d_k;
  double poisson_d_k = 0.0;
};

struct ConvolutionReport {
  int s = 0;
  int r = 0;
  double K = 0.0;
  double delta = 1.0;
  std::vector<ConvolutionRow> rows;
  double d_k_slope = 0.0;  // least-squares slope of log d_K on log lambda
};

ConvolutionReport convolution_experiment(int s, std::span<const double> lambdas, int r);

// Least-squares slope of log y on log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace modx

#endif  // MODX_CONVOLUTION_EXPERIMENT_HPP_
