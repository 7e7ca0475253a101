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

// Poisson-Charlier expansions for sums of independent integer variables,
// driven by their factorial cumulants.

#ifndef MODX_INDEPENDENT_SUMS_HPP_
#define MODX_INDEPENDENT_SUMS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "modx/measure.hpp"
#include "modx/poisson_charlier.hpp"

namespace modx {

inline constexpr int kMaxIndependentSumOrder = 4;

// The NuSpec for S = X_1 + ... + X_n: lambda = E S and atilde from the
// summed factorial cumulants. Requires 1 <= r <= 4.
NuSpec independent_sum_spec(std::span<const SignedMeasure> pmfs, int r);

SignedMeasure independent_sum_expansion(std::span<const SignedMeasure> pmfs, int r);

// Integer translates of the summands with |sum_j kappa_2(X_j)| <= 1/2:
// X - 1 has kappa_2 one larger than X, so round(-sum kappa_2) unit shifts
// are spread over the summands. The total shift applied to the sum is
// written to `total_shift` when given.
std::vector<SignedMeasure> center_summands(std::span<const SignedMeasure> pmfs,
                                           std::int64_t* total_shift = nullptr);

// Exact law of the sum by repeated convolution.
SignedMeasure exact_sum(std::span<const SignedMeasure> pmfs);

struct SumsRow {
  int n = 0;
  std::int64_t shift = 0;
  double lambda = 0.0;
  double poisson_d_k = 0.0;
  double nu_d_loc = 0.0;
  double nu_d_k = 0.0;
  double nu_tv = 0.0;
};

// n i.i.d. Bernoulli(p) summands for each n in `ns`, optionally passed
// through center_summands first.
std::vector<SumsRow> bernoulli_sums_experiment(double p, std::span<const int> ns, int r,
                                               bool center = false);

}  // namespace modx

#endif  // MODX_INDEPENDENT_SUMS_HPP_
