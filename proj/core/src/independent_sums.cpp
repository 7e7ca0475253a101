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

#include "modx/independent_sums.hpp"

#include <cmath>

#include "modx/errors.hpp"
#include "modx/expansion_coeffs.hpp"

namespace modx {

NuSpec independent_sum_spec(std::span<const SignedMeasure> pmfs, int r) {
  require(r >= 1 && r <= kMaxIndependentSumOrder, "order r must lie in [1, 4]");
  require(!pmfs.empty(), "no summands given");
  std::vector<CumulantSet> sets;
  sets.reserve(pmfs.size());
  for (const auto& p : pmfs) sets.push_back(factorial_cumulants(p, r + 1));
  const CumulantSet total = sum_cumulants(sets);
  require(total.at(1) > 0.0, "E S must be positive");
  NuSpec spec;
  spec.lambda = total.at(1);
  spec.atilde = indept_sum_coeffs(total, r).coeffs;
  return spec;
}

SignedMeasure independent_sum_expansion(std::span<const SignedMeasure> pmfs, int r) {
  return build_nu(independent_sum_spec(pmfs, r));
}

std::vector<SignedMeasure> center_summands(std::span<const SignedMeasure> pmfs,
                                           std::int64_t* total_shift) {
  require(!pmfs.empty(), "no summands given");
  double k2 = 0.0;
  for (const auto& p : pmfs) k2 += factorial_cumulants(p, 2).at(2);
  const std::int64_t c = std::llround(-k2);
  const auto n = static_cast<std::int64_t>(pmfs.size());
  const std::int64_t base = c / n, extra = c % n;
  std::vector<SignedMeasure> out;
  out.reserve(pmfs.size());
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t k = base;
    if (extra > 0 && i < extra) ++k;
    if (extra < 0 && i < -extra) --k;
    out.push_back(pmfs[static_cast<std::size_t>(i)].shifted(-k));
  }
  if (total_shift) *total_shift = -c;
  return out;
}

SignedMeasure exact_sum(std::span<const SignedMeasure> pmfs) {
  require(!pmfs.empty(), "no summands given");
  SignedMeasure acc = pmfs.front();
  for (std::size_t i = 1; i < pmfs.size(); ++i) acc = convolve(acc, pmfs[i]);
  return acc;
}

std::vector<SumsRow> bernoulli_sums_experiment(double p, std::span<const int> ns, int r,
                                               bool center) {
  require(p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  std::vector<SumsRow> rows;
  const SignedMeasure be(0, {1.0 - p, p});
  for (int n : ns) {
    require(n >= 1, "n must be positive");
    std::vector<SignedMeasure> pmfs(static_cast<std::size_t>(n), be);
    std::int64_t shift = 0;
    if (center) pmfs = center_summands(pmfs, &shift);
    const SignedMeasure exact = exact_sum(pmfs);
    const NuSpec spec = independent_sum_spec(pmfs, r);
    const SignedMeasure nu = build_nu(spec);
    SumsRow row;
    row.n = n;
    row.shift = shift;
    row.lambda = spec.lambda;
    row.poisson_d_k = distance(DistanceKind::kKolmogorov, exact, poisson_measure(spec.lambda));
    row.nu_d_loc = distance(DistanceKind::kLocal, exact, nu);
    row.nu_d_k = distance(DistanceKind::kKolmogorov, exact, nu);
    row.nu_tv = distance(DistanceKind::kTotalVariation, exact, nu);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace modx
