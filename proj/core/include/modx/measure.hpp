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

// Finite signed measures on the integers.
//
// A SignedMeasure stores the weights of a contiguous run of integers
// [offset, offset + size) in canonical form (first and last weight nonzero),
// together with `truncated_mass`, an upper bound on the absolute mass that
// was dropped when an infinite-support law was cut down to a finite window.
// Truncated mass is bookkeeping only: weights are never renormalised.

#ifndef MODX_MEASURE_HPP_
#define MODX_MEASURE_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace modx {

using ComplexPoint = std::complex<double>;

class SignedMeasure {
 public:
  // Leading and trailing zeros are trimmed. Throws PreconditionError if all
  // weights are zero, any weight is non-finite, or truncated_mass < 0.
  SignedMeasure(std::int64_t offset, std::vector<double> weights,
                double truncated_mass = 0.0);

  static SignedMeasure point_mass(std::int64_t j);

  // As the constructor, additionally requiring nonnegative weights and
  // |total_mass - 1| <= eps + truncated_mass.
  static SignedMeasure probability(std::int64_t offset,
                                   std::vector<double> weights,
                                   double truncated_mass, double eps);

  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t last() const noexcept {
    return offset_ + static_cast<std::int64_t>(weights_.size()) - 1;
  }
  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double truncated_mass() const noexcept { return truncated_mass_; }

  // Weight of the point j; zero off the support.
  double at(std::int64_t j) const noexcept;

  double total_mass() const;
  double absolute_mass() const;
  // First two moments of the weights, normalised by total mass.
  double mean() const;
  double variance() const;

  SignedMeasure shifted(std::int64_t k) const;
  SignedMeasure scaled(double c) const;
  SignedMeasure with_truncated_mass(double truncated_mass) const;

  friend bool operator==(const SignedMeasure&, const SignedMeasure&) = default;

 private:
  std::int64_t offset_;
  std::vector<double> weights_;
  double truncated_mass_;
};

// a*mu + b*nu. Truncated masses combine as |a| tm(mu) + |b| tm(nu).
SignedMeasure combine(double a, const SignedMeasure& mu, double b,
                      const SignedMeasure& nu);

enum class DistanceKind { kLocal, kKolmogorov, kTotalVariation };

// sup_j |mu{j} - nu{j}|, sup_j |mu(-inf, j] - nu(-inf, j]|, or
// sum_j |mu{j} - nu{j}|. The total variation norm is the un-halved one,
// i.e. twice sup_A |mu(A) - nu(A)| for probabilities.
double distance(DistanceKind kind, const SignedMeasure& mu,
                const SignedMeasure& nu);

// (mu * nu){j} = sum_k mu{k} nu{j-k}. The truncated mass of the result is
// tm(mu)|nu| + tm(nu)|mu| + tm(mu)tm(nu), an upper bound on what the exact
// convolution of the untruncated laws places off the computed support.
SignedMeasure convolve(const SignedMeasure& mu, const SignedMeasure& nu);

// l-th forward difference: Delta^l mu{j} = sum_k C(l,k) (-1)^k mu{j-l+k},
// whose characteristic function is (e^{i theta} - 1)^l phi_mu(theta).
SignedMeasure difference(const SignedMeasure& mu, int l);

// phi_sigma(theta) = sum_j e^{ij theta} sigma{j}, compensated. |theta| <= pi.
ComplexPoint char_fn(const SignedMeasure& sigma, double theta);

// sigma{[a, b]} (signed).
double interval_mass(const SignedMeasure& sigma, std::int64_t a,
                     std::int64_t b);

// |sigma|{(-inf, a) U (b, inf)} + truncated_mass. Requires a <= b.
double tail_mass(const SignedMeasure& sigma, std::int64_t a, std::int64_t b);

// Support policy for infinite-support laws: keep the points with
// |pmf| >= threshold inside mean +- sd_window * sd.
struct TruncationPolicy {
  double threshold = 1e-18;
  double sd_window = 40.0;
};

// Tabulates a unimodal pmf. Starting from `mode`, the window grows in both
// directions while the pmf stays above the threshold, inside the sd window
// and at or above `floor`. Mass outside the window is accumulated by
// continuing the outward scan until the terms are negligible, and recorded
// as truncated mass.
SignedMeasure tabulate_unimodal(const std::function<double(std::int64_t)>& pmf,
                                std::int64_t mode, double mean, double sd,
                                std::int64_t floor,
                                const TruncationPolicy& policy = {});

}  // namespace modx

#endif  // MODX_MEASURE_HPP_
