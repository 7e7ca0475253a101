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

#include "modx/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "modx/errors.hpp"
#include "modx/summation.hpp"

namespace modx {

SignedMeasure::SignedMeasure(std::int64_t offset, std::vector<double> weights,
                             double truncated_mass)
    : offset_(offset), weights_(std::move(weights)),
      truncated_mass_(truncated_mass) {
  require(std::isfinite(truncated_mass_) && truncated_mass_ >= 0.0,
          "truncated_mass must be finite and nonnegative");
  for (double w : weights_) {
    require(std::isfinite(w), "measure weights must be finite");
  }
  auto first = std::find_if(weights_.begin(), weights_.end(),
                            [](double w) { return w != 0.0; });
  require(first != weights_.end(),
          "a signed measure needs at least one nonzero weight");
  auto last = std::find_if(weights_.rbegin(), weights_.rend(),
                           [](double w) { return w != 0.0; });
  const auto lead = std::distance(weights_.begin(), first);
  weights_.erase(last.base(), weights_.end());
  weights_.erase(weights_.begin(), first);
  offset_ += lead;
}

SignedMeasure SignedMeasure::point_mass(std::int64_t j) {
  return SignedMeasure(j, {1.0});
}

SignedMeasure SignedMeasure::probability(std::int64_t offset,
                                         std::vector<double> weights,
                                         double truncated_mass, double eps) {
  for (double w : weights) {
    require(w >= 0.0, "probability weights must be nonnegative");
  }
  SignedMeasure m(offset, std::move(weights), truncated_mass);
  require(std::fabs(m.total_mass() - 1.0) <= eps + truncated_mass,
          "probability total mass must be 1 within eps + truncated_mass");
  return m;
}

double SignedMeasure::at(std::int64_t j) const noexcept {
  if (j < offset_ || j > last()) return 0.0;
  return weights_[static_cast<std::size_t>(j - offset_)];
}

double SignedMeasure::total_mass() const { return compensated_sum(weights_); }

double SignedMeasure::absolute_mass() const {
  CompensatedSum s;
  for (double w : weights_) s.add(std::fabs(w));
  return s.value();
}

double SignedMeasure::mean() const {
  CompensatedSum s;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    s.add(static_cast<double>(offset_ + static_cast<std::int64_t>(k)) *
          weights_[k]);
  }
  return s.value() / total_mass();
}

double SignedMeasure::variance() const {
  const double mu = mean();
  CompensatedSum s;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const double d =
        static_cast<double>(offset_ + static_cast<std::int64_t>(k)) - mu;
    s.add(d * d * weights_[k]);
  }
  return s.value() / total_mass();
}

SignedMeasure SignedMeasure::shifted(std::int64_t k) const {
  SignedMeasure out = *this;
  out.offset_ += k;
  return out;
}

SignedMeasure SignedMeasure::scaled(double c) const {
  std::vector<double> w(weights_);
  for (double& x : w) x *= c;
  return SignedMeasure(offset_, std::move(w), std::fabs(c) * truncated_mass_);
}

SignedMeasure SignedMeasure::with_truncated_mass(double truncated_mass) const {
  return SignedMeasure(offset_, weights_, truncated_mass);
}

SignedMeasure combine(double a, const SignedMeasure& mu, double b,
                      const SignedMeasure& nu) {
  const std::int64_t lo = std::min(mu.offset(), nu.offset());
  const std::int64_t hi = std::max(mu.last(), nu.last());
  std::vector<double> w(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) {
    w[static_cast<std::size_t>(j - lo)] = a * mu.at(j) + b * nu.at(j);
  }
  return SignedMeasure(
      lo, std::move(w),
      std::fabs(a) * mu.truncated_mass() + std::fabs(b) * nu.truncated_mass());
}

double distance(DistanceKind kind, const SignedMeasure& mu,
                const SignedMeasure& nu) {
  const std::int64_t lo = std::min(mu.offset(), nu.offset());
  const std::int64_t hi = std::max(mu.last(), nu.last());
  double sup = 0.0;
  CompensatedSum acc;
  for (std::int64_t j = lo; j <= hi; ++j) {
    const double d = mu.at(j) - nu.at(j);
    switch (kind) {
      case DistanceKind::kLocal:
        sup = std::max(sup, std::fabs(d));
        break;
      case DistanceKind::kKolmogorov:
        acc.add(d);
        sup = std::max(sup, std::fabs(acc.value()));
        break;
      case DistanceKind::kTotalVariation:
        acc.add(std::fabs(d));
        break;
    }
  }
  return kind == DistanceKind::kTotalVariation ? acc.value() : sup;
}

SignedMeasure convolve(const SignedMeasure& mu, const SignedMeasure& nu) {
  const auto a = mu.weights();
  const auto b = nu.weights();
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    double* dst = out.data() + i;
    for (std::size_t k = 0; k < b.size(); ++k) dst[k] += ai * b[k];
  }
  const double tm = mu.truncated_mass() * nu.absolute_mass() +
                    nu.truncated_mass() * mu.absolute_mass() +
                    mu.truncated_mass() * nu.truncated_mass();
  return SignedMeasure(mu.offset() + nu.offset(), std::move(out), tm);
}

SignedMeasure difference(const SignedMeasure& mu, int l) {
  require(l >= 0, "difference order must be nonnegative");
  if (l == 0) return mu;
  std::vector<double> binom(static_cast<std::size_t>(l) + 1, 1.0);
  for (int k = 1; k <= l; ++k) {
    binom[static_cast<std::size_t>(k)] =
        binom[static_cast<std::size_t>(k - 1)] * (l - k + 1) / k;
  }
  const auto w = mu.weights();
  const auto n = static_cast<std::int64_t>(w.size());
  std::vector<double> out(static_cast<std::size_t>(n + l));
  for (std::int64_t idx = 0; idx < n + l; ++idx) {
    CompensatedSum s;
    for (int k = 0; k <= l; ++k) {
      const std::int64_t src = idx - l + k;
      if (src < 0 || src >= n) continue;
      const double term = binom[static_cast<std::size_t>(k)] *
                          w[static_cast<std::size_t>(src)];
      s.add((k % 2 == 0) ? term : -term);
    }
    out[static_cast<std::size_t>(idx)] = s.value();
  }
  return SignedMeasure(mu.offset(), std::move(out),
                       std::ldexp(mu.truncated_mass(), l));
}

ComplexPoint char_fn(const SignedMeasure& sigma, double theta) {
  CompensatedSum re;
  CompensatedSum im;
  const auto w = sigma.weights();
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double x =
        static_cast<double>(sigma.offset() + static_cast<std::int64_t>(k)) *
        theta;
    re.add(w[k] * std::cos(x));
    im.add(w[k] * std::sin(x));
  }
  return {re.value(), im.value()};
}

double interval_mass(const SignedMeasure& sigma, std::int64_t a,
                     std::int64_t b) {
  CompensatedSum s;
  for (std::int64_t j = std::max(a, sigma.offset());
       j <= std::min(b, sigma.last()); ++j) {
    s.add(sigma.at(j));
  }
  return s.value();
}

double tail_mass(const SignedMeasure& sigma, std::int64_t a, std::int64_t b) {
  require(a <= b, "tail_mass requires a <= b");
  CompensatedSum s(sigma.truncated_mass());
  const auto w = sigma.weights();
  for (std::size_t k = 0; k < w.size(); ++k) {
    const std::int64_t j = sigma.offset() + static_cast<std::int64_t>(k);
    if (j < a || j > b) s.add(std::fabs(w[k]));
  }
  return s.value();
}

namespace {

// Sums pmf(j), pmf(j + step), ... while the terms remain non-negligible.
double scan_tail(const std::function<double(std::int64_t)>& pmf,
                 std::int64_t start, std::int64_t step, std::int64_t floor) {
  constexpr std::int64_t kMaxSteps = 50'000'000;
  CompensatedSum acc;
  std::int64_t j = start;
  for (std::int64_t n = 0; n < kMaxSteps; ++n, j += step) {
    if (step < 0 && j < floor) break;
    const double p = std::fabs(pmf(j));
    acc.add(p);
    if (p < std::numeric_limits<double>::min() ||
        p <= 1e-30 * acc.value()) {
      break;
    }
  }
  return acc.value();
}

}  // namespace

SignedMeasure tabulate_unimodal(const std::function<double(std::int64_t)>& pmf,
                                std::int64_t mode, double mean, double sd,
                                std::int64_t floor,
                                const TruncationPolicy& policy) {
  const auto window_lo = std::max<std::int64_t>(
      floor, static_cast<std::int64_t>(std::ceil(mean - policy.sd_window * sd)));
  const auto window_hi =
      static_cast<std::int64_t>(std::floor(mean + policy.sd_window * sd));
  mode = std::clamp(mode, window_lo, std::max(window_lo, window_hi));
  std::int64_t lo = mode;
  std::int64_t hi = mode;
  while (hi + 1 <= window_hi && std::fabs(pmf(hi + 1)) >= policy.threshold) {
    ++hi;
  }
  while (lo - 1 >= window_lo && std::fabs(pmf(lo - 1)) >= policy.threshold) {
    --lo;
  }
  std::vector<double> w(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) {
    w[static_cast<std::size_t>(j - lo)] = pmf(j);
  }
  double dropped = scan_tail(pmf, hi + 1, 1, floor);
  if (lo - 1 >= floor) dropped += scan_tail(pmf, lo - 1, -1, floor);
  return SignedMeasure(lo, std::move(w), dropped);
}

}  // namespace modx
