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

#include "modx/poisson_charlier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modx/errors.hpp"
#include "modx/summation.hpp"

namespace modx {
namespace {

long double log_factorial(std::int64_t j) {
  const long double x = static_cast<long double>(j) + 1.0L;
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgammal_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

void require_lambda(double lambda) {
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive");
}

void require_order(int r) {
  require(r >= 0 && r <= kMaxCharlierOrder,
          "Charlier order must lie in [0, " +
              std::to_string(kMaxCharlierOrder) + "]");
}

// Scans |pmf(j) * factor(j)| outward from `start` until negligible.
template <typename Term>
double scan_abs(Term term, std::int64_t start, std::int64_t step) {
  CompensatedSum acc;
  for (std::int64_t j = start; j >= 0; j += step) {
    const double t = std::fabs(term(j));
    acc.add(t);
    if (t < 1e-300 || t <= 1e-30 * acc.value()) break;
  }
  return acc.value();
}

}  // namespace

double poisson_pmf(double lambda, std::int64_t j) {
  require_lambda(lambda);
  require(j >= 0, "poisson_pmf requires j >= 0");
  const long double l = lambda;
  const long double log_p =
      -l + static_cast<long double>(j) * std::log(l) - log_factorial(j);
  return static_cast<double>(std::exp(log_p));
}

SignedMeasure poisson_measure(double lambda, const TruncationPolicy& policy) {
  require_lambda(lambda);
  const auto mode = static_cast<std::int64_t>(std::floor(lambda));
  return tabulate_unimodal(
      [lambda](std::int64_t j) { return poisson_pmf(lambda, j); }, mode,
      lambda, std::sqrt(lambda), 0, policy);
}

ComplexPoint poisson_cf(double lambda, double theta) {
  const ComplexPoint w(std::cos(theta) - 1.0, std::sin(theta));
  return std::exp(lambda * w);
}

CharlierContext::CharlierContext(double lambda, int max_order)
    : lambda_(lambda), max_order_(max_order) {
  require_lambda(lambda);
  require_order(max_order);
  binom_.resize(static_cast<std::size_t>(max_order) + 1);
  for (int l = 0; l <= max_order; ++l) {
    auto& row = binom_[static_cast<std::size_t>(l)];
    row.assign(static_cast<std::size_t>(l) + 1, 1.0);
    for (int k = 1; k <= l; ++k) {
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] * (l - k + 1) / k;
    }
  }
}

std::vector<double> CharlierContext::values(std::int64_t j) const {
  require(j >= 0, "Charlier polynomials are evaluated at j >= 0");
  // ff[k] = j (j-1) ... (j-k+1) / lambda^k
  std::vector<double> ff(static_cast<std::size_t>(max_order_) + 1, 0.0);
  ff[0] = 1.0;
  for (int k = 1; k <= max_order_ && k <= j; ++k) {
    ff[static_cast<std::size_t>(k)] = ff[static_cast<std::size_t>(k - 1)] *
                                      static_cast<double>(j - k + 1) / lambda_;
  }
  std::vector<double> out(static_cast<std::size_t>(max_order_) + 1);
  for (int l = 0; l <= max_order_; ++l) {
    const auto& row = binom_[static_cast<std::size_t>(l)];
    CompensatedSum s;
    for (int k = 0; k <= l; ++k) {
      const double term =
          row[static_cast<std::size_t>(k)] * ff[static_cast<std::size_t>(k)];
      s.add(k % 2 == 0 ? term : -term);
    }
    out[static_cast<std::size_t>(l)] = s.value();
  }
  return out;
}

double charlier(int l, std::int64_t j, double lambda) {
  require_order(l);
  return CharlierContext(lambda, l).values(j)[static_cast<std::size_t>(l)];
}

double charlier_bound(int l, std::int64_t j, double lambda) {
  require_lambda(lambda);
  require(l >= 0, "Charlier order must be nonnegative");
  const double dev = std::fabs(1.0 - static_cast<double>(j) / lambda);
  return std::ldexp(std::pow(dev, l) + std::pow(l / std::sqrt(lambda), l),
                    l - 1);
}

double chernoff_tail(double lambda, double delta) {
  require_lambda(lambda);
  require(delta > 0.0 && delta <= 1.0, "chernoff_tail requires 0 < delta <= 1");
  return std::exp(-lambda * delta * delta / (2.0 * (1.0 + delta / 3.0)));
}

SignedMeasure build_nu(const NuSpec& spec, const TruncationPolicy& policy) {
  require_lambda(spec.lambda);
  require_order(spec.order());
  for (double a : spec.atilde) {
    require(std::isfinite(a), "atilde coefficients must be finite");
  }
  const SignedMeasure po = poisson_measure(spec.lambda, policy);
  if (spec.atilde.empty()) return po;

  const CharlierContext ctx(spec.lambda, spec.order());
  auto factor = [&](std::int64_t j) {
    const auto c = ctx.values(j);
    CompensatedSum s(1.0);
    for (int l = 1; l <= spec.order(); ++l) {
      const double term = spec.atilde[static_cast<std::size_t>(l - 1)] *
                          c[static_cast<std::size_t>(l)];
      s.add(l % 2 == 0 ? term : -term);
    }
    return s.value();
  };
  std::vector<double> w(po.size());
  for (std::int64_t j = po.offset(); j <= po.last(); ++j) {
    w[static_cast<std::size_t>(j - po.offset())] = po.at(j) * factor(j);
  }
  auto term = [&](std::int64_t j) {
    return poisson_pmf(spec.lambda, j) * factor(j);
  };
  double dropped = scan_abs(term, po.last() + 1, 1);
  if (po.offset() > 0) dropped += scan_abs(term, po.offset() - 1, -1);
  return SignedMeasure(po.offset(), std::move(w), dropped);
}

ComplexPoint nu_char_fn(const NuSpec& spec, double theta) {
  const ComplexPoint w(std::cos(theta) - 1.0, std::sin(theta));
  ComplexPoint poly = 1.0;
  ComplexPoint wl = 1.0;
  for (double a : spec.atilde) {
    wl *= w;
    poly += a * wl;
  }
  return poly * poisson_cf(spec.lambda, theta);
}

double a_bar(std::span<const double> atilde) {
  double s = 1.0;
  for (std::size_t l = 0; l < atilde.size(); ++l) {
    s += std::ldexp(std::fabs(atilde[l]), static_cast<int>(l) + 1);
  }
  return s;
}

double nu_tail_bound(const NuSpec& spec, std::int64_t m, TailSide side) {
  require_lambda(spec.lambda);
  const double lambda = spec.lambda;
  const double md = static_cast<double>(m);
  const double r = spec.order();
  const double abar = a_bar(spec.atilde);
  if (side == TailSide::kLower) {
    require(m >= 0 && md <= lambda,
            "lower nu tail bound needs 0 <= m <= lambda");
    return abar * std::exp(-(lambda - md) * (lambda - md) / (3.0 * lambda));
  }
  require(md >= lambda + r && md <= 2.0 * lambda,
          "upper nu tail bound needs lambda + r <= m <= 2 lambda");
  const double d = md - r - lambda;
  return abar * std::exp(-d * d / (3.0 * lambda));
}

}  // namespace modx
