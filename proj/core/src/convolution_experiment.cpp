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

#include "modx/convolution_experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "modx/error_bounds.hpp"
#include "modx/errors.hpp"
#include "modx/poisson_charlier.hpp"

namespace modx {
namespace {

constexpr int kRemainderTerms = 200;
constexpr double kSeriesSwitch = 0.5;

double factorial(int s) {
  double f = 1.0;
  for (int k = 2; k <= s; ++k) f *= k;
  return f;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Coefficient of w^j in 1 + s sum_{l<s} u^l / (s - l), u = w / (1 + w).
double ys_poly_coeff(int s, int j) {
  double c = 0.0;
  for (int l = 1; l <= std::min(j, s - 1); ++l) {
    const double sign = (j - l) % 2 == 0 ? 1.0 : -1.0;
    c += sign * binom(j - 1, l - 1) / (s - l);
  }
  return s * c;
}

void check_s(int s) { require(s >= 1 && s <= 20, "s must lie in [1, 20]"); }

}  // namespace

double ys_pmf(int s, std::int64_t j) {
  check_s(s);
  if (j < 1) return 0.0;
  double den = 1.0;
  for (int k = 0; k <= s; ++k) den *= static_cast<double>(j + k);
  return factorial(s) * s / den;
}

double ys_tail(int s, std::int64_t J) {
  check_s(s);
  require(J >= 0, "J must be non-negative");
  double den = 1.0;
  for (int k = 1; k <= s; ++k) den *= static_cast<double>(J + k);
  return factorial(s) / den;
}

SignedMeasure ys_measure(int s, double tail, std::int64_t max_support) {
  check_s(s);
  require(tail > 0.0 && tail < 1.0, "tail must lie in (0, 1)");
  require(max_support >= 1, "max_support must be positive");
  const double guess = std::ceil(std::pow(factorial(s) / tail, 1.0 / s));
  const auto J = static_cast<std::int64_t>(std::min(guess, static_cast<double>(max_support)));
  std::vector<double> w(static_cast<std::size_t>(J));
  for (std::int64_t j = 1; j <= J; ++j) w[static_cast<std::size_t>(j - 1)] = ys_pmf(s, j);
  return SignedMeasure(1, std::move(w), ys_tail(s, J));
}

ExpansionCoeffs ys_coeffs(int s) {
  check_s(s);
  require(s >= 2, "ys_coeffs needs s >= 2");
  std::vector<double> c(static_cast<std::size_t>(s - 1));
  for (int j = 1; j <= s - 1; ++j) c[static_cast<std::size_t>(j - 1)] = ys_poly_coeff(s, j);
  return {Basis::kWPower, std::move(c)};
}

ComplexPoint ys_cf(int s, double theta) {
  check_s(s);
  if (theta == 0.0) return 1.0;
  const ComplexPoint u = 1.0 - std::polar(1.0, -theta);
  ComplexPoint acc = 1.0;
  ComplexPoint up = 1.0;
  for (int l = 1; l < s; ++l) {
    up *= u;
    acc += static_cast<double>(s) * up / static_cast<double>(s - l);
  }
  up *= u;
  return acc - static_cast<double>(s) * up * std::log(1.0 - std::polar(1.0, theta));
}

ComplexPoint ys_remainder(int s, int r, double theta) {
  check_s(s);
  require(r >= 0 && r <= std::max(s - 1, 0), "order r must lie in [0, s-1]");
  if (theta == 0.0) return 0.0;
  if (theta < 0.0) return std::conj(ys_remainder(s, r, -theta));
  const ComplexPoint w = std::polar(1.0, theta) - 1.0;
  if (theta >= kSeriesSwitch) {
    ComplexPoint poly = 1.0;
    ComplexPoint wp = 1.0;
    for (int l = 1; l <= r; ++l) {
      wp *= w;
      poly += ys_poly_coeff(s, l) * wp;
    }
    return ys_cf(s, theta) - poly;
  }
  ComplexPoint acc = 0.0;
  for (int j = r + kRemainderTerms; j > r; --j) acc = acc * w + ys_poly_coeff(s, j);
  acc *= std::pow(w, r + 1);
  const ComplexPoint u = w / (1.0 + w);
  return acc - static_cast<double>(s) * std::pow(u, s) * std::log(-w);
}

double ys_default_delta(int s, int r) { return r < s - 1 ? 1.0 : 0.9; }

double ys_k_constant(int s, int r, double delta) {
  require(delta > 0.0 && delta <= 1.0, "delta must lie in (0, 1]");
  const double t = r + delta;
  double sup = 0.0;
  constexpr int kLog = 1024;
  constexpr int kLin = 3072;
  for (int k = 0; k < kLog; ++k) {
    const double theta = 1e-8 * std::pow(1e7, static_cast<double>(k) / kLog);
    sup = std::max(sup, std::abs(ys_remainder(s, r, theta)) / std::pow(theta, t));
  }
  for (int k = 0; k < kLin; ++k) {
    const double theta = 0.1 + (std::numbers::pi - 0.1) * k / (kLin - 1);
    sup = std::max(sup, std::abs(ys_remainder(s, r, theta)) / std::pow(theta, t));
  }
  return 1.05 * sup;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "need at least two points");
  double mx = 0.0, my = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0.0 && y[i] > 0.0, "log-log slope needs positive values");
    mx += std::log(x[i]) / n;
    my += std::log(y[i]) / n;
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  require(sxx > 0.0, "x values must not all coincide");
  return sxy / sxx;
}

ConvolutionReport convolution_experiment(int s, std::span<const double> lambdas, int r) {
  check_s(s);
  require(s >= 2, "convolution_experiment needs s >= 2");
  require(r >= 0 && r <= s - 1, "order r must lie in [0, s-1]");
  require(!lambdas.empty(), "no lambda values given");
  ConvolutionReport rep;
  rep.s = s;
  rep.r = r;
  rep.delta = ys_default_delta(s, r);
  rep.K = ys_k_constant(s, r, rep.delta);
  const auto coeffs = ys_coeffs(s);
  const SignedMeasure y = ys_measure(s);
  const auto poisson = poisson_family();
  NuSpec spec;
  spec.atilde.assign(coeffs.coeffs.begin(), coeffs.coeffs.begin() + r);

  std::vector<double> xs, dks;
  for (double lambda : lambdas) {
    require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive");
    ConvolutionRow row;
    row.lambda = lambda;
    const SignedMeasure po = poisson_measure(lambda);
    const SignedMeasure px = convolve(po, y);
    spec.lambda = lambda;
    const SignedMeasure nu = build_nu(spec);
    row.d_loc = distance(DistanceKind::kLocal, px, nu);
    row.d_k = distance(DistanceKind::kKolmogorov, px, nu);
    row.tv = distance(DistanceKind::kTotalVariation, px, nu);
    const BoundReport b = bound_th1(rep.K, lambda, r + rep.delta);
    row.bound_loc = b.loc_bound;
    row.bound_k = b.kolmogorov_bound;
    row.poisson_d_k = distance(DistanceKind::kKolmogorov, px, po);
    if (s >= 3) {
      const double a1 = coeffs.coeffs[0];
      const double a2 = coeffs.coeffs[1] + 0.5 * coeffs.coeffs[0];
      try {
        row.translated = translated_poisson_params(lambda, a1, a2);
        row.translated_d_k =
            distance(DistanceKind::kKolmogorov, px, q_measure(*poisson, *row.translated));
      } catch (const PreconditionError&) {
        row.translated.reset();
      }
    }
    xs.push_back(lambda);
    dks.push_back(row.d_k);
    rep.rows.push_back(row);
  }
  rep.d_k_slope = xs.size() >= 2 ? loglog_slope(xs, dks) : 0.0;
  return rep;
}

}  // namespace modx
