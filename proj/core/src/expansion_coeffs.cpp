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

#include "modx/expansion_coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "modx/errors.hpp"
#include "modx/series.hpp"
#include "modx/summation.hpp"

namespace modx {
namespace {

constexpr std::size_t kSeriesTerms = 60;
constexpr double kSeriesSwitch = 0.5;

void check_finite(const ExpansionCoeffs& e) {
  for (double c : e.coeffs) require(std::isfinite(c), "expansion coefficient not finite");
}

ExpansionCoeffs as_w(const ExpansionCoeffs& e) {
  return e.basis == Basis::kWPower ? e : to_w_basis(e);
}

ExpansionCoeffs as_theta(const ExpansionCoeffs& e) {
  return e.basis == Basis::kThetaPower ? e : to_theta_basis(e);
}

ComplexPoint ipow(double theta, int j) {
  static constexpr ComplexPoint kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kI[j % 4] * std::pow(theta, j);
}

}  // namespace

ExpansionCoeffs to_w_basis(const ExpansionCoeffs& a) {
  require(a.basis == Basis::kThetaPower, "to_w_basis expects theta-power coefficients");
  check_finite(a);
  const auto r = a.coeffs.size();
  const auto p = series::expm1_powers(r, r);
  std::vector<double> at(r, 0.0);
  for (std::size_t j = 1; j <= r; ++j) {
    double s = a.coeffs[j - 1];
    for (std::size_t l = 1; l < j; ++l) s -= at[l - 1] * p[l][j];
    at[j - 1] = s;
  }
  return {Basis::kWPower, std::move(at)};
}

ExpansionCoeffs to_theta_basis(const ExpansionCoeffs& atilde) {
  require(atilde.basis == Basis::kWPower, "to_theta_basis expects w-power coefficients");
  check_finite(atilde);
  const auto r = atilde.coeffs.size();
  const auto p = series::expm1_powers(r, r);
  std::vector<double> a(r, 0.0);
  for (std::size_t j = 1; j <= r; ++j) {
    CompensatedSum s;
    for (std::size_t l = 1; l <= j; ++l) s += atilde.coeffs[l - 1] * p[l][j];
    a[j - 1] = s.value();
  }
  return {Basis::kThetaPower, std::move(a)};
}

ComplexPoint evaluate(const ExpansionCoeffs& e, double theta) {
  const ComplexPoint x = e.basis == Basis::kThetaPower
                             ? ComplexPoint(0.0, theta)
                             : std::polar(1.0, theta) - 1.0;
  ComplexPoint acc = 0.0;
  for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it) acc = (acc + *it) * x;
  return acc + 1.0;
}

BasisResidual::BasisResidual(const ExpansionCoeffs& e) : a_(as_theta(e)), at_(as_w(e)) {
  const auto r = static_cast<std::size_t>(e.order());
  const std::size_t n = r + kSeriesTerms;
  const auto p = series::expm1_powers(r, n);
  c_.assign(n + 1, 0.0);
  for (std::size_t j = r + 1; j <= n; ++j) {
    for (std::size_t l = 1; l <= r; ++l) c_[j] += at_.coeffs[l - 1] * p[l][j];
  }
}

ComplexPoint BasisResidual::operator()(double theta) const {
  const int r = a_.order();
  if (r == 0) return 0.0;
  if (std::abs(theta) >= kSeriesSwitch) return evaluate(at_, theta) - evaluate(a_, theta);
  const ComplexPoint x(0.0, std::abs(theta));
  ComplexPoint d;
  for (std::size_t j = c_.size() - 1; j > static_cast<std::size_t>(r); --j) d = d * x + c_[j];
  d *= ipow(std::abs(theta), r + 1);
  return theta < 0.0 ? std::conj(d) : d;
}

ComplexPoint basis_residual(const ExpansionCoeffs& e, double theta) {
  check_finite(e);
  return BasisResidual(e)(theta);
}

double gamma_r(const ExpansionCoeffs& e) {
  check_finite(e);
  const int r = e.order();
  if (r == 0) return 0.0;
  const BasisResidual res(e);
  const auto ratio = [&](double theta) { return std::abs(res(theta)) / std::pow(theta, r + 1); };

  double sup = 0.0;
  constexpr int kLog = 1024;
  constexpr int kLin = 3072;
  for (int k = 0; k < kLog; ++k) {
    const double theta = 1e-4 * std::pow(1e3, static_cast<double>(k) / kLog);
    sup = std::max(sup, ratio(theta));
  }
  for (int k = 0; k < kLin; ++k) {
    const double theta = 0.1 + (std::numbers::pi - 0.1) * k / (kLin - 1);
    sup = std::max(sup, ratio(theta));
  }
  return 1.05 * sup;
}

double g_r_delta(double gamma, double delta) {
  require(gamma >= 0.0 && std::isfinite(gamma), "Gamma_r must be finite and non-negative");
  require(delta > 0.0 && delta <= 1.0, "delta must lie in (0, 1]");
  return gamma * std::pow(std::numbers::pi, 1.0 - delta);
}

CumulantSet factorial_cumulants(const SignedMeasure& pmf, int max_order) {
  require(max_order >= 1 && max_order <= kMaxCumulantOrder,
          "cumulant order must lie in [1, 12]");
  const auto n = static_cast<std::size_t>(max_order);
  std::vector<CompensatedSum> b(n + 1);
  const auto w = pmf.weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    const double x = static_cast<double>(pmf.offset() + static_cast<std::int64_t>(i));
    double binom = 1.0;
    b[0] += w[i];
    for (std::size_t l = 1; l <= n; ++l) {
      binom *= (x - static_cast<double>(l - 1)) / static_cast<double>(l);
      b[l] += w[i] * binom;
    }
  }
  const double b0 = b[0].value();
  require(b0 > 0.0, "pmf must have positive mass");
  std::vector<double> bs(n + 1);
  for (std::size_t l = 0; l <= n; ++l) bs[l] = b[l].value() / b0;
  const auto lg = series::log(bs, n);
  CumulantSet out;
  out.truncated_mass = pmf.truncated_mass();
  out.kappa.resize(n);
  double fact = 1.0;
  for (std::size_t l = 1; l <= n; ++l) {
    fact *= static_cast<double>(l);
    out.kappa[l - 1] = fact * lg[l];
  }
  return out;
}

CumulantSet sum_cumulants(std::span<const CumulantSet> sets) {
  require(!sets.empty(), "no cumulant sets to add");
  int order = sets.front().max_order();
  for (const auto& s : sets) order = std::min(order, s.max_order());
  CumulantSet out;
  out.kappa.assign(static_cast<std::size_t>(order), 0.0);
  for (const auto& s : sets) {
    for (int l = 1; l <= order; ++l) out.kappa[static_cast<std::size_t>(l - 1)] += s.at(l);
    out.truncated_mass += s.truncated_mass;
  }
  return out;
}

int independent_sum_length(int r) { return std::max(1, 3 * (r - 1)); }

ExpansionCoeffs indept_sum_coeffs(const CumulantSet& cumulants, int r) {
  require(r >= 1, "order r must be at least 1");
  require(cumulants.max_order() >= r + 1, "need factorial cumulants up to order r+1");
  const auto len = static_cast<std::size_t>(independent_sum_length(r));
  std::vector<double> g(static_cast<std::size_t>(r) + 2, 0.0);
  double fact = 1.0;
  for (int l = 1; l <= r + 1; ++l) {
    fact *= l;
    if (l >= 2) g[static_cast<std::size_t>(l)] = cumulants.at(l) / fact;
  }
  const auto e = series::exp(g, len);
  return {Basis::kWPower, std::vector<double>(e.begin() + 1, e.end())};
}

double overlap_p(const SignedMeasure& pmf_a, const SignedMeasure& pmf_b) {
  const double tv = distance(DistanceKind::kTotalVariation, pmf_a, pmf_b.shifted(1));
  return std::clamp(1.0 - 0.5 * tv, 0.0, 1.0);
}

double centering_k(std::span<const CumulantSet> sets) {
  CompensatedSum s;
  for (const auto& c : sets) {
    require(c.max_order() >= 2, "centering needs kappa_2");
    s += c.at(2);
  }
  return std::abs(s.value());
}

}  // namespace modx
