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

#include "modx/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "modx/errors.hpp"
#include "modx/poisson_charlier.hpp"
#include "modx/summation.hpp"

namespace modx {
namespace {

class PoissonFamily final : public DiscreteFamily {
 public:
  std::string name() const override { return "poisson"; }
  SignedMeasure measure(double lambda) const override { return poisson_measure(lambda); }
  double pmf(double lambda, std::int64_t j) const override {
    return j < 0 ? 0.0 : poisson_pmf(lambda, j);
  }
  double mean(double lambda) const override { return lambda; }
  double variance(double lambda) const override { return lambda; }
  ComplexPoint cf(double lambda, double theta) const override {
    return poisson_cf(lambda, theta);
  }
  double log_abs_cf(double lambda, double theta) const override {
    return -lambda * (1.0 - std::cos(theta));
  }
};

class CompoundPoissonFamily final : public DiscreteFamily {
 public:
  explicit CompoundPoissonFamily(const SignedMeasure& jumps) {
    require(jumps.at(0) == 0.0, "compound Poisson jumps must put no mass at 0");
    CompensatedSum total;
    for (std::int64_t j = jumps.offset(); j <= jumps.last(); ++j) {
      const double w = jumps.at(j);
      if (w == 0.0) continue;
      require(w > 0.0, "compound Poisson jump distribution must be nonnegative");
      sizes_.push_back(j);
      probs_.push_back(w);
      total += w;
    }
    require(std::abs(total.value() - 1.0) <= 1e-9, "jump distribution must sum to 1");
  }

  std::string name() const override { return "compound_poisson"; }

  SignedMeasure measure(double lambda) const override {
    require(lambda > 0.0, "lambda must be positive");
    std::optional<SignedMeasure> acc;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      const SignedMeasure z = poisson_measure(lambda * probs_[i]);
      const SignedMeasure layer = spread(z, sizes_[i]);
      acc = acc ? convolve(*acc, layer) : layer;
    }
    return *acc;
  }

  double mean(double lambda) const override { return lambda * moment(1); }
  double variance(double lambda) const override { return lambda * moment(2); }

  ComplexPoint cf(double lambda, double theta) const override {
    ComplexPoint s;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      s += probs_[i] * (std::polar(1.0, static_cast<double>(sizes_[i]) * theta) - 1.0);
    }
    return std::exp(lambda * s);
  }

  double log_abs_cf(double lambda, double theta) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      s += probs_[i] * (std::cos(static_cast<double>(sizes_[i]) * theta) - 1.0);
    }
    return lambda * s;
  }

 private:
  // Law of j Z from the law of Z.
  static SignedMeasure spread(const SignedMeasure& z, std::int64_t j) {
    const auto step = static_cast<std::size_t>(std::abs(j));
    const std::size_t n = z.size();
    std::vector<double> w((n - 1) * step + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t pos = j > 0 ? k * step : (n - 1 - k) * step;
      w[pos] = z.weights()[k];
    }
    const std::int64_t offset = j > 0 ? j * z.offset() : j * z.last();
    return SignedMeasure(offset, std::move(w), z.truncated_mass());
  }

  double moment(int power) const {
    CompensatedSum s;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      s += probs_[i] * std::pow(static_cast<double>(sizes_[i]), power);
    }
    return s.value();
  }

  std::vector<std::int64_t> sizes_;
  std::vector<double> probs_;
};

double bessel_log_term(double lambda, std::int64_t j) {
  const double jd = static_cast<double>(j);
  return jd * std::log(lambda) - std::lgamma(jd + 1.0) - std::lgamma(jd);
}

std::int64_t bessel_mode(double lambda) {
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(std::sqrt(lambda))));
}

double bessel_log_normaliser(double lambda) {
  const std::int64_t mode = bessel_mode(lambda);
  const double peak = bessel_log_term(lambda, mode);
  CompensatedSum s;
  for (std::int64_t j = mode; j >= 1; --j) {
    const double t = std::exp(bessel_log_term(lambda, j) - peak);
    s += t;
    if (t < 1e-20) break;
  }
  for (std::int64_t j = mode + 1;; ++j) {
    const double t = std::exp(bessel_log_term(lambda, j) - peak);
    s += t;
    if (t < 1e-20) break;
  }
  return peak + std::log(s.value());
}

class BesselFamily final : public DiscreteFamily {
 public:
  std::string name() const override { return "bessel"; }

  SignedMeasure measure(double lambda) const override {
    require(lambda >= lambda_min(), "Bessel family needs lambda >= 1");
    const double log_l = bessel_log_normaliser(lambda);
    const auto pmf = [&](std::int64_t j) {
      return j < 1 ? 0.0 : std::exp(bessel_log_term(lambda, j) - log_l);
    };
    // sqrt(lambda)/2 approximates the variance; the window only needs a scale.
    const double sd = std::max(1.0, std::sqrt(std::sqrt(lambda) / 2.0));
    return tabulate_unimodal(pmf, bessel_mode(lambda), std::sqrt(lambda), sd, 1);
  }

  double pmf(double lambda, std::int64_t j) const override {
    require(lambda >= lambda_min(), "Bessel family needs lambda >= 1");
    if (j < 1) return 0.0;
    return std::exp(bessel_log_term(lambda, j) - bessel_log_normaliser(lambda));
  }

  double mean(double lambda) const override { return measure(lambda).mean(); }
  double variance(double lambda) const override { return measure(lambda).variance(); }
  ComplexPoint cf(double lambda, double theta) const override {
    return char_fn(measure(lambda), theta);
  }
};

// Smallest lambda >= lambda_min with sigma^2(lambda) = target.
double invert_variance(const DiscreteFamily& family, double target) {
  double lo = family.lambda_min();
  require(family.variance(lo) <= target, "target variance below sigma^2(lambda_min)");
  double hi = std::max(2.0 * lo, 1.0);
  while (family.variance(hi) < target) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw NumericalError("variance inversion did not bracket");
  }
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (family.variance(mid) < target ? lo : hi) = mid;
  }
  return std::abs(family.variance(lo) - target) < std::abs(family.variance(hi) - target) ? lo
                                                                                         : hi;
}

}  // namespace

double DiscreteFamily::pmf(double lambda, std::int64_t j) const {
  return measure(lambda).at(j);
}

double DiscreteFamily::log_abs_cf(double lambda, double theta) const {
  return std::log(std::abs(cf(lambda, theta)));
}

std::shared_ptr<const DiscreteFamily> poisson_family() {
  return std::make_shared<PoissonFamily>();
}

std::shared_ptr<const DiscreteFamily> compound_poisson_family(const SignedMeasure& jumps) {
  return std::make_shared<CompoundPoissonFamily>(jumps);
}

std::shared_ptr<const DiscreteFamily> bessel_family() {
  return std::make_shared<BesselFamily>();
}

double bessel_normaliser(double lambda) {
  require(lambda > 0.0, "lambda must be positive");
  return std::exp(bessel_log_normaliser(lambda));
}

SignedMeasure q_measure(const DiscreteFamily& family, const TranslatedParams& params) {
  require(params.p >= 0.0 && params.p <= 1.0, "p must lie in [0, 1]");
  const SignedMeasure r = family.measure(params.lambda_prime);
  if (params.p == 0.0) return r.shifted(params.m);
  return combine(params.p, r.shifted(params.m + 1), 1.0 - params.p, r.shifted(params.m));
}

ComplexPoint q_char_fn(const DiscreteFamily& family, const TranslatedParams& params,
                       double theta) {
  const double md = static_cast<double>(params.m);
  return std::polar(1.0, md * theta) * (1.0 + params.p * (std::polar(1.0, theta) - 1.0)) *
         family.cf(params.lambda_prime, theta);
}

TranslatedParams poisson_mean_match(double lambda, double a1) {
  const double lp = lambda + a1;
  require(std::isfinite(lp) && lp > 0.0, "lambda + a1 must be positive");
  return {lp, 0, 0.0, std::nullopt};
}

TranslatedParams translated_poisson_params(double lambda, double a1, double a2) {
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive");
  const double v = 2.0 * a2 - a1 * a1;
  const double x = a1 - v;
  const double fl = std::floor(x);
  const double p = std::sqrt(x - fl);
  const double lp = lambda + v - p * (1.0 - p);
  require(std::isfinite(lp) && lp > 0.0, "translated Poisson lambda' must be positive");
  return {lp, static_cast<std::int64_t>(fl), p, std::nullopt};
}

TranslatedParams general_params_solver(const DiscreteFamily& family, double mean_x,
                                       double var_x) {
  require(std::isfinite(mean_x) && std::isfinite(var_x), "moments must be finite");
  require(var_x >= family.variance(family.lambda_min()) + 0.25,
          "Var X must be at least sigma^2(lambda_min) + 1/4");
  const double lambda0 = invert_variance(family, var_x);
  const auto m_star = static_cast<std::int64_t>(std::floor(mean_x - family.mean(lambda0)));
  const double md = static_cast<double>(m_star);
  const auto lambda_of = [&](double p) { return invert_variance(family, var_x - p * (1.0 - p)); };
  const auto f = [&](double p) { return mean_x - family.mean(lambda_of(p)) - md - p; };

  double lo = 0.0, hi = 1.0;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo >= 0.0 && f_hi < 0.0)) {
    throw NumericalError("general_params_solver: f(0) >= 0 > f(1) does not hold");
  }
  if (f_lo == 0.0) return {lambda0, m_star, 0.0, lambda0};
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) >= 0.0 ? lo : hi) = mid;
  }
  const double p = 0.5 * (lo + hi);
  return {lambda_of(p), m_star, p, lambda0};
}

double h_lambda(const DiscreteFamily& family, double lambda) {
  constexpr int kGrid = 4096;
  double inf = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= kGrid; ++k) {
    const double theta = std::numbers::pi * k / kGrid;
    inf = std::min(inf, -family.log_abs_cf(lambda, theta) / (theta * theta));
  }
  return 0.99 * std::max(inf, 0.0);
}

SignedMeasure family_nu(const DiscreteFamily& family, double lambda,
                        std::span<const double> atilde) {
  const SignedMeasure r = family.measure(lambda);
  SignedMeasure acc = r;
  for (std::size_t l = 1; l <= atilde.size(); ++l) {
    if (atilde[l - 1] == 0.0) continue;
    acc = combine(1.0, acc, atilde[l - 1], difference(r, static_cast<int>(l)));
  }
  return acc;
}

}  // namespace modx
