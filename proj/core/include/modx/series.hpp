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

// Truncated power-series arithmetic on coefficient vectors (index = power).

#ifndef MODX_SERIES_HPP_
#define MODX_SERIES_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace modx::series {

// Product of a and b truncated after the x^n term.
inline std::vector<double> multiply(std::span<const double> a,
                                    std::span<const double> b, std::size_t n) {
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t k = 0; k < b.size() && i + k <= n; ++k) {
      out[i + k] += a[i] * b[k];
    }
  }
  return out;
}

// exp(g) through x^n; g[0] is ignored (taken as 0).
inline std::vector<double> exp(std::span<const double> g, std::size_t n) {
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double s = 0.0;
    for (std::size_t i = 1; i <= k && i < g.size(); ++i) {
      s += static_cast<double>(i) * g[i] * e[k - i];
    }
    e[k] = s / static_cast<double>(k);
  }
  return e;
}

// log(b) through x^n for b[0] = 1; the constant term of the result is 0.
inline std::vector<double> log(std::span<const double> b, std::size_t n) {
  std::vector<double> c(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    double s = k < b.size() ? b[k] : 0.0;
    for (std::size_t i = 1; i < k; ++i) {
      if (k - i < b.size()) {
        s -= static_cast<double>(i) / static_cast<double>(k) * c[i] * b[k - i];
      }
    }
    c[k] = s;
  }
  return c;
}

// Coefficients of (e^x - 1)^l through x^n, for l = 0..max_power.
inline std::vector<std::vector<double>> expm1_powers(std::size_t max_power,
                                                     std::size_t n) {
  std::vector<double> e(n + 1, 0.0);
  double f = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    f /= static_cast<double>(k);
    e[k] = f;
  }
  std::vector<std::vector<double>> out;
  out.reserve(max_power + 1);
  std::vector<double> p(n + 1, 0.0);
  p[0] = 1.0;
  out.push_back(p);
  for (std::size_t l = 1; l <= max_power; ++l) {
    p = multiply(p, e, n);
    out.push_back(p);
  }
  return out;
}

}  // namespace modx::series

#endif  // MODX_SERIES_HPP_
