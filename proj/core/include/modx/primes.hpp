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

// Prime tables, a prime-factor-count sieve, Euler-product expansion
// constants and Poisson-type approximations for omega(n) and Omega(n).

#ifndef MODX_PRIMES_HPP_
#define MODX_PRIMES_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modx/measure.hpp"

namespace modx {

class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

inline constexpr std::uint64_t kMaxSieve = 100'000'000;

struct FactorCounts {
  std::uint64_t n_max = 0;
  std::vector<std::uint8_t> omega;      // index n; entry 0 unused
  std::vector<std::uint8_t> big_omega;  // index n; entry 0 unused
  // True when Omega was read from a cache that stores min(Omega, 15).
  bool big_omega_saturated = false;
};

// Exact omega(n) and Omega(n) for 1 <= n <= n_max by a segmented sieve.
FactorCounts sieve_factor_counts(std::uint64_t n_max);

// Binary cache: "MODX1", n_max as 8 bytes little-endian, then one byte per n
// with omega in the low nibble and min(Omega, 15) in the high nibble.
void save_factor_counts(const FactorCounts& counts, const std::filesystem::path& path);
FactorCounts load_factor_counts(const std::filesystem::path& path);

// Loads factor_counts_<n_max>.bin from `cache_dir` when present, otherwise
// sieves and writes it. An empty `cache_dir` disables caching.
FactorCounts cached_factor_counts(std::uint64_t n_max, const std::filesystem::path& cache_dir);

enum class EulerKind { kPhi1, kPhi2 };
enum class DivisorKind { kOmega, kBigOmega };

// Taylor coefficients in w of
//   Phi1(w) = Gamma(1+w)^{-1} prod_q (1 + w/q)(1 - 1/q)^w,
//   Phi2(w) = Gamma(1+w)^{-1} prod_q (1 - w/(q-1))^{-1} (1 - 1/q)^w,
// from prime sums over q <= prime_cutoff plus an integral tail estimate.
struct EulerExpansion {
  EulerKind kind = EulerKind::kPhi1;
  std::vector<double> coeffs;      // coeffs[0] = 1
  std::vector<double> log_coeffs;  // log_coeffs[0] = 0
  std::vector<double> coeff_error; // bound on |error| per coefficient
  std::uint64_t prime_cutoff = 0;
  double tail_error = 0.0;         // max of coeff_error
};

inline constexpr int kMaxEulerOrder = 6;

EulerExpansion euler_expansion(EulerKind kind, int order, std::uint64_t prime_cutoff);
EulerExpansion euler_expansion(EulerKind kind, int order, const PrimeTable& table);

inline constexpr double kEulerGamma = 0.57721566490153286061;

struct ErdosKacParams {
  DivisorKind kind = DivisorKind::kOmega;
  double a1 = 0.0;
  double a2 = 0.0;
  double x = 0.0;
  std::int64_t m = 0;
  double p = 0.0;
  double offset = 0.0;  // lambda' - log log n
  double tail_error = 0.0;
};

ErdosKacParams erdos_kac_params(DivisorKind kind, std::uint64_t prime_cutoff);
ErdosKacParams erdos_kac_params(DivisorKind kind, const EulerExpansion& expansion);

// Law of omega(N) (or Omega(N)) for N uniform on {1, ..., n}.
SignedMeasure empirical_counts(const FactorCounts& counts, std::uint64_t n, DivisorKind kind);

struct ErdosKacRow {
  std::uint64_t n = 0;
  double loglog = 0.0;
  double empirical_mean = 0.0;
  double poisson_d_loc = 0.0, poisson_d_k = 0.0, poisson_tv = 0.0;
  double nu1_d_loc = 0.0, nu1_d_k = 0.0, nu1_tv = 0.0;
  std::optional<double> nu2_d_loc, nu2_d_k, nu2_tv;
  double q_d_loc = 0.0, q_d_k = 0.0, q_tv = 0.0;
};

// One row per n in `ladder` (each at most counts.n_max); nu2 columns only
// when r >= 2.
std::vector<ErdosKacRow> erdos_kac_compare(const FactorCounts& counts,
                                           std::span<const std::uint64_t> ladder, int r,
                                           DivisorKind kind, const EulerExpansion& expansion);

std::string to_string(DivisorKind kind);
std::string to_string(EulerKind kind);

}  // namespace modx

#endif  // MODX_PRIMES_HPP_
