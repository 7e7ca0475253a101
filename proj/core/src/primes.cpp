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

#include "modx/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "modx/errors.hpp"
#include "modx/families.hpp"
#include "modx/poisson_charlier.hpp"
#include "modx/series.hpp"
#include "modx/summation.hpp"

namespace modx {
namespace {

constexpr std::array<char, 5> kMagic = {'M', 'O', 'D', 'X', '1'};
constexpr std::uint64_t kSegment = 1u << 20;

// Upper bound factor for prime sums against the integral tail estimate.
constexpr double kTailFactor = 1.3;

constexpr std::array<double, 7> kZeta = {
    0.0,
    0.0,
    std::numbers::pi * std::numbers::pi / 6.0,
    1.2020569031595942854,
    std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi / 90.0,
    1.0369277551433699263,
    std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi *
        std::numbers::pi * std::numbers::pi / 945.0};

// P^{1-k} / ((k-1) log P), the integral estimate of sum_{q>P} q^{-k}.
double tail_estimate(int k, double cutoff) {
  return std::pow(cutoff, 1.0 - k) / ((k - 1) * std::log(cutoff));
}

EulerKind euler_kind_for(DivisorKind kind) {
  return kind == DivisorKind::kOmega ? EulerKind::kPhi1 : EulerKind::kPhi2;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  require(limit <= 4'000'000'000ULL, "prime table limit too large");
  if (limit < 2) return;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) primes_.push_back(static_cast<std::uint32_t>(i));
  }
}

FactorCounts sieve_factor_counts(std::uint64_t n_max) {
  require(n_max >= 1 && n_max <= kMaxSieve, "n_max must lie in [1, 1e8]");
  FactorCounts fc;
  fc.n_max = n_max;
  try {
    fc.omega.assign(n_max + 1, 0);
    fc.big_omega.assign(n_max + 1, 0);
  } catch (const std::bad_alloc&) {
    throw NumericalError("sieve allocation failed");
  }
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n_max))) + 1;
  const PrimeTable small(root);
  std::vector<std::uint32_t> residual(kSegment);
  for (std::uint64_t lo = 1; lo <= n_max; lo += kSegment) {
    const std::uint64_t hi = std::min(n_max + 1, lo + kSegment);
    for (std::uint64_t n = lo; n < hi; ++n) residual[n - lo] = static_cast<std::uint32_t>(n);
    for (const std::uint32_t p : small.primes()) {
      if (static_cast<std::uint64_t>(p) * p >= hi) break;
      for (std::uint64_t n = (lo + p - 1) / p * p; n < hi; n += p) {
        auto& r = residual[n - lo];
        ++fc.omega[n];
        do {
          r /= p;
          ++fc.big_omega[n];
        } while (r % p == 0);
      }
    }
    for (std::uint64_t n = lo; n < hi; ++n) {
      if (residual[n - lo] > 1) {
        ++fc.omega[n];
        ++fc.big_omega[n];
      }
    }
  }
  return fc;
}

void save_factor_counts(const FactorCounts& counts, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open cache for writing: " + path.string());
  out.write(kMagic.data(), kMagic.size());
  std::array<char, 8> len{};
  for (int i = 0; i < 8; ++i) len[i] = static_cast<char>((counts.n_max >> (8 * i)) & 0xff);
  out.write(len.data(), len.size());
  std::vector<char> buf(counts.n_max);
  for (std::uint64_t n = 1; n <= counts.n_max; ++n) {
    const unsigned lo = counts.omega[n] & 0x0f;
    const unsigned hi = std::min<unsigned>(counts.big_omega[n], 15);
    buf[n - 1] = static_cast<char>(lo | (hi << 4));
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("failed writing cache: " + path.string());
}

FactorCounts load_factor_counts(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache: " + path.string());
  std::array<char, 5> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("bad cache header: " + path.string());
  std::array<unsigned char, 8> len{};
  in.read(reinterpret_cast<char*>(len.data()), len.size());
  std::uint64_t n_max = 0;
  for (int i = 0; i < 8; ++i) n_max |= static_cast<std::uint64_t>(len[i]) << (8 * i);
  if (!in || n_max == 0 || n_max > kMaxSieve) {
    throw std::runtime_error("bad cache length: " + path.string());
  }
  std::vector<char> buf(n_max);
  in.read(buf.data(), static_cast<std::streamsize>(n_max));
  if (!in) throw std::runtime_error("truncated cache: " + path.string());
  FactorCounts fc;
  fc.n_max = n_max;
  fc.omega.assign(n_max + 1, 0);
  fc.big_omega.assign(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto b = static_cast<unsigned char>(buf[n - 1]);
    fc.omega[n] = b & 0x0f;
    fc.big_omega[n] = b >> 4;
    if (fc.big_omega[n] == 15) fc.big_omega_saturated = true;
  }
  return fc;
}

FactorCounts cached_factor_counts(std::uint64_t n_max, const std::filesystem::path& cache_dir) {
  if (cache_dir.empty()) return sieve_factor_counts(n_max);
  const auto path = cache_dir / ("factor_counts_" + std::to_string(n_max) + ".bin");
  if (std::filesystem::exists(path)) {
    try {
      FactorCounts fc = load_factor_counts(path);
      if (fc.n_max == n_max) return fc;
    } catch (const std::runtime_error&) {
    }
  }
  FactorCounts fc = sieve_factor_counts(n_max);
  std::filesystem::create_directories(cache_dir);
  save_factor_counts(fc, path);
  return fc;
}

EulerExpansion euler_expansion(EulerKind kind, int order, std::uint64_t prime_cutoff) {
  require(prime_cutoff >= 100'000, "prime cutoff must be at least 1e5");
  return euler_expansion(kind, order, PrimeTable(prime_cutoff));
}

EulerExpansion euler_expansion(EulerKind kind, int order, const PrimeTable& table) {
  require(order >= 1 && order <= kMaxEulerOrder, "Euler expansion order must lie in [1, 6]");
  require(table.limit() >= 100'000, "prime cutoff must be at least 1e5");
  const auto n = static_cast<std::size_t>(order);
  const double cutoff = static_cast<double>(table.limit());

  std::vector<CompensatedSum> sums(n + 1);
  for (const std::uint32_t q32 : table.primes()) {
    const double q = q32;
    const double base = kind == EulerKind::kPhi1 ? q : q - 1.0;
    sums[1] += 1.0 / base + std::log1p(-1.0 / q);
    double pw = 1.0 / base;
    for (std::size_t k = 2; k <= n; ++k) {
      pw /= base;
      sums[k] += pw;
    }
  }

  EulerExpansion e;
  e.kind = kind;
  e.prime_cutoff = table.limit();
  e.log_coeffs.assign(n + 1, 0.0);
  std::vector<double> err(n + 1, 0.0);
  const double t2 = tail_estimate(2, cutoff);
  // The k = 1 summand is -q^{-2}/2 + O(q^{-3}) for Phi1 and +q^{-2}/2 + O(q^{-3}) for Phi2.
  const double tail1 = kind == EulerKind::kPhi1 ? -0.5 * t2 : 0.5 * t2;
  e.log_coeffs[1] = kEulerGamma + sums[1].value() + tail1;
  err[1] = kTailFactor * t2;
  for (std::size_t k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double tk = tail_estimate(static_cast<int>(k), cutoff);
    const double prime_sum = sums[k].value() + tk;
    const double sign = k % 2 == 0 ? 1.0 : -1.0;  // (-1)^k
    e.log_coeffs[k] = kind == EulerKind::kPhi1 ? -sign * (kZeta[k] + prime_sum) / kd
                                               : (-sign * kZeta[k] + prime_sum) / kd;
    err[k] = kTailFactor * tk / kd;
  }
  e.coeffs = series::exp(e.log_coeffs, n);

  std::vector<double> maj(n + 1, 0.0), maj_err(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    maj[k] = std::abs(e.log_coeffs[k]);
    maj_err[k] = maj[k] + err[k];
  }
  const auto lo = series::exp(maj, n);
  const auto hi = series::exp(maj_err, n);
  e.coeff_error.assign(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    e.coeff_error[k] = hi[k] - lo[k];
    e.tail_error = std::max(e.tail_error, e.coeff_error[k]);
  }
  return e;
}

ErdosKacParams erdos_kac_params(DivisorKind kind, std::uint64_t prime_cutoff) {
  return erdos_kac_params(kind, euler_expansion(euler_kind_for(kind), 2, prime_cutoff));
}

ErdosKacParams erdos_kac_params(DivisorKind kind, const EulerExpansion& expansion) {
  require(expansion.kind == euler_kind_for(kind),
          "omega pairs with phi1 and big_omega with phi2");
  require(expansion.coeffs.size() >= 3, "need Euler coefficients through order 2");
  constexpr double kRef = 1000.0;
  const double at1 = expansion.coeffs[1];
  const double at2 = expansion.coeffs[2];
  ErdosKacParams out;
  out.kind = kind;
  out.a1 = at1;
  out.a2 = at2 + 0.5 * at1;
  out.x = out.a1 - (2.0 * out.a2 - out.a1 * out.a1);
  const TranslatedParams tp = translated_poisson_params(kRef, out.a1, out.a2);
  out.m = tp.m;
  out.p = tp.p;
  out.offset = tp.lambda_prime - kRef;
  out.tail_error = 2.0 * std::abs(at1) * expansion.coeff_error[1] + 2.0 * expansion.coeff_error[2];
  return out;
}

SignedMeasure empirical_counts(const FactorCounts& counts, std::uint64_t n, DivisorKind kind) {
  require(n >= 1 && n <= counts.n_max, "n must lie in [1, n_max]");
  const auto& v = kind == DivisorKind::kOmega ? counts.omega : counts.big_omega;
  std::array<std::uint64_t, 64> hist{};
  for (std::uint64_t k = 1; k <= n; ++k) ++hist[v[k]];
  std::vector<double> w(hist.size());
  for (std::size_t j = 0; j < hist.size(); ++j) {
    w[j] = static_cast<double>(hist[j]) / static_cast<double>(n);
  }
  return SignedMeasure(0, std::move(w));
}

std::vector<ErdosKacRow> erdos_kac_compare(const FactorCounts& counts,
                                           std::span<const std::uint64_t> ladder, int r,
                                           DivisorKind kind, const EulerExpansion& expansion) {
  require(r == 1 || r == 2, "order r must be 1 or 2");
  require(static_cast<int>(expansion.coeffs.size()) > r, "Euler expansion order too small");
  const ErdosKacParams params = erdos_kac_params(kind, expansion);
  const auto poisson = poisson_family();
  std::vector<ErdosKacRow> rows;
  for (const std::uint64_t n : ladder) {
    require(n >= 10'000, "ladder values must be at least 1e4");
    const SignedMeasure emp = empirical_counts(counts, n, kind);
    ErdosKacRow row;
    row.n = n;
    row.loglog = std::log(std::log(static_cast<double>(n)));
    row.empirical_mean = emp.mean();

    const SignedMeasure po = poisson_measure(row.loglog);
    row.poisson_d_loc = distance(DistanceKind::kLocal, emp, po);
    row.poisson_d_k = distance(DistanceKind::kKolmogorov, emp, po);
    row.poisson_tv = distance(DistanceKind::kTotalVariation, emp, po);

    const SignedMeasure nu1 = build_nu({row.loglog, {expansion.coeffs[1]}});
    row.nu1_d_loc = distance(DistanceKind::kLocal, emp, nu1);
    row.nu1_d_k = distance(DistanceKind::kKolmogorov, emp, nu1);
    row.nu1_tv = distance(DistanceKind::kTotalVariation, emp, nu1);
    if (r >= 2) {
      const SignedMeasure nu2 = build_nu({row.loglog, {expansion.coeffs[1], expansion.coeffs[2]}});
      row.nu2_d_loc = distance(DistanceKind::kLocal, emp, nu2);
      row.nu2_d_k = distance(DistanceKind::kKolmogorov, emp, nu2);
      row.nu2_tv = distance(DistanceKind::kTotalVariation, emp, nu2);
    }

    const double lp = row.loglog + params.offset;
    require(lp > 0.0, "log log n + offset must be positive for the translated law");
    const SignedMeasure q = q_measure(*poisson, {lp, params.m, params.p, std::nullopt});
    row.q_d_loc = distance(DistanceKind::kLocal, emp, q);
    row.q_d_k = distance(DistanceKind::kKolmogorov, emp, q);
    row.q_tv = distance(DistanceKind::kTotalVariation, emp, q);
    rows.push_back(row);
  }
  return rows;
}

std::string to_string(DivisorKind kind) {
  return kind == DivisorKind::kOmega ? "omega" : "big_omega";
}

std::string to_string(EulerKind kind) { return kind == EulerKind::kPhi1 ? "phi1" : "phi2"; }

}  // namespace modx
