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

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modx/convolution_experiment.hpp"
#include "modx/error_bounds.hpp"
#include "modx/errors.hpp"
#include "modx/expansion_coeffs.hpp"
#include "modx/families.hpp"
#include "modx/independent_sums.hpp"
#include "modx/measure_io.hpp"
#include "modx/poisson_charlier.hpp"
#include "modx/primes.hpp"
#include "table.hpp"

namespace {

using modx::PreconditionError;
using modx::tools::Cell;
using modx::tools::Table;
using ojson = nlohmann::ordered_json;

struct Common {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(c.output, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + c.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit_json(const Common& c, const ojson& j) { emit(c, j.dump(2)); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "1:0.7,2:0.3" -> measure with mass 0.7 at 1 and 0.3 at 2.
modx::SignedMeasure parse_jumps(const std::string& spec) {
  std::map<std::int64_t, double> mass;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw PreconditionError("jumps entries must be j:mass");
    try {
      mass[std::stoll(item.substr(0, colon))] += std::stod(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw PreconditionError("cannot parse jumps entry: " + item);
    }
  }
  if (mass.empty()) throw PreconditionError("jumps must not be empty");
  const std::int64_t lo = mass.begin()->first;
  const std::int64_t hi = mass.rbegin()->first;
  std::vector<double> w(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (const auto& [j, m] : mass) w[static_cast<std::size_t>(j - lo)] = m;
  return modx::SignedMeasure(lo, std::move(w));
}

std::shared_ptr<const modx::DiscreteFamily> make_family(const std::string& name,
                                                        const std::string& jumps) {
  if (name == "poisson") return modx::poisson_family();
  if (name == "bessel") return modx::bessel_family();
  if (name == "compound_poisson") {
    if (jumps.empty()) throw PreconditionError("compound_poisson needs --jumps");
    return modx::compound_poisson_family(parse_jumps(jumps));
  }
  throw PreconditionError("unknown family: " + name);
}

std::string measure_text(const Common& c, const modx::SignedMeasure& m) {
  return c.format == "csv" ? modx::to_csv(m) : modx::to_json(m, 2);
}

std::string report_text(const Common& c, const modx::BoundReport& r) {
  if (c.format != "csv") return modx::to_json(r, 2);
  Table t{{"quantity", "value"}, {}};
  t.add({std::string("loc_bound"), r.loc_bound});
  t.add({std::string("kolmogorov_bound"), r.kolmogorov_bound});
  if (r.tv_bound) t.add({std::string("tv_bound"), *r.tv_bound});
  if (r.interval_slope) t.add({std::string("interval_slope"), *r.interval_slope});
  for (const auto& [k, v] : r.constants_used) t.add({k, v});
  return modx::tools::to_csv(t);
}

Cell opt(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell(std::monostate{});
}

// ---- expand ---------------------------------------------------------------

struct ExpandArgs {
  std::string family = "poisson";
  std::string jumps;
  double lambda = 0.0;
  std::vector<double> coeffs;
  std::string basis = "w";
};

void run_expand(const Common& c, const ExpandArgs& a) {
  modx::ExpansionCoeffs e{a.basis == "theta" ? modx::Basis::kThetaPower : modx::Basis::kWPower,
                          a.coeffs};
  if (e.basis == modx::Basis::kThetaPower) e = modx::to_w_basis(e);
  if (a.family == "poisson") {
    emit(c, measure_text(c, modx::build_nu({a.lambda, e.coeffs})));
    return;
  }
  const auto fam = make_family(a.family, a.jumps);
  emit(c, measure_text(c, modx::family_nu(*fam, a.lambda, e.coeffs)));
}

// ---- bounds ---------------------------------------------------------------

struct BoundArgs {
  std::string input;
  std::vector<double> gamma, t;
  std::optional<double> rho, epsilon, eta, theta0, gamma_chi, gamma3;
  std::string mu, nu;
  bool probability_mu = false;
  std::vector<double> a, a_prime;
  double lambda = 0.0;
  std::optional<double> lambda_prime;
  double k_plus_g = 0.0;
  int r = 0;
  double a_bar = 1.0;
};

modx::BoundInputs bound_inputs(const BoundArgs& a) {
  modx::BoundInputs in;
  if (!a.input.empty()) {
    ojson j;
    try {
      j = ojson::parse(read_text(a.input));
    } catch (const ojson::exception& e) {
      throw PreconditionError(std::string("bad bound inputs JSON: ") + e.what());
    }
    static const std::set<std::string> kKeys = {"gamma_terms", "rho",       "epsilon", "eta",
                                                "theta0",      "gamma_chi", "gamma3"};
    for (const auto& [k, v] : j.items()) {
      if (!kKeys.count(k)) throw PreconditionError("unknown bound input key: " + k);
    }
    try {
      for (const auto& g : j.value("gamma_terms", ojson::array())) {
        in.gamma_terms.push_back({g.at("gamma").get<double>(), g.at("t").get<double>()});
      }
      in.rho = j.value("rho", in.rho);
      in.epsilon = j.value("epsilon", in.epsilon);
      in.eta = j.value("eta", in.eta);
      in.theta0 = j.value("theta0", in.theta0);
      in.gamma_chi = j.value("gamma_chi", in.gamma_chi);
      in.gamma3 = j.value("gamma3", in.gamma3);
    } catch (const ojson::exception& e) {
      throw PreconditionError(std::string("bad bound inputs JSON: ") + e.what());
    }
  }
  if (!a.gamma.empty()) {
    if (a.gamma.size() != a.t.size()) throw PreconditionError("--gamma and --t must pair up");
    in.gamma_terms.clear();
    for (std::size_t i = 0; i < a.gamma.size(); ++i) in.gamma_terms.push_back({a.gamma[i], a.t[i]});
  }
  if (a.rho) in.rho = *a.rho;
  if (a.epsilon) in.epsilon = *a.epsilon;
  if (a.eta) in.eta = *a.eta;
  if (a.theta0) in.theta0 = *a.theta0;
  if (a.gamma_chi) in.gamma_chi = *a.gamma_chi;
  if (a.gamma3) in.gamma3 = *a.gamma3;
  return in;
}

void run_bounds(const Common& c, const std::string& kind, const BoundArgs& a) {
  if (kind == "alpha") {
    if (a.t.size() != 1) throw PreconditionError("alpha needs exactly one --t");
    const auto k = modx::alpha_constants(a.t.front());
    modx::BoundReport r;
    r.constants_used = {{"alpha1", k.alpha1},
                        {"alpha2", k.alpha2},
                        {"alpha1_prime", k.alpha1_prime},
                        {"alpha2_prime", k.alpha2_prime},
                        {"m_t", modx::normal_abs_moment(a.t.front())}};
    emit(c, report_text(c, r));
  } else if (kind == "th0") {
    emit(c, report_text(c, modx::bound_th0(bound_inputs(a))));
  } else if (kind == "th0-prime") {
    emit(c, report_text(c, modx::bound_th0_prime(bound_inputs(a))));
  } else if (kind == "th0-tv") {
    emit(c, report_text(c, modx::bound_th0_tv(bound_inputs(a))));
  } else if (kind == "cor0") {
    if (a.mu.empty() || a.nu.empty()) throw PreconditionError("cor0 needs --mu and --nu");
    const auto mu = modx::measure_from_json(read_text(a.mu));
    const auto nu = modx::measure_from_json(read_text(a.nu));
    emit(c, report_text(c, modx::bound_cor0(bound_inputs(a), mu, nu, a.probability_mu)));
  } else if (kind == "newpars") {
    emit(c, report_text(c, a.lambda_prime
                               ? modx::bound_newpars(a.a, a.a_prime, a.lambda, *a.lambda_prime)
                               : modx::bound_newpars_coeffs(a.a, a.a_prime, a.lambda)));
  } else if (kind == "th1") {
    if (a.t.size() != 1) throw PreconditionError("th1 needs exactly one --t");
    emit(c, report_text(c, modx::bound_th1(a.k_plus_g, a.lambda, a.t.front())));
  } else if (kind == "th2") {
    if (a.t.size() != 1) throw PreconditionError("th2 needs exactly one --t");
    emit(c, report_text(c, modx::bound_th2(a.k_plus_g, a.lambda, a.t.front(), a.r, a.a_bar)));
  } else {
    throw PreconditionError("unknown bound kind: " + kind);
  }
}

// ---- translate ------------------------------------------------------------

struct TranslateArgs {
  std::string method = "translated-poisson";
  double lambda = 0.0, a1 = 0.0, a2 = 0.0;
  std::string family = "poisson";
  std::string jumps;
  double mean = 0.0, var = 0.0;
};

void run_translate(const Common& c, const TranslateArgs& a) {
  modx::TranslatedParams p;
  if (a.method == "mean") {
    p = modx::poisson_mean_match(a.lambda, a.a1);
  } else if (a.method == "translated-poisson") {
    p = modx::translated_poisson_params(a.lambda, a.a1, a.a2);
  } else if (a.method == "general") {
    p = modx::general_params_solver(*make_family(a.family, a.jumps), a.mean, a.var);
  } else {
    throw PreconditionError("unknown translate method: " + a.method);
  }
  Table t{{"lambda_prime", "m", "p", "lambda_zero"}, {}};
  t.add({p.lambda_prime, static_cast<std::int64_t>(p.m), p.p, opt(p.lambda_zero)});
  if (c.format == "csv") {
    emit(c, modx::tools::to_csv(t));
  } else {
    emit_json(c, modx::tools::to_json_value(t).at(0));
  }
}

// ---- convolve-demo --------------------------------------------------------

struct ConvolveArgs {
  int s = 4;
  int r = 0;
  std::vector<double> lambdas = {4, 16, 64, 256};
};

void run_convolve(const Common& c, const ConvolveArgs& a) {
  const auto rep = modx::convolution_experiment(a.s, a.lambdas, a.r);
  Table t{{"lambda", "d_loc", "d_k", "tv", "bound_loc", "bound_k", "poisson_d_k",
           "translated_d_k"},
          {}};
  for (const auto& row : rep.rows) {
    t.add({row.lambda, row.d_loc, row.d_k, row.tv, row.bound_loc, row.bound_k,
           row.poisson_d_k, opt(row.translated_d_k)});
  }
  if (c.format == "csv") {
    emit(c, modx::tools::to_csv(t));
    return;
  }
  ojson j;
  j["s"] = rep.s;
  j["r"] = rep.r;
  j["K"] = rep.K;
  j["delta"] = rep.delta;
  j["d_k_slope"] = rep.d_k_slope;
  j["rows"] = modx::tools::to_json_value(t);
  emit_json(c, j);
}

// ---- sums-demo ------------------------------------------------------------

struct SumsArgs {
  double p = 0.5;
  std::vector<int> ns = {25, 50, 100, 200};
  int r = 2;
  bool center = false;
};

void run_sums(const Common& c, const SumsArgs& a) {
  const auto rows = modx::bernoulli_sums_experiment(a.p, a.ns, a.r, a.center);
  Table t{{"n", "shift", "lambda", "poisson_d_k", "nu_d_loc", "nu_d_k", "nu_tv"}, {}};
  for (const auto& row : rows) {
    t.add({static_cast<std::int64_t>(row.n), row.shift, row.lambda, row.poisson_d_k,
           row.nu_d_loc, row.nu_d_k, row.nu_tv});
  }
  if (c.format == "csv") {
    emit(c, modx::tools::to_csv(t));
    return;
  }
  ojson j;
  j["p"] = a.p;
  j["r"] = a.r;
  j["center"] = a.center;
  j["rows"] = modx::tools::to_json_value(t);
  emit_json(c, j);
}

// ---- primes ---------------------------------------------------------------

struct PrimesArgs {
  std::uint64_t n_max = 10'000'000;
  std::uint64_t cutoff = 10'000'000;
  std::string kind = "omega";
  int r = 2;
  int order = 2;
  std::vector<std::uint64_t> ladder;
};

modx::DivisorKind divisor_kind(const std::string& k) {
  if (k == "omega") return modx::DivisorKind::kOmega;
  if (k == "big_omega") return modx::DivisorKind::kBigOmega;
  throw PreconditionError("kind must be omega or big_omega");
}

std::filesystem::path cache_dir() {
  const char* env = std::getenv("MODX_CACHE_DIR");
  return env ? std::filesystem::path(env) : std::filesystem::path();
}

void run_primes_sieve(const Common& c, const PrimesArgs& a) {
  const auto fc = modx::cached_factor_counts(a.n_max, cache_dir());
  Table t{{"count", "omega_n", "big_omega_n"}, {}};
  std::vector<std::int64_t> ho(64, 0), hb(64, 0);
  std::int64_t sum_omega = 0, sum_big = 0;
  for (std::uint64_t n = 1; n <= fc.n_max; ++n) {
    ++ho[fc.omega[n]];
    ++hb[fc.big_omega[n]];
    sum_omega += fc.omega[n];
    sum_big += fc.big_omega[n];
  }
  for (std::size_t k = 0; k < ho.size(); ++k) {
    if (ho[k] == 0 && hb[k] == 0) continue;
    t.add({static_cast<std::int64_t>(k), ho[k], hb[k]});
  }
  if (c.format == "csv") {
    emit(c, modx::tools::to_csv(t));
    return;
  }
  ojson j;
  j["n_max"] = fc.n_max;
  j["sum_omega"] = sum_omega;
  j["sum_big_omega"] = sum_big;
  j["big_omega_saturated"] = fc.big_omega_saturated;
  j["histogram"] = modx::tools::to_json_value(t);
  emit_json(c, j);
}

void run_primes_constants(const Common& c, const PrimesArgs& a) {
  const auto kind = divisor_kind(a.kind);
  const auto ek = kind == modx::DivisorKind::kOmega ? modx::EulerKind::kPhi1
                                                     : modx::EulerKind::kPhi2;
  const auto e = modx::euler_expansion(ek, std::max(a.order, 2), a.cutoff);
  const auto p = modx::erdos_kac_params(kind, e);
  if (c.format == "csv") {
    Table t{{"quantity", "value"}, {}};
    for (std::size_t k = 1; k < e.coeffs.size(); ++k) {
      t.add({"atilde" + std::to_string(k), e.coeffs[k]});
    }
    t.add({std::string("log_coeff1"), e.log_coeffs[1]});
    if (ek == modx::EulerKind::kPhi1) t.add({std::string("B1"), e.log_coeffs[1]});
    t.add({std::string("a1"), p.a1});
    t.add({std::string("a2"), p.a2});
    t.add({std::string("x"), p.x});
    t.add({std::string("m"), static_cast<std::int64_t>(p.m)});
    t.add({std::string("p"), p.p});
    t.add({std::string("offset"), p.offset});
    t.add({std::string("tail_error"), e.tail_error});
    emit(c, modx::tools::to_csv(t));
    return;
  }
  ojson j;
  j["kind"] = a.kind;
  j["expansion"] = modx::to_string(ek);
  j["prime_cutoff"] = a.cutoff;
  j["log_coeff1"] = e.log_coeffs[1];
  if (ek == modx::EulerKind::kPhi1) j["B1"] = e.log_coeffs[1];
  j["atilde"] = std::vector<double>(e.coeffs.begin() + 1, e.coeffs.end());
  j["coeff_error"] = std::vector<double>(e.coeff_error.begin() + 1, e.coeff_error.end());
  j["a1"] = p.a1;
  j["a2"] = p.a2;
  j["x"] = p.x;
  j["m"] = p.m;
  j["p"] = p.p;
  j["offset"] = p.offset;
  j["tail_error"] = e.tail_error;
  emit_json(c, j);
}

void run_primes_compare(const Common& c, const PrimesArgs& a) {
  const auto kind = divisor_kind(a.kind);
  std::vector<std::uint64_t> ladder = a.ladder;
  if (ladder.empty()) {
    for (std::uint64_t n = 10'000; n <= a.n_max; n *= 10) ladder.push_back(n);
    if (ladder.empty() || ladder.back() != a.n_max) ladder.push_back(a.n_max);
  }
  for (auto n : ladder) {
    if (n > a.n_max) throw PreconditionError("ladder values must not exceed --n-max");
  }
  const auto fc = modx::cached_factor_counts(a.n_max, cache_dir());
  if (kind == modx::DivisorKind::kBigOmega && fc.big_omega_saturated) {
    std::cerr << "warning: cached Omega values are capped at 15\n";
  }
  const auto ek = kind == modx::DivisorKind::kOmega ? modx::EulerKind::kPhi1
                                                     : modx::EulerKind::kPhi2;
  const auto e = modx::euler_expansion(ek, 2, a.cutoff);
  const auto rows = modx::erdos_kac_compare(fc, ladder, a.r, kind, e);
  Table t{{"n", "loglog", "empirical_mean", "poisson_d_loc", "poisson_d_k", "poisson_tv",
           "nu1_d_loc", "nu1_d_k", "nu1_tv", "nu2_d_loc", "nu2_d_k", "nu2_tv", "q_d_loc",
           "q_d_k", "q_tv"},
          {}};
  for (const auto& row : rows) {
    t.add({static_cast<std::int64_t>(row.n), row.loglog, row.empirical_mean, row.poisson_d_loc,
           row.poisson_d_k, row.poisson_tv, row.nu1_d_loc, row.nu1_d_k, row.nu1_tv,
           opt(row.nu2_d_loc), opt(row.nu2_d_k), opt(row.nu2_tv), row.q_d_loc, row.q_d_k,
           row.q_tv});
  }
  if (c.format == "csv") {
    emit(c, modx::tools::to_csv(t));
    return;
  }
  ojson j;
  j["kind"] = a.kind;
  j["r"] = a.r;
  j["prime_cutoff"] = a.cutoff;
  j["rows"] = modx::tools::to_json_value(t);
  emit_json(c, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modx: Poisson-Charlier expansions and explicit error bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", common.output, "Write output to this file instead of stdout");
  app.add_option("--seed", common.seed, "Seed for randomized corpora");

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Build nu_r from expansion coefficients");
  expand->add_option("--family", ex.family)
      ->check(CLI::IsMember({"poisson", "bessel", "compound_poisson"}));
  expand->add_option("--jumps", ex.jumps, "Jump law for compound_poisson, e.g. 1:0.7,2:0.3");
  expand->add_option("--lambda", ex.lambda)->required();
  expand->add_option("--atilde,--coeffs", ex.coeffs)->delimiter(',');
  expand->add_option("--basis", ex.basis)->check(CLI::IsMember({"w", "theta"}));

  BoundArgs ba;
  std::string bound_kind;
  auto* bounds = app.add_subcommand("bounds", "Evaluate an explicit error bound");
  bounds->add_option("kind", bound_kind)
      ->required()
      ->check(CLI::IsMember({"th0", "th0-prime", "th0-tv", "cor0", "newpars", "th1", "th2",
                             "alpha"}));
  bounds->add_option("--input", ba.input, "JSON file with bound inputs");
  bounds->add_option("--gamma", ba.gamma)->delimiter(',');
  bounds->add_option("--t", ba.t)->delimiter(',');
  bounds->add_option("--rho", ba.rho);
  bounds->add_option("--epsilon", ba.epsilon);
  bounds->add_option("--eta", ba.eta);
  bounds->add_option("--theta0", ba.theta0);
  bounds->add_option("--gamma-chi", ba.gamma_chi);
  bounds->add_option("--gamma3", ba.gamma3);
  bounds->add_option("--mu", ba.mu, "Measure JSON file (cor0)");
  bounds->add_option("--nu", ba.nu, "Measure JSON file (cor0)");
  bounds->add_flag("--probability-mu", ba.probability_mu);
  bounds->add_option("--a", ba.a)->delimiter(',');
  bounds->add_option("--a-prime", ba.a_prime)->delimiter(',');
  bounds->add_option("--lambda", ba.lambda);
  bounds->add_option("--lambda-prime", ba.lambda_prime);
  bounds->add_option("--k-plus-g", ba.k_plus_g);
  bounds->add_option("--r", ba.r);
  bounds->add_option("--a-bar", ba.a_bar);

  TranslateArgs ta;
  auto* translate = app.add_subcommand("translate", "Solve for translated parameters");
  translate->add_option("--method", ta.method)
      ->check(CLI::IsMember({"mean", "translated-poisson", "general"}));
  translate->add_option("--lambda", ta.lambda);
  translate->add_option("--a1", ta.a1);
  translate->add_option("--a2", ta.a2);
  translate->add_option("--family", ta.family)
      ->check(CLI::IsMember({"poisson", "bessel", "compound_poisson"}));
  translate->add_option("--jumps", ta.jumps);
  translate->add_option("--mean", ta.mean);
  translate->add_option("--var", ta.var);

  ConvolveArgs ca;
  auto* convolve = app.add_subcommand("convolve-demo", "Po(lambda) + Y_s experiment");
  convolve->add_option("--s", ca.s);
  convolve->add_option("--r", ca.r);
  convolve->add_option("--lambdas", ca.lambdas)->delimiter(',');

  SumsArgs sa;
  auto* sums = app.add_subcommand("sums-demo", "Sums of i.i.d. Bernoulli summands");
  sums->add_option("--p", sa.p);
  sums->add_option("--n", sa.ns)->delimiter(',');
  sums->add_option("--r", sa.r);
  sums->add_flag("--center", sa.center, "Translate summands so |sum kappa_2| <= 1/2");

  PrimesArgs pa;
  auto* primes = app.add_subcommand("primes", "Prime divisor counts");
  primes->require_subcommand(1);
  primes->fallthrough();
  auto* sieve = primes->add_subcommand("sieve", "Sieve omega and Omega");
  sieve->add_option("--n-max", pa.n_max);
  auto* constants = primes->add_subcommand("constants", "Euler-product constants");
  constants->add_option("--kind", pa.kind)->check(CLI::IsMember({"omega", "big_omega"}));
  constants->add_option("--cutoff", pa.cutoff);
  constants->add_option("--order", pa.order);
  auto* compare = primes->add_subcommand("compare", "Compare the empirical law with approximations");
  compare->add_option("--n-max", pa.n_max);
  compare->add_option("--kind", pa.kind)->check(CLI::IsMember({"omega", "big_omega"}));
  compare->add_option("--r", pa.r);
  compare->add_option("--cutoff", pa.cutoff);
  compare->add_option("--ladder", pa.ladder)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*expand) run_expand(common, ex);
    else if (*bounds) run_bounds(common, bound_kind, ba);
    else if (*translate) run_translate(common, ta);
    else if (*convolve) run_convolve(common, ca);
    else if (*sums) run_sums(common, sa);
    else if (*sieve) run_primes_sieve(common, pa);
    else if (*constants) run_primes_constants(common, pa);
    else if (*compare) run_primes_compare(common, pa);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
