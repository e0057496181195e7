#include <cmath>
#include <fstream>
#include <random>

#include "cli/cli.hpp"
#include "polysieve/algebra/finite_field.hpp"
#include "polysieve/coeffreduce/reduce.hpp"
#include "polysieve/counting/counting.hpp"
#include "polysieve/dualgeom/census.hpp"
#include "polysieve/expsum/classify.hpp"
#include "polysieve/expsum/direct.hpp"
#include "polysieve/expsum/exp_sum_table.hpp"
#include "polysieve/expsum/weil.hpp"
#include "polysieve/sieve/sieve_bound.hpp"

namespace polysieve::cli {

namespace {

using structured::StructuredF;

Report header(const RunConfig& c, const StructuredF& F) {
  Report r;
  r["command"] = c.command;
  r["instance"] = c.instance;
  r["shape"] = {{"m", F.m()}, {"d", F.d()}, {"e", F.e()}, {"n", F.n()}};
  r["F"] = F.polynomial().to_string();
  return r;
}

// Attaches the checks and the overall verdict.
void finish(Report& r, const Report& checks) {
  bool pass = true;
  for (const auto& ch : checks) pass = pass && ch["pass"].get<bool>();
  r["checks"] = checks;
  r["verdict"] = pass ? "pass" : "fail";
}

long long require_box(const RunConfig& c, double min) {
  if (!c.B) throw UsageError(c.command + " needs --B");
  if (*c.B < min || *c.B != std::floor(*c.B)) throw UsageError("--B must be an integer >= " + std::to_string(int(min)));
  return static_cast<long long>(*c.B);
}

std::uint64_t require_prime(const RunConfig& c) {
  if (c.p < 3 || !algebra::is_prime(c.p)) throw UsageError("--p must be an odd prime");
  return c.p;
}

std::vector<long long> require_u(const RunConfig& c, int n) {
  if (c.u.size() != static_cast<std::size_t>(n)) throw UsageError("--u needs " + std::to_string(n) + " entries");
  return c.u;
}

std::string big(const BigInt& v) { return v.str(); }

Report field_point(const algebra::FiniteField& K, const algebra::ProjectivePoint& pt) {
  Report out = Report::array();
  for (auto x : pt) out.push_back(K.coeffs(x));
  return out;
}

expsum::Classifier make_classifier(const StructuredF& F, std::uint64_t p, unsigned k_max) {
  try {
    return expsum::Classifier(F, p, k_max);
  } catch (const expsum::BadReductionError&) {
    throw UsageError("p = " + std::to_string(p) + " is a prime of bad reduction for this instance");
  }
}

Report type_breakdown(const sieve::TypeBreakdown& t) {
  Report out;
  const char* names[] = {"zero", "good", "bad"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[std::string(names[i]) + "-" + names[j]] = t[i][j];
  return out;
}

}  // namespace

Report cmd_count(const RunConfig& c) {
  const auto F = resolve_instance(c.instance);
  const long long B = require_box(c, 0);
  Report r = header(c, F);
  r["B"] = B;
  const auto N = counting::count_N(F, {B, F.n()});
  r["N"] = exact(N);
  Report checks = Report::array();
  if (B >= 1) {
    const sieve::SmoothWeightSpec w{double(B), c.M > 0 ? c.M : 6};
    const auto S = counting::count_S(F, {B, F.n()}, w);
    r["S"] = claim(S.value, S.error_bound, "compensated summation bound");
    r["S_inner"] = exact(S.inner);
    checks.push_back(check("N <= S", "smoothed count dominates the box count", double(N) <= S.value + S.error_bound));
  }
  finish(r, checks);
  return r;
}

Report cmd_sieve(const RunConfig& c) {
  const auto F = resolve_instance(c.instance);
  if (!c.B) throw UsageError("sieve needs --B");
  sieve::SieveParameters params;
  params.mode = c.mode == "paper" ? sieve::SieveMode::Paper : sieve::SieveMode::Desk;
  if (params.mode == sieve::SieveMode::Desk && c.kappa) throw UsageError("--kappa applies to paper mode; use --Q");
  if (c.Q) params.Q = *c.Q;
  if (params.mode == sieve::SieveMode::Paper && c.Q) throw UsageError("paper mode derives Q; use --kappa");
  params.kappa = c.kappa;
  params.m = c.m;
  params.k_max = c.k_max;
  params.alpha = c.alpha;
  params.M = c.M;
  params.trunc = c.trunc;
  const auto rep = sieve::sieve_bound(F, *c.B, params);

  Report r = header(c, F);
  r["mode"] = c.mode;
  r["B"] = rep.B;
  r["Q"] = rep.Q;
  r["Q_rule"] = params.mode == sieve::SieveMode::Desk ? "given" : (c.kappa ? "B^kappa" : "B^{n/(n+1)} (log B)^{1/(n+1)}");
  r["kappa"] = rep.kappa;
  r["alpha"] = rep.alpha;
  r["M"] = rep.M;
  r["tail_M"] = rep.tail_M;
  r["cube_half_width"] = rep.cube_half_width;
  r["smooth_prime"] = rep.smooth_prime;
  r["sieving_set"] = {{"m", rep.sieving_set.m}, {"primes", rep.sieving_set.primes},
                      {"rejected", rep.sieving_set.rejected}, {"P", rep.sieving_set.P()}};
  r["symbolic"] = {{"B^n/P", rep.term_Bn_over_P}, {"Q^n", rep.term_Qn}, {"B^n/Q", rep.term_Bn_over_Q}};
  r["warnings"] = rep.warnings;
  Report checks = Report::array();
  if (params.mode == sieve::SieveMode::Desk) {
    r["N"] = exact(rep.N);
    r["S"] = claim(rep.S, rep.S_error, "compensated summation bound");
    r["S_inner"] = exact(rep.S_inner);
    r["S1"] = claim(rep.S1, rep.S_error, "compensated summation bound");
    r["S2"] = claim(rep.S2, rep.S_error, "compensated summation bound");
    r["S3"] = claim(rep.S3, rep.S_error, "compensated summation bound");
    r["weight_mass"] = rep.weight_mass;
    r["ratio_S_over_terms"] = rep.ratio;
    r["per_k"] = {{"checked", rep.per_k_checked}, {"violations", rep.per_k_violations},
                  {"min_slack", rep.per_k_min_slack}};
    r["chain"] = {{"P_eff", rep.P_eff},
                  {"lhs", rep.chain_lhs},
                  {"rhs", claim(rep.chain_rhs, rep.chain_error, "compensated summation bound")},
                  {"rhs_from_T", rep.chain_rhs_from_T}};
    Report pairs = Report::array();
    for (const auto& pr : rep.pairs) {
      Report e;
      e["p"] = pr.p;
      e["q"] = pr.q;
      e["T_direct"] = claim(pr.direct.value, pr.direct.error, "compensated summation bound");
      if (pr.poisson) {
        e["T_poisson"] = claim(pr.poisson->value, pr.poisson->tail_bound + pr.poisson->err_budget,
                               "Fourier tail bound plus table and quadrature budget");
        e["trunc"] = pr.poisson->trunc;
        e["terms"] = pr.poisson->terms;
        e["imag"] = pr.poisson->imag;
        e["agrees"] = pr.poisson_agrees;
      }
      e["fourier_abs_sum"] = pr.fourier_abs_sum;
      e["fourier_ratio"] = pr.fourier_ratio;
      pairs.push_back(e);
    }
    r["pairs"] = pairs;
    r["poisson_by_type"] = type_breakdown(rep.poisson_by_type);
    r["poisson_abs_by_type"] = type_breakdown(rep.poisson_abs_by_type);
    r["bad_bad_over_Qn"] = rep.bad_bad_over_Qn;
    r["zero_zero_over_BnQ"] = rep.zero_zero_over_BnQ;
    r["max_fourier_ratio"] = rep.max_fourier_ratio;
    checks.push_back(check("N <= S", "polynomial sieve lemma: box count below smoothed count", rep.N_le_S));
    checks.push_back(check("per-k root lower bound", "sieve lemma proof: sum_p (nu_p - 1) >= (m-1)(P - omega(f_d(k)))",
                           rep.per_k_violations == 0));
    checks.push_back(check("P_eff^2 S <= sum_k W (sum_p (nu_p - 1))^2", "sieve lemma proof: squared sieve sum",
                           rep.chain_holds));
    checks.push_back(check("pair expansion", "squared sieve sum equals the sum of T(p, q) over all pairs",
                           rep.chain_expansion_agrees));
    checks.push_back(check("Poisson identity", "T(p, q) direct vs dual side within tail plus budget",
                           rep.poisson_all_agree));
  }
  finish(r, checks);
  return r;
}

Report cmd_expsum(const RunConfig& c) {
  const auto F = resolve_instance(c.instance);
  const auto p = require_prime(c);
  const auto classifier = make_classifier(F, p, c.k_max);
  const counting::FiberTable fib(F, p);
  const auto table = expsum::g_table(fib);
  if (!c.dump.empty()) {
    std::ofstream f(c.dump, std::ios::binary);
    if (!f) throw InputError("cannot write '" + c.dump + "'");
    expsum::write_table_binary(f, table);
  }
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<long long> d(0, static_cast<long long>(p) - 1);
  std::vector<std::vector<long long>> sample{std::vector<long long>(static_cast<std::size_t>(F.n()), 0)};
  for (std::size_t i = 0; i < c.samples; ++i) {
    std::vector<long long> u(static_cast<std::size_t>(F.n()));
    for (auto& x : u) x = d(rng);
    sample.push_back(u);
  }
  const auto weil = expsum::weil_check(table, classifier, sample);

  Report r = header(c, F);
  r["p"] = p;
  r["seed"] = c.seed;
  r["err_budget"] = table.err_budget;
  r["max_abs"] = claim(table.max_abs(), table.err_budget, "DFT error budget");
  double max_dev = 0.0;
  bool within = true;
  Report entries = Report::array();
  for (std::size_t i = 0; i < weil.entries.size(); ++i) {
    const auto& e = weil.entries[i];
    const auto direct = expsum::g_direct(fib, e.u);
    const double dev = std::abs(direct.value - e.g);
    max_dev = std::max(max_dev, dev);
    within = within && dev <= direct.error + table.err_budget;
    entries.push_back({{"u", e.u},
                       {"g_re", claim(e.g.real(), table.err_budget, "DFT error budget")},
                       {"g_im", claim(e.g.imag(), table.err_budget, "DFT error budget")},
                       {"type", expsum::to_string(e.type)},
                       {"exponent", e.exponent},
                       {"ratio", e.ratio},
                       {"ratio_half", e.ratio_half},
                       {"probable_misclassification", e.probable_misclassification}});
  }
  r["entries"] = entries;
  r["max_ratio"] = {{"zero", weil.max_ratio[0]}, {"good", weil.max_ratio[1]}, {"bad", weil.max_ratio[2]}};
  r["counts"] = {{"zero", weil.counts[0]}, {"good", weil.counts[1]}, {"bad", weil.counts[2]}};
  r["max_table_vs_direct"] = max_dev;
  Report checks = Report::array();
  checks.push_back(check("table vs direct", "DFT table against the defining sum", within));
  checks.push_back(check("good ratio ceiling", "square-root cancellation for hyperplanes not tangent mod p",
                         weil.flagged == 0));
  finish(r, checks);
  return r;
}

Report cmd_classify(const RunConfig& c) {
  const auto F = resolve_instance(c.instance);
  const auto p = require_prime(c);
  const auto u = require_u(c, F.n());
  const auto classifier = make_classifier(F, p, c.k_max);
  const auto cl = classifier.classify(u);
  Report r = header(c, F);
  r["p"] = p;
  r["u"] = u;
  r["k_max"] = c.k_max;
  r["type"] = expsum::to_string(cl.type);
  r["k_searched"] = cl.k_searched;
  Report checks = Report::array();
  if (cl.witness) {
    const auto& w = *cl.witness;
    r["witness"] = {{"k", w.k},
                    {"modulus", std::vector<std::uint64_t>(w.field.modulus().begin(), w.field.modulus().end())},
                    {"point", field_point(w.field, w.point)}};
    checks.push_back(check("witness", "tangency witness zeroes F(Z^e, X), <X, u> and the rank-one minors",
                           expsum::verify_tangency_witness(F, w)));
  }
  finish(r, checks);
  return r;
}

Report cmd_census(const RunConfig& c) {
  const auto F = resolve_instance(c.instance);
  Report r = header(c, F);
  Report checks = Report::array();
  const double n = F.n();
  if (!c.radii.empty()) {
    for (auto R : c.radii)
      if (R < 0) throw UsageError("--R entries must be >= 0");
    const auto counts = dualgeom::bad_locus_census(F, c.radii, c.probes, c.k_max);
    r["probes"] = c.probes;
    Report rows = Report::array();
    bool monotone = true;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const double R = static_cast<double>(c.radii[i]);
      rows.push_back({{"R", c.radii[i]},
                      {"count", exact(counts[i])},
                      {"count_over_R^(n-2+1/3)", R > 0 ? counts[i] / std::pow(R, n - 2 + 1.0 / 3) : 0.0}});
      if (i && c.radii[i] >= c.radii[i - 1]) monotone = monotone && counts[i] >= counts[i - 1];
    }
    r["census"] = rows;
    checks.push_back(check("monotone in R", "bad-locus census grows with the box", monotone));
  } else {
    const auto u = require_u(c, F.n());
    const auto primes = dualgeom::bad_prime_census(F, u, c.bound, c.k_max);
    double unorm = 0;
    for (auto x : u) unorm = std::max(unorm, std::abs(double(x)));
    const double logs = std::log(static_cast<double>(F.norm()) * std::max(unorm, 2.0));
    r["u"] = u;
    r["bound"] = c.bound;
    r["bad_primes"] = exact(primes);
    r["count_over_log"] = primes.size() / logs;
  }
  finish(r, checks);
  return r;
}

Report cmd_reduce(const RunConfig& c) {
  const auto F = resolve_instance(c.instance);
  const long long B = require_box(c, 1);
  const auto dec = coeffreduce::reduce_decision(F, B);
  Report r = header(c, F);
  r["B"] = B;
  r["E_size"] = dec.E.size();
  r["solutions"] = exact(dec.solutions);
  r["rank"] = exact(dec.rank);
  if (const auto* cb = std::get_if<coeffreduce::CoeffBounded>(&dec.outcome)) {
    Report b = Report::array();
    for (const auto& x : cb->b) b.push_back(big(x));
    r["branch"] = cb->trivial ? "few solutions" : "coefficients bounded";
    r["b"] = b;
    r["b_max"] = big(cb->b_max);
    r["hadamard_bound"] = big(cb->hadamard_bound);
    r["null_verified"] = cb->null_verified;
    r["proportional_to_a"] = cb->proportional_to_a;
  } else {
    const auto& sc = std::get<coeffreduce::SecondaryCurve>(dec.outcome);
    r["branch"] = "secondary curve";
    r["H"] = sc.H.to_string();
    r["R"] = sc.R.to_string();
    r["zero_count"] = exact(sc.zero_count);
    r["zero_ratio"] = sc.zero_ratio;
    r["solutions_on_H"] = sc.solutions_on_H;
    r["solutions_on_R"] = sc.solutions_on_R;
  }
  Report checks = Report::array();
  checks.push_back(check("certificate", "coefficient reduction: C b = 0 exactly, or R nonzero with solutions on H",
                         dec.certificate_ok()));
  finish(r, checks);
  return r;
}

}  // namespace polysieve::cli
