#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>

#include "cli/cli.hpp"
#include "polysieve/algebra/finite_field.hpp"
#include "polysieve/algebra/resultant.hpp"
#include "polysieve/coeffreduce/reduce.hpp"
#include "polysieve/counting/counting.hpp"
#include "polysieve/dualgeom/census.hpp"
#include "polysieve/dualgeom/quadric.hpp"
#include "polysieve/expsum/classify.hpp"
#include "polysieve/expsum/direct.hpp"
#include "polysieve/expsum/exp_sum_table.hpp"
#include "polysieve/sieve/poisson.hpp"
#include "polysieve/sieve/sieve_bound.hpp"
#include "polysieve/structured/instances.hpp"
#include "polysieve/structured/smoothness.hpp"

namespace polysieve::cli {

namespace {

using structured::instance_FA;
using structured::instance_FC;
using structured::instance_FD;
using structured::StructuredF;

using Suite = std::function<void(Report&, std::mt19937_64&)>;

void algebra_suite(Report& out, std::mt19937_64& rng) {
  bool ok = true;
  for (unsigned k : {1u, 2u, 3u}) {
    const auto K = algebra::FiniteField::extension(7, k);
    std::uniform_int_distribution<std::uint64_t> d(1, K.order() - 1);
    for (int i = 0; i < 50; ++i) {
      const auto a = K.element(d(rng)), b = K.element(d(rng));
      ok = ok && K.mul(a, K.inv(a)) == K.one() && K.mul(K.add(a, b), a) == K.add(K.mul(a, a), K.mul(a, b));
    }
  }
  out.push_back(check("field axioms", "arithmetic in F_{7^k}, k <= 3", ok));

  // Res_Y(Y^2 - x, Y - 2) = 4 - x
  algebra::SparsePoly f({"Y", "X"}), g({"Y", "X"});
  f.add_term({2, 0}, 1);
  f.add_term({0, 1}, -1);
  g.add_term({1, 0}, 1);
  g.add_term({0, 0}, -2);
  algebra::SparsePoly want({"X"});
  want.add_term({0}, 4);
  want.add_term({1}, -1);
  const auto res = algebra::sylvester_resultant_y(f, g);
  out.push_back(check("resultant example", "Sylvester resultant in Y", res == want || res == -want));
}

void structured_suite(Report& out, std::mt19937_64&) {
  const std::uint64_t trial[] = {3, 5, 7, 11, 13};
  out.push_back(check("F_A smooth over C", "one smooth reduction certifies smoothness",
                      structured::smooth_over_C_certificate(instance_FA(), trial).certified));
  out.push_back(check("Z^2 - X1^2 singular", "singular instance rejected at every trial prime",
                      !structured::smooth_over_C_certificate(structured::instance_Fsing(), trial).certified));
  std::vector<std::uint64_t> bad;
  for (std::uint64_t p = 2; p < 100; ++p)
    if (algebra::is_prime(p) && !structured::smoothness_mod_p(instance_FA(), p).smooth) bad.push_back(p);
  out.push_back(check("F_A bad primes below 100", "bad reduction only at 2", bad == std::vector<std::uint64_t>{2}));
}

void counting_suite(Report& out, std::mt19937_64&) {
  const std::uint64_t want_A[] = {1, 7, 37, 43};
  bool ok = true;
  for (long long B = 0; B < 4; ++B) ok = ok && counting::count_N(instance_FA(), {B, 3}) == want_A[B];
  out.push_back(check("N(F_A, B), B <= 3", "box count by root enumeration", ok));
  for (const auto* name : {"F_A", "F_C"}) {
    const auto F = *structured::bundled_instance(name);
    const auto N = counting::count_N(F, {4, F.n()});
    const auto S = counting::count_S(F, {4, F.n()}, {4.0, 6});
    out.push_back(check(std::string("N <= S on ") + name, "smoothed count dominates the box count",
                        double(N) <= S.value + S.error_bound));
  }
}

void expsum_suite(Report& out, std::mt19937_64& rng) {
  for (const auto* name : {"F_A", "F_C", "F_D"}) {
    const auto F = *structured::bundled_instance(name);
    bool ok = true;
    for (std::uint64_t p : {3u, 5u, 7u}) {
      const counting::FiberTable fib(F, p);
      const auto t = expsum::g_table(fib);
      for (std::size_t i = 0; i < t.values.size(); ++i) {
        std::vector<long long> u(static_cast<std::size_t>(F.n()));
        std::size_t r = i;
        for (int j = F.n() - 1; j >= 0; --j, r /= p) u[static_cast<std::size_t>(j)] = static_cast<long long>(r % p);
        const auto d = expsum::g_direct(fib, u);
        ok = ok && std::abs(d.value - t.values[i]) <= std::min(d.error + t.err_budget, 1e-6 * std::pow(p, F.n() / 2.0));
      }
    }
    out.push_back(check(std::string("table vs direct on ") + name, "DFT against the defining sum, p <= 7", ok));
  }
  {
    const auto t3 = expsum::g_table(instance_FA(), 3), t5 = expsum::g_table(instance_FA(), 5);
    std::uniform_int_distribution<long long> d(-100, 100);
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
      const std::vector<long long> u{d(rng), d(rng), d(rng)};
      const auto v = expsum::g_composite(t3, t5, u);
      const auto w = expsum::g_pq_direct(instance_FA(), u, 3, 5);
      ok = ok && std::abs(v.value - w.value) <= v.error + w.error + 1e-6 * std::pow(15.0, 1.5);
    }
    out.push_back(check("multiplicativity (3, 5)", "g(u, pq) = g(qbar u, p) g(pbar u, q) against the (pq)^n-term sum", ok));
  }
  {
    const expsum::Classifier cl(instance_FA(), 13);
    const auto t = expsum::g_table(instance_FA(), 13);
    bool ok = true;
    counting::for_each_in_box(3, 3, [&](std::span<const long long> u) {
      const auto type = cl.classify(u).type;
      const double e = type == expsum::HyperplaneType::Good ? 1.5 : type == expsum::HyperplaneType::Bad ? 2.0 : 2.5;
      ok = ok && std::abs(t.at(u)) <= 1.001 * std::pow(13.0, e + 0.2);
    });
    out.push_back(check("Weil exponents on F_A, p = 13", "|g| <= p^{n/2}, p^{(n+1)/2}, p^{n - 1/2} by type", ok));
  }
  {
    bool ok = true;
    std::uniform_int_distribution<long long> d(0, 12);
    for (std::uint64_t p : {5u, 13u}) {
      for (int i = 0; i < 5; ++i) {
        const std::vector<long long> u{d(rng), d(rng), d(rng)};
        const auto a = expsum::split_homogenized(instance_FC(), u, p), b = expsum::solution_sum(instance_FC(), u, p);
        ok = ok && std::abs(a.value - b.value) <= 1e-6 * std::pow(double(p), 1.5);
      }
    }
    out.push_back(check("splitting identity on F_C", "sum over gamma-twisted components equals the solution sum", ok));
  }
}

void sieve_suite(Report& out, std::mt19937_64&) {
  const sieve::SmoothWeightSpec w{4.0, 6};
  const auto t = sieve::T_poisson(instance_FA(), 3, 5, w, -1);
  const auto d = sieve::T_direct(instance_FA(), 3, 5, w);
  out.push_back(check("Poisson identity (3, 5), B = 4", "T direct vs dual side within tail plus budget",
                      std::abs(t.value - d.value) <= t.tail_bound + t.err_budget + d.error));
  sieve::SieveParameters params;
  const auto rep = sieve::sieve_bound(instance_FA(), 8, params);
  out.push_back(check("sieve on F_A, B = 8", "polynomial sieve lemma and its proof inequalities",
                      rep.N_le_S && rep.per_k_violations == 0 && rep.chain_holds && rep.chain_expansion_agrees &&
                          rep.poisson_all_agree));
}

void dualgeom_suite(Report& out, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-20, 20);
  for (const auto* name : {"F_A", "F_D"}) {
    const auto F = *structured::bundled_instance(name);
    const auto G0 = dualgeom::dual_at_zero(dualgeom::quadric_dual(F));
    bool ok = true;
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
      const expsum::Classifier cl(F, p);
      for (int i = 0; i < 20; ++i) {
        const std::vector<long long> u{d(rng), d(rng), d(rng)};
        const long long P = static_cast<long long>(p);
        if (u[0] % P == 0 && u[1] % P == 0 && u[2] % P == 0) continue;
        const bool divides = G0.evaluate(std::span<const long long>(u)) % BigInt(p) == 0;
        ok = ok && (cl.classify(u).type == expsum::HyperplaneType::Bad) == divides;
      }
    }
    out.push_back(check(std::string("quadric dual biconditional on ") + name, "bad mod p iff p divides G(0, u)", ok));
  }
  const std::vector<long long> u{1, 2, 0};
  out.push_back(check("bad primes of (1, 2, 0) on F_A", "tangency census up to 50",
                      dualgeom::bad_prime_census(instance_FA(), u, 50) == std::vector<std::uint64_t>{5}));
}

void coeffreduce_suite(Report& out, std::mt19937_64&) {
  const auto dec = coeffreduce::reduce_decision(instance_FA(), 2);
  out.push_back(check("F_A at B = 2", "coefficient reduction certificate", dec.certificate_ok()));
}

// Compares stored oracle values against fresh computations.
void fixtures_suite(Report& out, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read fixtures '" + path + "'");
  nlohmann::json fx;
  try {
    fx = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    throw InputError("fixtures '" + path + "': " + e.what());
  }
  auto inst = [](const nlohmann::json& f) { return resolve_instance(f.at("instance").get<std::string>()); };
  std::size_t i = 0;
  for (const auto& f : fx.value("nu_p", nlohmann::json::array())) {
    const auto k = f.at("k").get<std::vector<long long>>();
    out.push_back(check("fixture nu_p[" + std::to_string(i++) + "]", "fiber count",
                        counting::nu_p(inst(f), k, f.at("p")) == f.at("value").get<int>()));
  }
  i = 0;
  for (const auto& f : fx.value("count_N", nlohmann::json::array())) {
    const auto F = inst(f);
    out.push_back(check("fixture count_N[" + std::to_string(i++) + "]", "box count",
                        counting::count_N(F, {f.at("B").get<long long>(), F.n()}) == f.at("value").get<std::uint64_t>()));
  }
  i = 0;
  for (const auto& f : fx.value("g", nlohmann::json::array())) {
    const auto u = f.at("u").get<std::vector<long long>>();
    const auto v = expsum::g_direct(inst(f), u, f.at("p"));
    const std::complex<double> want(f.at("re"), f.at("im"));
    out.push_back(check("fixture g[" + std::to_string(i++) + "]", "exponential sum",
                        std::abs(v.value - want) <= v.error + 1e-9));
  }
  i = 0;
  for (const auto& f : fx.value("g_pq", nlohmann::json::array())) {
    const auto u = f.at("u").get<std::vector<long long>>();
    const auto v = expsum::g_composite(inst(f), u, f.at("p"), f.at("q"));
    const std::complex<double> want(f.at("re"), f.at("im"));
    const double L = f.at("p").get<double>() * f.at("q").get<double>();
    out.push_back(check("fixture g_pq[" + std::to_string(i++) + "]", "composite exponential sum",
                        std::abs(v.value - want) <= 1e-6 * std::pow(L, 1.5)));
  }
  i = 0;
  for (const auto& f : fx.value("psi_hat", nlohmann::json::array())) {
    const auto v = sieve::bump_fourier(f.at("xi"));
    out.push_back(check("fixture psi_hat[" + std::to_string(i++) + "]", "bump Fourier transform",
                        std::abs(v.value - f.at("value").get<double>()) <= v.error + 1e-12));
  }
}

}  // namespace

Report cmd_verify(const RunConfig& c) {
  const std::vector<std::pair<std::string, Suite>> suites{
      {"algebra", algebra_suite},   {"structured", structured_suite}, {"counting", counting_suite},
      {"expsum", expsum_suite},     {"sieve", sieve_suite},           {"dualgeom", dualgeom_suite},
      {"coeffreduce", coeffreduce_suite}};
  for (const auto& name : c.only) {
    const bool known = name == "fixtures" || std::any_of(suites.begin(), suites.end(),
                                                         [&](const auto& s) { return s.first == name; });
    if (!known) throw UsageError("unknown suite '" + name + "'");
  }
  auto selected = [&](const std::string& name) {
    return c.only.empty() || std::find(c.only.begin(), c.only.end(), name) != c.only.end();
  };
  Report r;
  r["command"] = "verify";
  r["seed"] = c.seed;
  Report all = Report::array();
  Report by_suite;
  for (const auto& [name, run] : suites) {
    if (!selected(name)) continue;
    std::mt19937_64 rng(c.seed);
    Report checks = Report::array();
    run(checks, rng);
    by_suite[name] = checks;
    for (const auto& ch : checks) all.push_back(ch);
  }
  if (!c.fixtures.empty() && selected("fixtures")) {
    Report checks = Report::array();
    fixtures_suite(checks, c.fixtures);
    by_suite["fixtures"] = checks;
    for (const auto& ch : checks) all.push_back(ch);
  }
  std::size_t failed = 0;
  Report failures = Report::array();
  for (const auto& ch : all)
    if (!ch["pass"].get<bool>()) {
      ++failed;
      failures.push_back(ch["check"]);
    }
  r["suites"] = by_suite;
  r["checks_run"] = all.size();
  r["failed"] = failed;
  r["failures"] = failures;
  r["verdict"] = failed == 0 ? "pass" : "fail";
  return r;
}

}  // namespace polysieve::cli
