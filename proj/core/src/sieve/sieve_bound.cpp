#include "polysieve/sieve/sieve_bound.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "polysieve/parallel.hpp"
#include "polysieve/summation.hpp"

namespace polysieve::sieve {

double default_alpha(int n) { return 1.0 / (24.0 * (n - 5.0 / 3.0 + 0.01)); }

int default_M(int n, double alpha) {
  return static_cast<int>(std::ceil(std::max(2.0 * n, 1.0 / alpha + 1.0)));
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SlabAcc {
  std::uint64_t N = 0, inner = 0;
  CompensatedSum shell, S1, mass, chain_lhs, chain_rhs;
  std::vector<CompensatedSum> diag;
  std::uint64_t checked = 0, violations = 0;
  long long min_slack = std::numeric_limits<long long>::max();
  long long P_eff = std::numeric_limits<long long>::max();
};

std::size_t mod_index(long long k, std::uint64_t p) {
  const auto pp = static_cast<long long>(p);
  long long r = k % pp;
  if (r < 0) r += pp;
  return static_cast<std::size_t>(r);
}

}  // namespace

SieveReport sieve_bound(const StructuredF& F, double B, const SieveParameters& params) {
  if (!(B >= 1)) throw std::invalid_argument("sieve_bound: B must be >= 1");
  const int n = F.n();
  SieveReport rep;
  rep.mode = params.mode;
  rep.n = n;
  rep.B = B;

  const auto smooth = structured::smooth_over_C_certificate(F, params.smooth_trial_primes, params.k_max);
  if (!smooth.certified)
    throw std::runtime_error("sieve_bound: no smooth reduction among the trial primes; F may be singular");
  rep.smooth_prime = *smooth.prime;

  rep.alpha = params.alpha > 0 ? params.alpha : default_alpha(n);
  if (!(rep.alpha > 0 && rep.alpha < 1)) throw std::invalid_argument("sieve_bound: alpha must lie in (0, 1)");
  rep.M = params.M > 0 ? params.M : default_M(n, rep.alpha);
  rep.tail_M = std::clamp(rep.M, 2, 8);

  if (params.mode == SieveMode::Desk) {
    if (params.kappa) throw std::invalid_argument("sieve_bound: kappa applies to paper mode; desk mode takes Q");
    rep.Q = params.Q;
  } else if (params.kappa) {
    if (*params.kappa < 0.75 || *params.kappa > 1) throw std::invalid_argument("sieve_bound: kappa must lie in [3/4, 1]");
    rep.Q = std::pow(B, *params.kappa);
  } else {
    rep.Q = choose_Q(B, n);
  }
  rep.kappa = std::log(rep.Q) / std::log(B);
  rep.cube_half_width = rep.Q * rep.Q / std::pow(B, 1 - rep.alpha);

  const int m_filter = params.m > 0 ? params.m : F.m();
  rep.sieving_set = build_sieving_set(F, rep.Q, m_filter, params.k_max);
  rep.warnings = rep.sieving_set.warnings;
  const auto& primes = rep.sieving_set.primes;
  const double P = static_cast<double>(primes.size());

  const double Bn = std::pow(B, n);
  rep.term_Bn_over_P = Bn / P;
  rep.term_Qn = std::pow(rep.Q, n);
  rep.term_Bn_over_Q = Bn / rep.Q;

  const double log_fd = std::log(std::max(1.0, static_cast<double>(F.last_form().max_abs_coefficient())));
  if (P < std::max(log_fd, std::log(B))) {
    std::ostringstream msg;
    msg << "P = " << primes.size() << " is not large against max(log |f_d|, log B) = " << std::max(log_fd, std::log(B));
    rep.warnings.push_back(msg.str());
  }
  if (params.mode == SieveMode::Paper) return rep;

  // one pass over the weight support
  const SmoothWeightSpec w{B, rep.tail_M};
  std::vector<counting::FiberTable> fibers;
  for (auto p : primes) fibers.emplace_back(F, p);
  const auto R = static_cast<long long>(std::floor(2 * B));
  const auto Bi = static_cast<long long>(std::floor(B));
  const std::size_t side = static_cast<std::size_t>(2 * R + 1);
  std::vector<double> b(side);
  for (std::size_t i = 0; i < side; ++i) b[i] = bump(static_cast<double>(static_cast<long long>(i) - R) / B);
  const long long mF = F.m();
  const long long Pn = static_cast<long long>(primes.size());

  std::vector<SlabAcc> acc(side);
  parallel_slabs(side, [&](std::size_t slab) {
    auto& a = acc[slab];
    a.diag.resize(primes.size());
    if (b[slab] == 0.0) return;
    std::map<BigInt, int> omega_cache;
    std::vector<long long> k(static_cast<std::size_t>(n), -R);
    k[0] = static_cast<long long>(slab) - R;
    std::vector<std::size_t> idx(primes.size());
    for (;;) {
      double wk = 1.0;
      bool in_box = true;
      for (int i = 0; i < n; ++i) {
        const auto ki = k[static_cast<std::size_t>(i)];
        wk *= b[static_cast<std::size_t>(ki + R)];
        in_box = in_box && std::llabs(ki) <= Bi;
      }
      if (wk != 0.0) {
        a.mass.add(wk);
        const bool solvable = !counting::integer_roots(F, k).empty();
        const BigInt fd = F.last_form().evaluate(std::span<const long long>(k));
        long long sum_p = 0;
        for (std::size_t j = 0; j < primes.size(); ++j) {
          std::size_t ix = 0;
          for (auto ki : k) ix = ix * primes[j] + mod_index(ki, primes[j]);
          const int v = fibers[j].at_index(ix) - 1;
          sum_p += v;
          a.diag[j].add(wk * v * v);
        }
        a.chain_rhs.add(wk * static_cast<double>(sum_p * sum_p));
        if (fd == 0) a.S1.add(wk);
        if (solvable) {
          if (in_box) ++a.N;
          if (wk == 1.0)
            ++a.inner;
          else
            a.shell.add(wk);
          if (fd != 0) {
            auto it = omega_cache.find(fd);
            if (it == omega_cache.end()) it = omega_cache.emplace(fd, counting::omega(fd)).first;
            const long long slack = sum_p - (mF - 1) * (Pn - it->second);
            ++a.checked;
            if (slack < 0) ++a.violations;
            a.min_slack = std::min(a.min_slack, slack);
            a.P_eff = std::min(a.P_eff, sum_p);
            a.chain_lhs.add(wk);
          }
        }
      }
      int i = n - 1;
      while (i >= 1 && k[static_cast<std::size_t>(i)] == R) {
        k[static_cast<std::size_t>(i)] = -R;
        --i;
      }
      if (i < 1) break;
      ++k[static_cast<std::size_t>(i)];
    }
  });

  CompensatedSum shell, S1, mass, chain_lhs_w, chain_rhs;
  std::vector<CompensatedSum> diag(primes.size());
  rep.per_k_min_slack = std::numeric_limits<long long>::max();
  rep.P_eff = std::numeric_limits<long long>::max();
  for (auto& a : acc) {
    rep.N += a.N;
    rep.S_inner += a.inner;
    shell.add(a.shell);
    S1.add(a.S1);
    mass.add(a.mass);
    chain_lhs_w.add(a.chain_lhs);
    chain_rhs.add(a.chain_rhs);
    for (std::size_t j = 0; j < a.diag.size(); ++j) diag[j].add(a.diag[j]);
    rep.per_k_checked += a.checked;
    rep.per_k_violations += a.violations;
    rep.per_k_min_slack = std::min(rep.per_k_min_slack, a.min_slack);
    rep.P_eff = std::min(rep.P_eff, a.P_eff);
  }
  if (rep.per_k_checked == 0) {
    rep.per_k_min_slack = 0;
    rep.P_eff = 0;
  }
  rep.S = static_cast<double>(rep.S_inner) + shell.value();
  rep.S_error = shell.error_bound() + kEps * rep.S;
  rep.N_le_S = rep.N <= rep.S_inner && shell.value() >= 0;
  rep.S1 = S1.value();
  rep.weight_mass = mass.value();
  rep.S2 = rep.weight_mass / P;

  // P_eff^2 sum_{solvable, f_d != 0} W <= sum_k W (sum_p (nu_p - 1))^2
  const double peff = static_cast<double>(std::max<long long>(rep.P_eff, 0));
  rep.chain_lhs = peff * peff * chain_lhs_w.value();
  rep.chain_rhs = chain_rhs.value();
  rep.chain_error = 8 * (n + 4) * kEps * (chain_rhs.abs_total() + rep.chain_lhs) + chain_rhs.error_bound() +
                    chain_lhs_w.error_bound() * peff * peff;
  rep.chain_holds = rep.P_eff >= 0 && rep.chain_lhs <= rep.chain_rhs + rep.chain_error;

  // pairwise terms
  std::vector<expsum::ExpSumTable> tables;
  std::vector<expsum::ClassificationTable> classes;
  const bool do_poisson = params.tail_target >= 0 || params.trunc >= 0;
  if (do_poisson) {
    for (std::size_t j = 0; j < primes.size(); ++j) {
      tables.push_back(expsum::g_table(fibers[j]));
      classes.emplace_back(expsum::Classifier(F, primes[j], params.k_max));
    }
  }
  CompensatedSum s3, rhs_T;
  double rhs_T_err = 0.0;
  for (auto& d : diag) {
    rhs_T.add(d);
    rhs_T_err += d.error_bound() + 8 * (n + 2) * kEps * d.abs_total();
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      PairReport pr;
      pr.p = primes[i];
      pr.q = primes[j];
      pr.direct = T_direct(fibers[i], fibers[j], w);
      s3.add(2 * std::abs(pr.direct.value));
      rhs_T.add(2 * pr.direct.value);
      rhs_T_err += 2 * pr.direct.error;
      if (do_poisson) {
        PoissonSide side_ij(tables[i], tables[j], w);
        const long long T = params.trunc >= 0 ? params.trunc : side_ij.choose_truncation(params.tail_target);
        auto res = side_ij.evaluate(T, &classes[i], &classes[j]);
        pr.poisson_agrees =
            std::abs(pr.direct.value - res.value) <= res.tail_bound + res.err_budget + pr.direct.error;
        rep.poisson_all_agree = rep.poisson_all_agree && pr.poisson_agrees;
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t c = 0; c < 3; ++c) {
            // ordered pairs: (p, q) and (q, p) contribute the transposed cells
            rep.poisson_by_type[a][c] += res.by_type[a][c];
            rep.poisson_by_type[c][a] += res.by_type[a][c];
            rep.poisson_abs_by_type[a][c] += res.abs_by_type[a][c];
            rep.poisson_abs_by_type[c][a] += res.abs_by_type[a][c];
          }
        pr.fourier_abs_sum = side_ij.fourier_abs_sum();
        pr.fourier_ratio =
            pr.fourier_abs_sum / std::max(Bn, std::pow(static_cast<double>(pr.p * pr.q), n));
        rep.max_fourier_ratio = std::max(rep.max_fourier_ratio, pr.fourier_ratio);
        pr.poisson = std::move(res);
      }
      rep.pairs.push_back(std::move(pr));
    }
  }
  rep.S3 = s3.value() / (P * P);
  rep.ratio = rep.S / (rep.S1 + rep.S2 + rep.S3);
  rep.chain_rhs_from_T = rhs_T.value();
  rep.chain_expansion_agrees =
      std::abs(rep.chain_rhs_from_T - rep.chain_rhs) <= rhs_T_err + rhs_T.error_bound() + rep.chain_error;

  if (do_poisson) {
    constexpr auto bad = static_cast<std::size_t>(expsum::HyperplaneType::Bad);
    constexpr auto zero = static_cast<std::size_t>(expsum::HyperplaneType::TypeZero);
    rep.bad_bad_abs = rep.poisson_abs_by_type[bad][bad] / (P * P);
    rep.bad_bad_over_Qn = rep.bad_bad_abs / rep.term_Qn;
    rep.zero_zero_over_BnQ = rep.poisson_abs_by_type[zero][zero] / (P * P) / rep.term_Bn_over_Q;
  } else {
    rep.poisson_all_agree = false;
  }
  return rep;
}

}  // namespace polysieve::sieve
