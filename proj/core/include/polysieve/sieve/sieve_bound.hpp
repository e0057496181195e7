#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polysieve/sieve/poisson.hpp"
#include "polysieve/sieve/sieving_set.hpp"

namespace polysieve::sieve {

enum class SieveMode { Desk, Paper };

struct SieveParameters {
  SieveMode mode = SieveMode::Desk;
  // Desk mode takes Q directly; paper mode uses Q = B^kappa, or choose_Q
  // when kappa is unset.
  double Q = 11.0;
  std::optional<double> kappa;
  int m = 0;  // congruence filter; 0 means F.m()
  unsigned k_max = 2;
  double alpha = 0.0;  // 0 means (1/24)(n - 5/3 + 0.01)^{-1}
  int M = 0;           // 0 means ceil(max(2n, 1/alpha + 1))
  // Poisson side: fixed truncation, or -1 to choose the smallest one with
  // tail bound below tail_target. A negative tail_target skips the Poisson
  // side entirely.
  long long trunc = -1;
  double tail_target = 0.5;
  std::vector<std::uint64_t> smooth_trial_primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
};

double default_alpha(int n);
int default_M(int n, double alpha);

struct PairReport {
  std::uint64_t p = 0, q = 0;
  TValue direct;
  std::optional<PoissonResult> poisson;
  bool poisson_agrees = false;
  double fourier_abs_sum = 0.0;  // upper bound on sum_u |hat W(u / pq)|
  double fourier_ratio = 0.0;    // fourier_abs_sum / max(B^n, (pq)^n)
};

struct SieveReport {
  SieveMode mode = SieveMode::Desk;
  int n = 0;
  double B = 0.0;
  double Q = 0.0;
  double kappa = 0.0;
  double alpha = 0.0;
  int M = 0;
  int tail_M = 0;  // derivative order actually used for the Fourier tail bound
  double cube_half_width = 0.0;  // Q^2 / B^{1 - alpha}
  SievingSet sieving_set;
  std::uint64_t smooth_prime = 0;

  // symbolic sizes of the aggregated terms
  double term_Bn_over_P = 0.0;
  double term_Qn = 0.0;
  double term_Bn_over_Q = 0.0;

  // desk computations
  std::uint64_t N = 0;
  double S = 0.0;
  std::uint64_t S_inner = 0;  // solvable points with W = 1, exact
  double S_error = 0.0;
  double S1 = 0.0, S2 = 0.0, S3 = 0.0;
  double weight_mass = 0.0;
  double ratio = 0.0;  // S / (S1 + S2 + S3)

  std::uint64_t per_k_checked = 0;
  std::uint64_t per_k_violations = 0;
  long long per_k_min_slack = 0;

  long long P_eff = 0;
  double chain_lhs = 0.0, chain_rhs = 0.0, chain_error = 0.0;
  bool chain_holds = false;
  double chain_rhs_from_T = 0.0;  // sum over all (p, q), p = q included, of T(p, q)
  bool chain_expansion_agrees = false;

  std::vector<PairReport> pairs;  // ordered pairs p < q; T is symmetric
  TypeBreakdown poisson_by_type{};
  TypeBreakdown poisson_abs_by_type{};
  double bad_bad_abs = 0.0;
  double bad_bad_over_Qn = 0.0;
  double zero_zero_over_BnQ = 0.0;
  double max_fourier_ratio = 0.0;
  bool poisson_all_agree = true;

  bool N_le_S = false;
  std::vector<std::string> warnings;
};

// Lemma-style sieve bound for F on the box of half-width B. Requires a
// smooth reduction at one of the trial primes.
SieveReport sieve_bound(const StructuredF& F, double B, const SieveParameters& params);

}  // namespace polysieve::sieve
