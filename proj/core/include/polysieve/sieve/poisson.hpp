#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "polysieve/counting/counting.hpp"
#include "polysieve/expsum/classify.hpp"
#include "polysieve/expsum/exp_sum_table.hpp"
#include "polysieve/sieve/weight.hpp"

namespace polysieve::sieve {

using structured::StructuredF;

struct TValue {
  double value = 0.0;
  double error = 0.0;  // compensated-summation bound; nu values are exact
  double weight_mass = 0.0;  // sum of W(k) over the support
};

// T(p, q) = sum_k W(k) (nu_p(k) - 1) (nu_q(k) - 1) over the integer points
// of the weight support.
TValue T_direct(const counting::FiberTable& fp, const counting::FiberTable& fq, const SmoothWeightSpec& w);
TValue T_direct(const StructuredF& F, std::uint64_t p, std::uint64_t q, const SmoothWeightSpec& w);

// Contribution of the truncated Poisson sum split by the types of u mod p
// and mod q, indexed [type_p][type_q] with HyperplaneType order.
using TypeBreakdown = std::array<std::array<double, 3>, 3>;

struct PoissonResult {
  double value = 0.0;
  double imag = 0.0;
  double tail_bound = 0.0;  // bound on the terms with |u|_inf > trunc
  double err_budget = 0.0;  // rounding, quadrature and table error of the kept terms
  long long trunc = 0;
  std::size_t terms = 0;
  TypeBreakdown by_type{};
  TypeBreakdown abs_by_type{};
};

// The Poisson side of T(p, q) for one pair of tables. Values of
// B psi_hat(B u / pq) are cached per integer u.
class PoissonSide {
 public:
  PoissonSide(const expsum::ExpSumTable& tp, const expsum::ExpSumTable& tq, const SmoothWeightSpec& w);

  std::uint64_t L() const noexcept { return L_; }
  // Upper bound on sum over |u|_inf > T of |hat W(u / pq) g(u, pq)| / (pq)^n.
  double tail_bound(long long T) const;
  // Smallest T whose tail bound is below target; throws when unreachable.
  long long choose_truncation(double target) const;
  // Upper bound on sum over all u in Z^n of |hat W(u / pq)|.
  double fourier_abs_sum() const;

  PoissonResult evaluate(long long T, const expsum::ClassificationTable* cp = nullptr,
                         const expsum::ClassificationTable* cq = nullptr) const;

 private:
  void extend(long long U) const;
  double analytic_tail(long long U) const;

  const expsum::ExpSumTable& tp_;
  const expsum::ExpSumTable& tq_;
  SmoothWeightSpec w_;
  std::uint64_t L_;
  int n_;
  int M_;
  double g_max_;
  long long U_;
  mutable std::vector<FourierValue> w1_;  // u = 0..size-1, even in u
};

PoissonResult T_poisson(const StructuredF& F, std::uint64_t p, std::uint64_t q, const SmoothWeightSpec& w,
                        long long trunc);

}  // namespace polysieve::sieve
