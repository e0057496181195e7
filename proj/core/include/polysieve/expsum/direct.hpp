#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polysieve/algebra/finite_field.hpp"
#include "polysieve/expsum/exp_sum_table.hpp"

namespace polysieve::expsum {

// sum_r S[r] e_p(r) for exact integer phase counts S[r], r in [0, p).
ExpSumValue sum_by_phase(std::span<const std::int64_t> S);

// g(u, p) by summing over all a in F_p^n, grouped by the phase <a, u>.
ExpSumValue g_direct(const counting::FiberTable& fibers, std::span<const long long> u);
ExpSumValue g_direct(const StructuredF& F, std::span<const long long> u, std::uint64_t p);

// g(u, pq) = g(q' u, p) g(p' u, q) with q q' = 1 mod p and p p' = 1 mod q.
ExpSumValue g_composite(const ExpSumTable& tp, const ExpSumTable& tq, std::span<const long long> u);
ExpSumValue g_composite(const StructuredF& F, std::span<const long long> u, std::uint64_t p, std::uint64_t q);

// The defining sum over all a mod pq of (nu_p(a) - 1)(nu_q(a) - 1) e_{pq}(<a, u>);
// (pq)^n terms, a reference for the CRT factorisation.
ExpSumValue g_pq_direct(const StructuredF& F, std::span<const long long> u, std::uint64_t p, std::uint64_t q);

// Splitting with f = gcd(e, p - 1): W_i = {(z, a) : F(gamma^i z^e, a) = 0}
// where gamma generates F_p^x modulo f-th powers.
struct SplitComponents {
  std::uint64_t f = 1;
  std::uint64_t gamma = 1;
  std::vector<ExpSumValue> g;             // sum over W_i of e_p(<a, u>), i = 0..f-1
  std::vector<std::uint64_t> sizes;       // |W_i|
  ExpSumValue total;                      // (1/f) sum_i g_i
};

SplitComponents split_components(const StructuredF& F, std::span<const long long> u, std::uint64_t p);
ExpSumValue split_homogenized(const StructuredF& F, std::span<const long long> u, std::uint64_t p);

// sum over {(y, a) : F(y, a) = 0} of e_p(<a, u>), which equals
// g(u, p) + [u = 0] p^n.
ExpSumValue solution_sum(const StructuredF& F, std::span<const long long> u, std::uint64_t p);

}  // namespace polysieve::expsum
