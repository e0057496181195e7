#include "polysieve/expsum/direct.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "polysieve/summation.hpp"

namespace polysieve::expsum {

namespace {

std::vector<std::uint64_t> residues(std::span<const long long> u, std::uint64_t p) {
  std::vector<std::uint64_t> r(u.size());
  const auto pp = static_cast<long long>(p);
  for (std::size_t i = 0; i < u.size(); ++i) {
    long long v = u[i] % pp;
    if (v < 0) v += pp;
    r[i] = static_cast<std::uint64_t>(v);
  }
  return r;
}

// Accumulates weight(a) into S[<a, u> mod p] over a in F_p^n, row-major.
template <class Weight>
std::vector<std::int64_t> phase_counts(std::uint64_t p, int n, std::span<const std::uint64_t> ur, Weight&& weight) {
  std::vector<std::int64_t> S(p, 0);
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  std::uint64_t phase = 0;
  const std::uint64_t last = ur[static_cast<std::size_t>(n - 1)];
  for (;;) {
    // innermost coordinate runs over a contiguous block of p entries
    std::uint64_t ph = phase;
    for (std::uint64_t x = 0; x < p; ++x, ++idx) {
      S[ph] += weight(idx);
      ph += last;
      if (ph >= p) ph -= p;
    }
    int i = n - 2;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == p - 1) {
      a[static_cast<std::size_t>(i)] = 0;
      // phase -= (p - 1) u_i
      phase = (phase + ur[static_cast<std::size_t>(i)]) % p;
      --i;
    }
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
    phase = (phase + ur[static_cast<std::size_t>(i)]) % p;
  }
  return S;
}

}  // namespace

ExpSumValue sum_by_phase(std::span<const std::int64_t> S) {
  const std::size_t p = S.size();
  CompensatedComplexSum s;
  double mass = 0.0;
  for (std::size_t r = 0; r < p; ++r) {
    if (S[r] == 0) continue;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(p);
    s.add(static_cast<double>(S[r]) * std::complex<double>(std::cos(ang), std::sin(ang)));
    mass += std::abs(static_cast<double>(S[r]));
  }
  ExpSumValue out;
  out.value = s.value();
  // each unit root is correct to a few ulps
  out.error = 4.0 * std::numeric_limits<double>::epsilon() * mass + s.error_bound();
  return out;
}

ExpSumValue g_direct(const counting::FiberTable& fibers, std::span<const long long> u) {
  if (u.size() != static_cast<std::size_t>(fibers.n())) throw std::invalid_argument("g_direct: u has wrong length");
  const auto ur = residues(u, fibers.p());
  const auto S = phase_counts(fibers.p(), fibers.n(), ur,
                              [&](std::size_t idx) { return static_cast<std::int64_t>(fibers.at_index(idx)) - 1; });
  return sum_by_phase(S);
}

ExpSumValue g_direct(const StructuredF& F, std::span<const long long> u, std::uint64_t p) {
  return g_direct(counting::FiberTable(F, p), u);
}

ExpSumValue g_composite(const ExpSumTable& tp, const ExpSumTable& tq, std::span<const long long> u) {
  if (tp.p == tq.p) throw std::invalid_argument("g_composite: p and q must differ");
  if (tp.n != tq.n || u.size() != static_cast<std::size_t>(tp.n))
    throw std::invalid_argument("g_composite: dimension mismatch");
  const std::uint64_t p = tp.p, q = tq.p;
  const std::uint64_t qbar = algebra::modinv(q % p, p), pbar = algebra::modinv(p % q, q);
  const auto up = residues(u, p), uq = residues(u, q);
  std::size_t ip = 0, iq = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    ip = ip * p + static_cast<std::size_t>(up[i] * qbar % p);
    iq = iq * q + static_cast<std::size_t>(uq[i] * pbar % q);
  }
  const auto a = tp.values[ip], b = tq.values[iq];
  ExpSumValue out;
  out.value = a * b;
  out.error = tp.err_budget * std::abs(b) + tq.err_budget * std::abs(a) + tp.err_budget * tq.err_budget +
              2 * std::numeric_limits<double>::epsilon() * std::abs(a) * std::abs(b);
  return out;
}

ExpSumValue g_composite(const StructuredF& F, std::span<const long long> u, std::uint64_t p, std::uint64_t q) {
  if (p == q) throw std::invalid_argument("g_composite: p and q must differ");
  const auto up = residues(u, p), uq = residues(u, q);
  const std::uint64_t qbar = algebra::modinv(q % p, p), pbar = algebra::modinv(p % q, q);
  std::vector<long long> a(u.size()), b(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    a[i] = static_cast<long long>(up[i] * qbar % p);
    b[i] = static_cast<long long>(uq[i] * pbar % q);
  }
  const auto gp = g_direct(F, a, p), gq = g_direct(F, b, q);
  ExpSumValue out;
  out.value = gp.value * gq.value;
  out.error = gp.error * std::abs(gq.value) + gq.error * std::abs(gp.value) + gp.error * gq.error +
              2 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  return out;
}

ExpSumValue g_pq_direct(const StructuredF& F, std::span<const long long> u, std::uint64_t p, std::uint64_t q) {
  if (p == q) throw std::invalid_argument("g_pq_direct: p and q must differ");
  if (u.size() != static_cast<std::size_t>(F.n())) throw std::invalid_argument("g_pq_direct: u has wrong length");
  const counting::FiberTable fp(F, p), fq(F, q);
  const std::uint64_t L = p * q;
  const auto ur = residues(u, L);
  std::vector<std::int64_t> S(L, 0);
  const std::size_t n = u.size();
  std::vector<std::uint64_t> a(n, 0);
  for (;;) {
    std::size_t ip = 0, iq = 0;
    std::uint64_t phase = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ip = ip * p + a[i] % p;
      iq = iq * q + a[i] % q;
      phase = (phase + a[i] * static_cast<std::uint64_t>(ur[i])) % L;
    }
    S[phase] += static_cast<std::int64_t>(fp.at_index(ip) - 1) * (fq.at_index(iq) - 1);
    std::size_t i = n;
    while (i > 0 && ++a[i - 1] == L) a[--i] = 0;
    if (i == 0) break;
  }
  return sum_by_phase(S);
}

namespace {

// Values of F(y, a) as a polynomial in y: coefficient tuples per a.
std::vector<std::uint64_t> coefficient_rows(const StructuredF& F, std::uint64_t p, std::size_t& count) {
  const auto field = algebra::FiniteField::prime_field(p);
  const int n = F.n(), d = F.d();
  count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  std::vector<std::uint64_t> rows(count * static_cast<std::size_t>(d));
  std::vector<long long> a(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t t = idx;
    for (int i = n - 1; i >= 0; --i) {
      a[static_cast<std::size_t>(i)] = static_cast<long long>(t % p);
      t /= p;
    }
    for (int i = 1; i <= d; ++i)
      rows[idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(i - 1)] =
          field.from_bigint(F.form(i).evaluate(std::span<const long long>(a))).index;
  }
  return rows;
}

std::uint64_t eval_F(const StructuredF& F, const std::uint64_t* c, std::uint64_t y, std::uint64_t p) {
  const std::uint64_t ym = algebra::modpow(y, static_cast<std::uint64_t>(F.m()), p);
  std::uint64_t h = 1;
  for (int i = 0; i < F.d(); ++i)
    h = static_cast<std::uint64_t>((static_cast<u128>(h) * ym + c[i]) % p);
  return h;
}

}  // namespace

ExpSumValue solution_sum(const StructuredF& F, std::span<const long long> u, std::uint64_t p) {
  if (u.size() != static_cast<std::size_t>(F.n())) throw std::invalid_argument("solution_sum: u has wrong length");
  std::size_t count = 0;
  const auto rows = coefficient_rows(F, p, count);
  const auto ur = residues(u, p);
  const auto S = phase_counts(p, F.n(), ur, [&](std::size_t idx) {
    std::int64_t c = 0;
    for (std::uint64_t y = 0; y < p; ++y)
      if (eval_F(F, &rows[idx * static_cast<std::size_t>(F.d())], y, p) == 0) ++c;
    return c;
  });
  return sum_by_phase(S);
}

SplitComponents split_components(const StructuredF& F, std::span<const long long> u, std::uint64_t p) {
  if (p == 2 || !algebra::is_prime(p)) throw std::invalid_argument("split_components: p must be an odd prime");
  if (u.size() != static_cast<std::size_t>(F.n())) throw std::invalid_argument("split_components: u has wrong length");
  SplitComponents out;
  const auto e = static_cast<std::uint64_t>(F.e());
  out.f = std::gcd(e, p - 1);
  out.gamma = algebra::least_primitive_root(p);
  std::size_t count = 0;
  const auto rows = coefficient_rows(F, p, count);
  const auto ur = residues(u, p);
  for (std::uint64_t i = 0; i < out.f; ++i) {
    const std::uint64_t gi = algebra::modpow(out.gamma, i, p);
    // y-values gamma^i z^e with multiplicity, over z in F_p
    std::vector<std::int64_t> mult(p, 0);
    for (std::uint64_t z = 0; z < p; ++z)
      ++mult[static_cast<std::size_t>(static_cast<u128>(gi) * algebra::modpow(z, e, p) % p)];
    const auto S = phase_counts(p, F.n(), ur, [&](std::size_t idx) {
      std::int64_t c = 0;
      for (std::uint64_t y = 0; y < p; ++y)
        if (mult[y] && eval_F(F, &rows[idx * static_cast<std::size_t>(F.d())], y, p) == 0) c += mult[y];
      return c;
    });
    std::int64_t size = 0;
    for (auto s : S) size += s;
    out.sizes.push_back(static_cast<std::uint64_t>(size));
    out.g.push_back(sum_by_phase(S));
  }
  CompensatedComplexSum s;
  double err = 0.0;
  for (const auto& v : out.g) {
    s.add(v.value);
    err += v.error;
  }
  const double f = static_cast<double>(out.f);
  out.total.value = s.value() / f;
  out.total.error = (err + s.error_bound()) / f;
  return out;
}

ExpSumValue split_homogenized(const StructuredF& F, std::span<const long long> u, std::uint64_t p) {
  return split_components(F, u, p).total;
}

}  // namespace polysieve::expsum
