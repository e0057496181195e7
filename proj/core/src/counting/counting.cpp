#include "polysieve/counting/counting.hpp"

#include <algorithm>
#include <boost/multiprecision/miller_rabin.hpp>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "polysieve/algebra/univariate.hpp"
#include "polysieve/parallel.hpp"
#include "polysieve/summation.hpp"

namespace polysieve::counting {

namespace {

using i128 = i128;

// Forms evaluated on small integer points in 128-bit arithmetic, with a
// BigInt fallback when the a priori bound does not fit.
class FormEvaluator {
 public:
  FormEvaluator(const StructuredF& F, long long radius) : F_(F) {
    fast_ = true;
    for (const auto& f : F.forms()) {
      std::vector<Term> terms;
      long double bound = 0;
      for (const auto& [m, c] : f.terms()) {
        if (abs(c) > BigInt(std::numeric_limits<std::int64_t>::max())) fast_ = false;
        Term t;
        t.coef = fast_ ? static_cast<std::int64_t>(c) : 0;
        t.exps = m;
        terms.push_back(std::move(t));
        bound += std::abs(static_cast<long double>(c)) *
                 std::pow(static_cast<long double>(std::max(1LL, radius)), f.total_degree());
      }
      if (bound > 1e36L) fast_ = false;
      forms_.push_back(std::move(terms));
    }
  }

  // Coefficients a_0..a_{md} of F(Y, x) as a polynomial in Y, low -> high.
  // Returns false when the fast path cannot be used.
  bool coefficients_fast(std::span<const long long> x, std::vector<i128>& a) const {
    if (!fast_) return false;
    const int m = F_.m(), d = F_.d();
    a.assign(static_cast<std::size_t>(m * d + 1), 0);
    a[static_cast<std::size_t>(m * d)] = 1;
    for (int i = 1; i <= d; ++i) {
      i128 v = 0;
      for (const auto& t : forms_[static_cast<std::size_t>(i - 1)]) {
        i128 term = t.coef;
        for (std::size_t j = 0; j < t.exps.size(); ++j)
          for (std::uint32_t r = 0; r < t.exps[j]; ++r) term *= x[j];
        v += term;
      }
      a[static_cast<std::size_t>(m * (d - i))] = v;
    }
    return true;
  }

  std::vector<BigInt> coefficients_big(std::span<const long long> x) const {
    const int m = F_.m(), d = F_.d();
    std::vector<BigInt> a(static_cast<std::size_t>(m * d + 1), BigInt(0));
    a[static_cast<std::size_t>(m * d)] = 1;
    for (int i = 1; i <= d; ++i) a[static_cast<std::size_t>(m * (d - i))] = F_.form(i).evaluate(x);
    return a;
  }

 private:
  struct Term {
    std::int64_t coef = 0;
    algebra::Monomial exps;
  };
  const StructuredF& F_;
  bool fast_ = false;
  std::vector<std::vector<Term>> forms_;
};

// Horner in 128 bits; nullopt on overflow.
std::optional<i128> horner128(const std::vector<i128>& a, i128 y) {
  i128 h = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    i128 t;
    if (__builtin_mul_overflow(h, y, &t)) return std::nullopt;
    if (__builtin_add_overflow(t, a[i], &h)) return std::nullopt;
  }
  return h;
}

BigInt horner_big(const std::vector<BigInt>& a, const BigInt& y) {
  BigInt h = 0;
  for (std::size_t i = a.size(); i-- > 0;) h = h * y + a[i];
  return h;
}

BigInt to_big(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

// Positive divisors of |v| (v != 0), by trial division.
template <class Int>
std::vector<Int> divisors(Int v) {
  if (v < 0) v = -v;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Lowest nonzero coefficient index; the polynomial is monic so one exists.
template <class Int>
std::size_t lowest_nonzero(const std::vector<Int>& a) {
  std::size_t j = 0;
  while (a[j] == 0) ++j;
  return j;
}

std::vector<BigInt> roots_big(const std::vector<BigInt>& a) {
  std::vector<BigInt> out;
  const std::size_t j = lowest_nonzero(a);
  if (j > 0) out.push_back(0);
  if (j + 1 < a.size()) {
    // nonzero roots divide a_j; the quotient by Y^j is monic with constant a_j
    std::vector<BigInt> q(a.begin() + static_cast<std::ptrdiff_t>(j), a.end());
    for (const BigInt& dv : divisors<BigInt>(q[0])) {
      if (horner_big(q, dv) == 0) out.push_back(dv);
      if (horner_big(q, -dv) == 0) out.push_back(-dv);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<BigInt>> roots_fast(const std::vector<i128>& a) {
  std::vector<BigInt> out;
  const std::size_t j = lowest_nonzero(a);
  if (j > 0) out.push_back(0);
  if (j + 1 < a.size()) {
    std::vector<i128> q(a.begin() + static_cast<std::ptrdiff_t>(j), a.end());
    if (q[0] > (i128{1} << 100) || q[0] < -(i128{1} << 100)) return std::nullopt;
    for (i128 dv : divisors<i128>(q[0])) {
      for (i128 y : {dv, -dv}) {
        auto h = horner128(q, y);
        if (!h) return std::nullopt;
        if (*h == 0) out.push_back(to_big(y));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool solvable(const FormEvaluator& ev, std::span<const long long> x, std::vector<i128>& scratch) {
  if (ev.coefficients_fast(x, scratch)) {
    if (scratch[0] == 0) return true;  // f_d(x) = 0, so y = 0
    auto r = roots_fast(scratch);
    if (r) return !r->empty();
  }
  const auto a = ev.coefficients_big(x);
  if (a[0] == 0) return true;
  return !roots_big(a).empty();
}

std::size_t pow_size(std::uint64_t p, int n) {
  std::size_t s = 1;
  for (int i = 0; i < n; ++i) s *= p;
  return s;
}

}  // namespace

int nu_p(const StructuredF& F, std::span<const long long> k, std::uint64_t p) {
  if (k.size() != static_cast<std::size_t>(F.n())) throw std::invalid_argument("nu_p: point has wrong length");
  if (!algebra::is_prime(p)) throw std::invalid_argument("nu_p: p must be prime");
  const auto field = algebra::FiniteField::prime_field(p);
  algebra::UPoly a(static_cast<std::size_t>(F.y_degree() + 1), field.zero());
  a.back() = field.one();
  for (int i = 1; i <= F.d(); ++i)
    a[static_cast<std::size_t>(F.m() * (F.d() - i))] = field.from_bigint(F.form(i).evaluate(k));
  return static_cast<int>(algebra::uni::roots(field, a).size());
}

FiberTable::FiberTable(const StructuredF& F, std::uint64_t p) : p_(p), n_(F.n()) {
  if (!algebra::is_prime(p)) throw std::invalid_argument("FiberTable: p must be prime");
  if (p > 5000) throw std::invalid_argument("FiberTable: p too large for a full table");
  const std::size_t total = pow_size(p, n_);
  if (total > (std::size_t{1} << 28)) throw std::invalid_argument("FiberTable: p^n too large");
  const int m = F.m(), d = F.d(), md = F.y_degree();
  const auto field = algebra::FiniteField::prime_field(p);

  // root count for every coefficient tuple (f_1, ..., f_d) mod p, when small
  const bool tuple_cache = pow_size(p, d) <= (std::size_t{1} << 20);
  auto count_roots = [&](std::span<const std::uint64_t> c) {
    int cnt = 0;
    for (std::uint64_t y = 0; y < p; ++y) {
      // F(y) = y^{md} + sum_i c_i y^{m(d-i)}
      std::uint64_t yp = algebra::modpow(y, static_cast<std::uint64_t>(m), p), h = 1;
      for (int i = 1; i <= d; ++i) h = static_cast<std::uint64_t>((static_cast<u128>(h) * yp + c[static_cast<std::size_t>(i - 1)]) % p);
      if (h == 0) ++cnt;
    }
    return cnt;
  };
  std::vector<std::uint8_t> by_tuple;
  if (tuple_cache) {
    by_tuple.resize(pow_size(p, d));
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d));
    for (std::size_t idx = 0; idx < by_tuple.size(); ++idx) {
      std::size_t t = idx;
      for (int i = d - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      by_tuple[idx] = static_cast<std::uint8_t>(count_roots(c));
    }
  }
  (void)md;

  // forms reduced mod p with a power table
  struct Term {
    std::uint64_t coef;
    algebra::Monomial exps;
  };
  std::vector<std::vector<Term>> forms;
  int max_exp = 0;
  for (const auto& f : F.forms()) {
    std::vector<Term> ts;
    for (const auto& [mono, c] : f.terms()) {
      ts.push_back({field.from_bigint(c).index, mono});
      for (auto e : mono) max_exp = std::max(max_exp, static_cast<int>(e));
    }
    forms.push_back(std::move(ts));
  }
  std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(max_exp + 1), std::vector<std::uint64_t>(p));
  for (std::uint64_t a = 0; a < p; ++a) {
    std::uint64_t v = 1;
    for (int e = 0; e <= max_exp; ++e) {
      pw[static_cast<std::size_t>(e)][a] = v;
      v = v * a % p;
    }
  }

  values_.assign(total, 0);
  const std::size_t slab = total / p;
  parallel_slabs(p, [&](std::size_t s) {
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n_)), c(static_cast<std::size_t>(d));
    for (std::size_t off = 0; off < slab; ++off) {
      const std::size_t idx = s * slab + off;
      std::size_t t = idx;
      for (int i = n_ - 1; i >= 0; --i) {
        a[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      for (std::size_t i = 0; i < forms.size(); ++i) {
        std::uint64_t v = 0;
        for (const auto& term : forms[i]) {
          u128 x = term.coef;
          for (std::size_t j = 0; j < term.exps.size(); ++j) x = x * pw[term.exps[j]][a[j]] % p;
          v = static_cast<std::uint64_t>((v + x) % p);
        }
        c[i] = v;
      }
      if (tuple_cache) {
        std::size_t ti = 0;
        for (int i = 0; i < d; ++i) ti = ti * p + c[static_cast<std::size_t>(i)];
        values_[idx] = by_tuple[ti];
      } else {
        values_[idx] = static_cast<std::uint8_t>(count_roots(c));
      }
    }
  });
}

std::size_t FiberTable::index(std::span<const long long> k) const {
  if (k.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("FiberTable: point has wrong length");
  const auto p = static_cast<long long>(p_);
  std::size_t idx = 0;
  for (long long v : k) {
    long long r = v % p;
    if (r < 0) r += p;
    idx = idx * p_ + static_cast<std::size_t>(r);
  }
  return idx;
}

std::vector<BigInt> integer_roots(const StructuredF& F, std::span<const long long> x) {
  if (x.size() != static_cast<std::size_t>(F.n())) throw std::invalid_argument("integer_roots: point has wrong length");
  long long radius = 0;
  for (long long v : x) radius = std::max(radius, std::abs(v));
  FormEvaluator ev(F, radius);
  std::vector<i128> a;
  if (ev.coefficients_fast(x, a)) {
    if (auto r = roots_fast(a)) return *r;
  }
  return roots_big(ev.coefficients_big(x));
}

std::uint64_t count_N(const StructuredF& F, const BoxSpec& box) {
  if (box.B < 0) throw std::invalid_argument("count_N: B must be >= 0");
  if (box.n != F.n()) throw std::invalid_argument("count_N: box dimension differs from n");
  const FormEvaluator ev(F, box.B);
  const std::size_t slabs = static_cast<std::size_t>(2 * box.B + 1);
  std::vector<std::uint64_t> partial(slabs, 0);
  parallel_slabs(slabs, [&](std::size_t s) {
    std::vector<i128> scratch;
    std::vector<long long> k(static_cast<std::size_t>(box.n));
    k[0] = static_cast<long long>(s) - box.B;
    std::uint64_t cnt = 0;
    for_each_in_box(box.n - 1, box.B, [&](std::span<const long long> rest) {
      std::copy(rest.begin(), rest.end(), k.begin() + 1);
      if (solvable(ev, k, scratch)) ++cnt;
    });
    partial[s] = cnt;
  });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

SmoothedCount count_S(const StructuredF& F, const BoxSpec& box, const sieve::SmoothWeightSpec& w) {
  if (box.n != F.n()) throw std::invalid_argument("count_S: box dimension differs from n");
  if (!(w.B > 0)) throw std::invalid_argument("count_S: weight half-width must be positive");
  // W vanishes once some |k_i| >= 2B
  const auto outer = static_cast<long long>(std::ceil(2 * w.B)) - 1;
  const auto inner = static_cast<long long>(std::floor(w.B));
  const FormEvaluator ev(F, outer);
  const std::size_t slabs = static_cast<std::size_t>(2 * outer + 1);
  std::vector<std::uint64_t> inner_counts(slabs, 0);
  std::vector<CompensatedSum> shell(slabs);
  parallel_slabs(slabs, [&](std::size_t s) {
    std::vector<i128> scratch;
    std::vector<long long> k(static_cast<std::size_t>(box.n));
    k[0] = static_cast<long long>(s) - outer;
    for_each_in_box(box.n - 1, outer, [&](std::span<const long long> rest) {
      std::copy(rest.begin(), rest.end(), k.begin() + 1);
      bool in_inner = true;
      for (long long v : k) in_inner = in_inner && std::abs(v) <= inner;
      const double wk = in_inner ? 1.0 : sieve::weight_eval_int(w, k);
      if (wk == 0.0) return;
      if (!solvable(ev, k, scratch)) return;
      if (in_inner)
        ++inner_counts[s];
      else
        shell[s].add(wk);
    });
  });
  SmoothedCount out;
  CompensatedSum total;
  for (std::size_t s = 0; s < slabs; ++s) {
    out.inner += inner_counts[s];
    total.add(shell[s]);
  }
  out.value = static_cast<double>(out.inner) + total.value();
  out.error_bound = total.error_bound() + std::numeric_limits<double>::epsilon() * out.value;
  return out;
}

std::vector<algebra::ProjectivePoint> projective_points(std::span<const SparsePoly> polys,
                                                        const algebra::FiniteField& field, std::size_t nvars) {
  if (nvars == 0) {
    if (polys.empty()) throw std::invalid_argument("projective_points: need nvars for an empty system");
    nvars = polys.front().num_vars();
  }
  std::vector<algebra::FieldPoly> reduced;
  for (const auto& f : polys) {
    if (f.num_vars() != nvars) throw std::invalid_argument("projective_points: variable count mismatch");
    if (!f.is_homogeneous()) throw std::invalid_argument("projective_points: non-homogeneous input");
    reduced.push_back(algebra::FieldPoly::reduce(f, field));
  }
  return algebra::ProjectiveZeroSearch(field, std::move(reduced), nvars).all();
}

std::uint64_t schwartz_zippel_count(const SparsePoly& f, long long B) {
  if (f.is_zero()) throw std::invalid_argument("schwartz_zippel_count: zero polynomial");
  if (B < 0) throw std::invalid_argument("schwartz_zippel_count: B must be >= 0");
  const int n = static_cast<int>(f.num_vars());
  if (n == 0) return 0;  // nonzero constant
  std::uint64_t count = 0;
  std::vector<BigInt> pt(static_cast<std::size_t>(n));
  for_each_in_box(n, B, [&](std::span<const long long> k) {
    for (std::size_t i = 0; i < pt.size(); ++i) pt[i] = k[i];
    if (f.evaluate(std::span<const BigInt>(pt)) == 0) ++count;
  });
  return count;
}

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return abs(a);
}

// Pollard-Brent: a nontrivial factor of composite n.
BigInt pollard_factor(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd_big(x > y ? BigInt(x - y) : BigInt(y - x), n);
    }
    if (d != n) return d;
  }
}

void collect_primes(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 25)) {
    out.push_back(n);
    return;
  }
  const BigInt f = pollard_factor(n);
  collect_primes(f, out);
  collect_primes(n / f, out);
}

}  // namespace

int omega(const BigInt& N) {
  if (N == 0) throw std::invalid_argument("omega: N must be nonzero");
  BigInt n = abs(N);
  int count = 0;
  for (std::uint64_t d = 2; d < 100000 && BigInt(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    ++count;
    while (n % d == 0) n /= d;
  }
  if (n == 1) return count;
  std::vector<BigInt> rest;
  collect_primes(n, rest);
  std::sort(rest.begin(), rest.end());
  rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
  return count + static_cast<int>(rest.size());
}

}  // namespace polysieve::counting
