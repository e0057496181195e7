#include "polysieve/algebra/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace polysieve::algebra::uni {

void trim(UPoly& a) {
  while (!a.empty() && a.back().index == 0) a.pop_back();
}

int degree(const UPoly& a) noexcept { return static_cast<int>(a.size()) - 1; }

UPoly add(const FiniteField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly sub(const FiniteField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

UPoly mul(const FiniteField& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

void divmod(const FiniteField& F, const UPoly& a, const UPoly& b, UPoly* quot, UPoly* rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  UPoly r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  const FieldElem lead_inv = F.inv(b.back());
  UPoly q;
  if (r.size() > db) q.assign(r.size() - db, F.zero());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].index == 0) continue;
    const FieldElem c = F.mul(r[i], lead_inv);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  r.resize(std::min(r.size(), db));
  trim(r);
  trim(q);
  if (quot) *quot = std::move(q);
  if (rem) *rem = std::move(r);
}

UPoly rem(const FiniteField& F, const UPoly& a, const UPoly& b) {
  UPoly r;
  divmod(F, a, b, nullptr, &r);
  return r;
}

UPoly monic(const FiniteField& F, const UPoly& a) {
  if (a.empty()) return a;
  const FieldElem inv = F.inv(a.back());
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], inv);
  return r;
}

UPoly gcd(const FiniteField& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

UPoly powmod(const FiniteField& F, const UPoly& base, std::uint64_t e, const UPoly& modulus) {
  UPoly r{F.one()};
  r = rem(F, r, modulus);
  UPoly b = rem(F, base, modulus);
  while (e) {
    if (e & 1) r = rem(F, mul(F, r, b), modulus);
    e >>= 1;
    if (e) b = rem(F, mul(F, b, b), modulus);
  }
  return r;
}

FieldElem eval(const FiniteField& F, const UPoly& a, FieldElem x) {
  FieldElem r = F.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

namespace {

constexpr std::uint64_t kBruteForceOrder = 256;

// h is monic, squarefree, and splits into distinct linear factors.
void split_linear(const FiniteField& F, const UPoly& h, std::vector<FieldElem>& out) {
  const int d = degree(h);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(F.neg(h[0]));
    return;
  }
  const std::uint64_t half = (F.order() - 1) / 2;
  for (std::uint64_t delta = 0; delta < F.order(); ++delta) {
    const UPoly lin{FieldElem{delta}, F.one()};
    UPoly w = powmod(F, lin, half, h);
    w = sub(F, w, UPoly{F.one()});
    UPoly g = gcd(F, h, w);
    const int dg = degree(g);
    if (dg > 0 && dg < d) {
      UPoly other;
      divmod(F, h, g, &other, nullptr);
      split_linear(F, g, out);
      split_linear(F, monic(F, other), out);
      return;
    }
  }
  throw std::logic_error("equal-degree splitting failed");
}

}  // namespace

std::vector<FieldElem> roots(const FiniteField& F, const UPoly& a_in) {
  UPoly a = a_in;
  trim(a);
  if (a.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<FieldElem> out;
  if (degree(a) == 0) return out;
  if (F.order() <= kBruteForceOrder || F.characteristic() == 2) {
    if (F.order() > (std::uint64_t{1} << 24)) throw std::invalid_argument("root search: field too large for p = 2");
    for (std::uint64_t x = 0; x < F.order(); ++x)
      if (eval(F, a, FieldElem{x}).index == 0) out.push_back(FieldElem{x});
    return out;
  }
  a = monic(F, a);
  // h = gcd(a, x^q - x) collects the distinct linear factors
  UPoly xq = powmod(F, UPoly{F.zero(), F.one()}, F.order(), a);
  xq = sub(F, xq, UPoly{F.zero(), F.one()});
  UPoly h = gcd(F, a, xq);  // squarefree even when a is not
  split_linear(F, h, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UPoly interpolate(const FiniteField& F, std::span<const FieldElem> xs, std::span<const FieldElem> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  // Newton divided differences
  std::vector<FieldElem> c(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      c[i] = F.div(F.sub(c[i], c[i - 1]), F.sub(xs[i], xs[i - j]));
    }
  }
  UPoly r;
  for (std::size_t i = n; i-- > 0;) {
    // r = r * (x - xs[i]) + c[i]
    UPoly next(r.size() + 1, F.zero());
    for (std::size_t k = 0; k < r.size(); ++k) {
      next[k + 1] = F.add(next[k + 1], r[k]);
      next[k] = F.sub(next[k], F.mul(r[k], xs[i]));
    }
    next[0] = F.add(next[0], c[i]);
    trim(next);
    r = std::move(next);
  }
  return r;
}

FieldElem determinant(const FiniteField& F, std::vector<std::vector<FieldElem>> m) {
  const std::size_t n = m.size();
  FieldElem det = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].index == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = F.neg(det);
    }
    det = F.mul(det, m[col][col]);
    const FieldElem inv = F.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].index == 0) continue;
      const FieldElem f = F.mul(m[r][col], inv);
      for (std::size_t k = col; k < n; ++k) m[r][k] = F.sub(m[r][k], F.mul(f, m[col][k]));
    }
  }
  return det;
}

}  // namespace polysieve::algebra::uni
