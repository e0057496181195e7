#include "polysieve/algebra/finite_field.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace polysieve::algebra {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;
constexpr unsigned kMaxDegree = 12;

using Digits = std::array<std::uint64_t, kMaxDegree>;

// Remainder of a modulo b over F_p, both low -> high, b with nonzero lead.
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> a, std::span<const std::uint64_t> b,
                                    std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = modinv(b[db], p);
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const auto c = static_cast<std::uint64_t>(static_cast<u128>(a[i]) * lead_inv % p);
    for (std::size_t j = 0; j <= db; ++j) {
      const auto t = static_cast<std::uint64_t>(static_cast<u128>(c) * b[j] % p);
      auto& slot = a[i - db + j];
      slot = slot >= t ? slot - t : slot + p - t;
    }
  }
  a.resize(db);
  return a;
}

std::uint64_t checked_power(std::uint64_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) throw std::invalid_argument("field order p^k too large");
    q *= p;
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = modpow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t modpow(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
  u128 r = 1 % m, b = a % m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t modinv(std::uint64_t a, std::uint64_t m) {
  i128 old_r = static_cast<i128>(a % m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i128 qt = old_r / r;
    std::swap(old_r, r);
    r -= qt * old_r;
    std::swap(old_s, s);
    s -= qt * old_s;
  }
  if (old_r != 1) throw std::domain_error("modinv: not invertible");
  i128 v = old_s % static_cast<i128>(m);
  if (v < 0) v += m;
  return static_cast<std::uint64_t>(v);
}

bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> poly) {
  std::size_t k = poly.size();
  while (k > 0 && poly[k - 1] % p == 0) --k;
  if (k < 2) return false;  // constants are not irreducible
  const std::size_t deg = k - 1;
  std::vector<std::uint64_t> f(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(k));
  for (auto& c : f) c %= p;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = checked_power(p, static_cast<unsigned>(d));
    std::vector<std::uint64_t> g(d + 1);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      const auto r = poly_rem(f, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField FiniteField::prime_field(std::uint64_t p) { return FiniteField(p, {0, 1}); }

FiniteField FiniteField::extension(std::uint64_t p, unsigned k) {
  if (k == 0) throw std::invalid_argument("extension degree must be >= 1");
  if (k == 1) return prime_field(p);
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  const std::uint64_t count = checked_power(p, k);
  std::vector<std::uint64_t> mod(k + 1);
  mod[k] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (unsigned i = 0; i < k; ++i) {
      mod[i] = t % p;
      t /= p;
    }
    if (mod[0] == 0) continue;
    if (is_irreducible(p, mod)) return FiniteField(p, mod);
  }
  throw std::logic_error("no irreducible modulus found");
}

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("characteristic too large");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  const auto k = static_cast<unsigned>(modulus.size() - 1);
  if (k > kMaxDegree) throw std::invalid_argument("extension degree too large");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficients must be reduced");
  if (k > 1 && !is_irreducible(p, modulus)) throw std::invalid_argument("modulus is reducible");

  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->k = k;
  t->q = checked_power(p, k);
  t->modulus = std::move(modulus);
  t->pw.resize(k + 1);
  t->pw[0] = 1;
  for (unsigned i = 1; i <= k; ++i) t->pw[i] = t->pw[i - 1] * p;
  t_ = t;  // generic arithmetic only needs the fields above

  // generator of the multiplicative group
  const std::uint64_t n = t->q - 1;
  const auto factors = prime_factors(n);
  for (std::uint64_t g = 1; g < t->q; ++g) {
    bool ok = true;
    for (auto r : factors) {
      if (pow(FieldElem{g}, n / r).index == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      t->generator = g;
      break;
    }
  }
  if (k > 1 && t->q <= kTableLimit) {
    t->exp.resize(2 * n);
    t->log.assign(t->q, 0);
    FieldElem x = one();
    for (std::uint64_t i = 0; i < n; ++i) {
      t->exp[i] = static_cast<std::uint32_t>(x.index);
      t->log[x.index] = static_cast<std::uint32_t>(i);
      x = mul_generic(x, FieldElem{t->generator});
    }
    for (std::uint64_t i = 0; i < n; ++i) t->exp[i + n] = t->exp[i];
    t->has_tables = true;
  }
}

FieldElem FiniteField::element(std::uint64_t index) const {
  if (index >= t_->q) throw std::out_of_range("field element index out of range");
  return {index};
}

FieldElem FiniteField::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(t_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r)};
}

FieldElem FiniteField::from_bigint(const BigInt& v) const {
  BigInt r = v % t_->p;
  if (r < 0) r += t_->p;
  return {r.convert_to<std::uint64_t>()};
}

FieldElem FiniteField::from_coeffs(std::span<const std::uint64_t> c) const {
  if (c.size() > t_->k) throw std::invalid_argument("too many coefficients for field degree");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) idx += (c[i] % t_->p) * t_->pw[i];
  return {idx};
}

std::vector<std::uint64_t> FiniteField::coeffs(FieldElem a) const {
  std::vector<std::uint64_t> out(t_->k);
  for (unsigned i = 0; i < t_->k; ++i) {
    out[i] = a.index % t_->p;
    a.index /= t_->p;
  }
  return out;
}

FieldElem FiniteField::add_digits(FieldElem a, FieldElem b, bool subtract) const noexcept {
  const std::uint64_t p = t_->p;
  std::uint64_t x = a.index, y = b.index, r = 0;
  for (unsigned i = 0; i < t_->k; ++i) {
    const std::uint64_t dx = x % p, dy = y % p;
    x /= p;
    y /= p;
    std::uint64_t s;
    if (subtract)
      s = dx >= dy ? dx - dy : dx + p - dy;
    else {
      s = dx + dy;
      if (s >= p) s -= p;
    }
    r += s * t_->pw[i];
  }
  return {r};
}

FieldElem FiniteField::mul_generic(FieldElem a, FieldElem b) const noexcept {
  const std::uint64_t p = t_->p;
  const unsigned k = t_->k;
  if (k == 1)
    return {static_cast<std::uint64_t>(static_cast<u128>(a.index) * b.index % p)};
  Digits da{}, db{};
  for (unsigned i = 0; i < k; ++i) {
    da[i] = a.index % p;
    a.index /= p;
    db[i] = b.index % p;
    b.index /= p;
  }
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] = static_cast<std::uint64_t>(
          (static_cast<u128>(da[i]) * db[j] + prod[i + j]) % p);
    }
  }
  const auto& mod = t_->modulus;
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    // x^k = -(mod_0 + ... + mod_{k-1} x^{k-1})
    for (unsigned j = 0; j < k; ++j) {
      const auto t = static_cast<std::uint64_t>(static_cast<u128>(c) * mod[j] % p);
      auto& slot = prod[i - k + j];
      slot = slot >= t ? slot - t : slot + p - t;
    }
  }
  std::uint64_t r = 0;
  for (unsigned i = 0; i < k; ++i) r += prod[i] * t_->pw[i];
  return {r};
}

FieldElem FiniteField::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a.index == 0) throw std::domain_error("inverse of zero");
  if (t_->k == 1) return {modinv(a.index, t_->p)};
  if (t_->has_tables) {
    const std::uint64_t n = t_->q - 1;
    return {t_->exp[(n - t_->log[a.index]) % n]};
  }
  return pow(a, t_->q - 2);
}

std::uint64_t FiniteField::multiplicative_order(FieldElem a) const {
  if (a.index == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t ord = t_->q - 1;
  for (auto r : prime_factors(ord)) {
    while (ord % r == 0 && pow(a, ord / r).index == 1) ord /= r;
  }
  return ord;
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "F_" << t_->p;
  if (t_->k > 1) {
    os << "^" << t_->k << "[x]/(";
    bool first = true;
    for (unsigned i = t_->k + 1; i-- > 0;) {
      const auto c = t_->modulus[i];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i > 0) os << (c != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << ")";
  }
  return os.str();
}

FieldElem primitive_root_of_unity(std::uint64_t p, std::uint64_t f) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (f == 0 || (p - 1) % f != 0) throw std::invalid_argument("f must divide p - 1");
  const auto F = FiniteField::prime_field(p);
  for (std::uint64_t a = 1; a < p; ++a) {
    if (F.multiplicative_order({a}) == f) return {a};
  }
  throw std::logic_error("no element of the requested order");
}

std::uint64_t least_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  return FiniteField::prime_field(p).generator().index;
}

}  // namespace polysieve::algebra
