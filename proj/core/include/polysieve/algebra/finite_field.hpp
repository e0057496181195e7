#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "polysieve/bigint.hpp"

namespace polysieve::algebra {

// Element of F_{p^k}: index = sum c_i p^i over the coefficients of the
// residue polynomial c_0 + c_1 x + ... modulo the field's modulus.
// For k = 1 the index is the residue itself.
struct FieldElem {
  std::uint64_t index = 0;
  auto operator<=>(const FieldElem&) const = default;
};

namespace detail {
struct FieldTables {
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // monic, low -> high, size k + 1
  std::vector<std::uint64_t> pw;       // p^i, i <= k
  bool has_tables = false;
  std::vector<std::uint32_t> exp;      // size 2(q - 1)
  std::vector<std::uint32_t> log;      // size q, log[0] unused
  std::uint64_t generator = 1;
};
}  // namespace detail

class FiniteField {
 public:
  // F_p.
  static FiniteField prime_field(std::uint64_t p);
  // F_{p^k} built on the least irreducible monic modulus, where monic
  // degree-k polynomials are ordered by (c_{k-1}, ..., c_0) lexicographically.
  static FiniteField extension(std::uint64_t p, unsigned k);
  // Explicit monic modulus, low -> high, checked for irreducibility.
  FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const noexcept { return t_->p; }
  unsigned degree() const noexcept { return t_->k; }
  std::uint64_t order() const noexcept { return t_->q; }
  std::span<const std::uint64_t> modulus() const noexcept { return t_->modulus; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem element(std::uint64_t index) const;
  FieldElem from_int(std::int64_t v) const noexcept;
  FieldElem from_bigint(const BigInt& v) const;
  FieldElem from_coeffs(std::span<const std::uint64_t> c) const;
  std::vector<std::uint64_t> coeffs(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    if (t_->k == 1) {
      std::uint64_t s = a.index + b.index;
      return {s >= t_->p ? s - t_->p : s};
    }
    return add_digits(a, b, false);
  }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept {
    if (t_->k == 1) return {a.index >= b.index ? a.index - b.index : a.index + t_->p - b.index};
    return add_digits(a, b, true);
  }
  FieldElem neg(FieldElem a) const noexcept { return sub(zero(), a); }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    if (t_->k == 1)
      return {static_cast<std::uint64_t>(static_cast<u128>(a.index) * b.index % t_->p)};
    if (t_->has_tables) {
      if (a.index == 0 || b.index == 0) return zero();
      return {t_->exp[t_->log[a.index] + t_->log[b.index]]};
    }
    return mul_generic(a, b);
  }
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  bool is_zero(FieldElem a) const noexcept { return a.index == 0; }

  std::uint64_t multiplicative_order(FieldElem a) const;
  FieldElem generator() const noexcept { return {t_->generator}; }

  bool operator==(const FiniteField& o) const noexcept {
    return t_ == o.t_ || (t_->p == o.t_->p && t_->modulus == o.t_->modulus);
  }
  std::string describe() const;

 private:
  explicit FiniteField(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  FieldElem add_digits(FieldElem a, FieldElem b, bool subtract) const noexcept;
  FieldElem mul_generic(FieldElem a, FieldElem b) const noexcept;

  std::shared_ptr<const detail::FieldTables> t_;
};

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t modpow(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;
// Inverse of a modulo m (gcd(a, m) = 1), in [0, m).
std::uint64_t modinv(std::uint64_t a, std::uint64_t m);

// Least element of F_p with multiplicative order exactly f.
FieldElem primitive_root_of_unity(std::uint64_t p, std::uint64_t f);
// Least generator of F_p^x.
std::uint64_t least_primitive_root(std::uint64_t p);

// Irreducibility over F_p by trial division against all monic polynomials of
// degree <= k/2 (coefficients low -> high, any leading coefficient != 0).
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> poly);

}  // namespace polysieve::algebra
