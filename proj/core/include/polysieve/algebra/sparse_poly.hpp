#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polysieve/bigint.hpp"

namespace polysieve::algebra {

using Monomial = std::vector<std::uint32_t>;

// Exact polynomial with integer coefficients over a named, ordered variable
// list. Terms with zero coefficient are never stored.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> variables);

  static SparsePoly constant(std::vector<std::string> variables, const BigInt& c);
  static SparsePoly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  std::size_t index_of(const std::string& name) const;

  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  void add_term(const Monomial& mono, const BigInt& coef);
  BigInt coefficient(const Monomial& mono) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  int total_degree() const noexcept;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const noexcept;
  bool is_homogeneous() const noexcept;
  BigInt max_abs_coefficient() const;

  BigInt evaluate(std::span<const BigInt> point) const;
  BigInt evaluate(std::span<const long long> point) const;

  SparsePoly derivative(std::size_t var) const;
  SparsePoly derivative(const std::string& var) const { return derivative(index_of(var)); }
  // Coefficient of var^deg, as a polynomial in the same variables.
  SparsePoly coefficient_in(std::size_t var, std::uint32_t deg) const;
  // Substitute var -> var^power (exponent scaling).
  SparsePoly scale_exponent(std::size_t var, std::uint32_t power) const;
  // Same polynomial over a new variable list; map[i] gives the new index of
  // old variable i.
  SparsePoly remap(std::vector<std::string> variables, std::span<const std::size_t> map) const;
  SparsePoly pow(unsigned e) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const BigInt& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const BigInt& c) { return a *= c; }
  friend SparsePoly operator*(const BigInt& c, SparsePoly a) { return a *= c; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void require_same_vars(const SparsePoly& o) const;

  std::vector<std::string> vars_;
  std::map<Monomial, BigInt> terms_;
};

// Text format: a header line `vars v1 v2 ...` followed by one term per line,
// `coefficient e1 e2 ... ev`. Blank lines and lines starting with '#' are
// skipped.
SparsePoly parse_sparse_poly(std::istream& in);
void write_sparse_poly(std::ostream& out, const SparsePoly& f);

// Line-level helpers shared with the structured instance reader.
namespace detail {
std::vector<std::string> parse_vars_line(const std::string& line);
std::optional<Monomial> parse_term_line(const std::string& line, std::size_t nvars, BigInt& coef);
}  // namespace detail

}  // namespace polysieve::algebra
