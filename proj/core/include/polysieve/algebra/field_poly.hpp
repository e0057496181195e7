#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polysieve/algebra/finite_field.hpp"
#include "polysieve/algebra/sparse_poly.hpp"

namespace polysieve::algebra {

// Sparse multivariate polynomial with coefficients in a finite field.
class FieldPoly {
 public:
  FieldPoly(FiniteField field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  // Reduction of an integer polynomial into the field.
  static FieldPoly reduce(const SparsePoly& f, const FiniteField& field);
  static FieldPoly constant(const FiniteField& field, std::size_t nvars, FieldElem c);
  static FieldPoly variable(const FiniteField& field, std::size_t nvars, std::size_t index);

  const FiniteField& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return nvars_; }
  const std::map<Monomial, FieldElem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const noexcept;
  int degree_in(std::size_t var) const noexcept;
  bool is_homogeneous() const noexcept;

  void add_term(const Monomial& m, FieldElem c);
  FieldElem evaluate(std::span<const FieldElem> point) const;
  FieldPoly derivative(std::size_t var) const;
  // Substitutes the assigned variables and drops them; the result lives in
  // the unassigned variables, in their original order.
  FieldPoly restrict_to(std::span<const std::optional<FieldElem>> assignment) const;
  // var -> value, where value is a polynomial in the same variables.
  FieldPoly substitute(std::size_t var, const FieldPoly& value) const;
  // Drops variable `var`, which must not occur.
  FieldPoly drop_variable(std::size_t var) const;
  FieldPoly pow(unsigned e) const;
  FieldPoly scaled(FieldElem c) const;

  FieldPoly& operator+=(const FieldPoly& o);
  FieldPoly& operator-=(const FieldPoly& o);
  friend FieldPoly operator+(FieldPoly a, const FieldPoly& b) { return a += b; }
  friend FieldPoly operator-(FieldPoly a, const FieldPoly& b) { return a -= b; }
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  FiniteField field_;
  std::size_t nvars_;
  std::map<Monomial, FieldElem> terms_;
};

// Exact evaluation of an integer polynomial at a point over the field.
FieldElem poly_eval(const SparsePoly& f, std::span<const FieldElem> point, const FiniteField& field);

// F(alpha * Z^e, X) over the field, where variable y_var of F plays Y. The
// result keeps F's variable order with Z in Y's slot.
FieldPoly substitute_y_power(const SparsePoly& F, FieldElem alpha, unsigned e, const FiniteField& field,
                             std::size_t y_var = 0);

}  // namespace polysieve::algebra
