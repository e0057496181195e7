#include "polysieve/algebra/field_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace polysieve::algebra {

FieldPoly FieldPoly::reduce(const SparsePoly& f, const FiniteField& field) {
  FieldPoly out(field, f.num_vars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, field.from_bigint(c));
  return out;
}

FieldPoly FieldPoly::constant(const FiniteField& field, std::size_t nvars, FieldElem c) {
  FieldPoly out(field, nvars);
  out.add_term(Monomial(nvars, 0), c);
  return out;
}

FieldPoly FieldPoly::variable(const FiniteField& field, std::size_t nvars, std::size_t index) {
  FieldPoly out(field, nvars);
  Monomial m(nvars, 0);
  m.at(index) = 1;
  out.add_term(m, field.one());
  return out;
}

int FieldPoly::total_degree() const noexcept {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto x : m) d += static_cast<int>(x);
    best = std::max(best, d);
  }
  return best;
}

int FieldPoly::degree_in(std::size_t var) const noexcept {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, static_cast<int>(m[var]));
  return best;
}

bool FieldPoly::is_homogeneous() const noexcept {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto x : m) d += static_cast<int>(x);
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

void FieldPoly::add_term(const Monomial& m, FieldElem c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial length mismatch");
  if (c.index == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second.index == 0) terms_.erase(it);
  }
}

FieldElem FieldPoly::evaluate(std::span<const FieldElem> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  FieldElem total = field_.zero();
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    for (std::size_t i = 0; i < nvars_ && t.index != 0; ++i)
      if (m[i]) t = field_.mul(t, field_.pow(point[i], m[i]));
    total = field_.add(total, t);
  }
  return total;
}

FieldPoly FieldPoly::derivative(std::size_t var) const {
  FieldPoly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out.add_term(d, field_.mul(c, field_.from_int(m[var])));
  }
  return out;
}

FieldPoly FieldPoly::restrict_to(std::span<const std::optional<FieldElem>> assignment) const {
  if (assignment.size() != nvars_) throw std::invalid_argument("assignment has wrong length");
  std::size_t free = 0;
  for (const auto& a : assignment) free += a ? 0 : 1;
  FieldPoly out(field_, free);
  Monomial d(free);
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    std::size_t j = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (assignment[i]) {
        if (m[i]) t = field_.mul(t, field_.pow(*assignment[i], m[i]));
      } else {
        d[j++] = m[i];
      }
    }
    out.add_term(d, t);
  }
  return out;
}

FieldPoly FieldPoly::substitute(std::size_t var, const FieldPoly& value) const {
  if (value.nvars_ != nvars_) throw std::invalid_argument("substitute: variable count mismatch");
  FieldPoly out(field_, nvars_);
  std::vector<FieldPoly> powers{constant(field_, nvars_, field_.one())};
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m[var]) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[var] = 0;
    for (const auto& [pm, pc] : powers[m[var]].terms_) {
      Monomial t = rest;
      for (std::size_t i = 0; i < nvars_; ++i) t[i] += pm[i];
      out.add_term(t, field_.mul(c, pc));
    }
  }
  return out;
}

FieldPoly FieldPoly::drop_variable(std::size_t var) const {
  FieldPoly out(field_, nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m[var] != 0) throw std::invalid_argument("drop_variable: variable still occurs");
    Monomial d;
    d.reserve(nvars_ - 1);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var) d.push_back(m[i]);
    out.add_term(d, c);
  }
  return out;
}

FieldPoly FieldPoly::pow(unsigned e) const {
  FieldPoly r = constant(field_, nvars_, field_.one());
  FieldPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FieldPoly FieldPoly::scaled(FieldElem c) const {
  FieldPoly out(field_, nvars_);
  for (const auto& [m, v] : terms_) out.add_term(m, field_.mul(v, c));
  return out;
}

FieldPoly& FieldPoly::operator+=(const FieldPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FieldPoly& FieldPoly::operator-=(const FieldPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
  return *this;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  FieldPoly out(a.field_, a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, a.field_.mul(ca, cb));
    }
  }
  return out;
}

FieldElem poly_eval(const SparsePoly& f, std::span<const FieldElem> point, const FiniteField& field) {
  if (point.size() != f.num_vars()) throw std::invalid_argument("poly_eval: dimension mismatch");
  FieldElem total = field.zero();
  for (const auto& [m, c] : f.terms()) {
    FieldElem t = field.from_bigint(c);
    for (std::size_t i = 0; i < m.size() && t.index != 0; ++i)
      if (m[i]) t = field.mul(t, field.pow(point[i], m[i]));
    total = field.add(total, t);
  }
  return total;
}

FieldPoly substitute_y_power(const SparsePoly& F, FieldElem alpha, unsigned e, const FiniteField& field,
                             std::size_t y_var) {
  if (y_var >= F.num_vars()) throw std::invalid_argument("substitute_y_power: no such Y variable");
  if (e == 0) throw std::invalid_argument("substitute_y_power: e must be positive");
  FieldPoly out(field, F.num_vars());
  for (const auto& [m, c] : F.terms()) {
    Monomial d = m;
    d[y_var] = m[y_var] * e;
    out.add_term(d, field.mul(field.from_bigint(c), field.pow(alpha, m[y_var])));
  }
  return out;
}

}  // namespace polysieve::algebra
