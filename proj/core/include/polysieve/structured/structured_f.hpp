#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysieve/algebra/sparse_poly.hpp"

namespace polysieve::structured {

using algebra::SparsePoly;

enum class StructuredErrorKind { DegreeMismatch, ZeroLastForm, MNotAtLeastTwo, BadShape, Malformed };

const char* to_string(StructuredErrorKind kind) noexcept;

class StructuredError : public std::invalid_argument {
 public:
  StructuredError(StructuredErrorKind kind, const std::string& what)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  StructuredErrorKind kind() const noexcept { return kind_; }

 private:
  StructuredErrorKind kind_;
};

// F(Y, X) = Y^{md} + Y^{m(d-1)} f_1(X) + ... + f_d(X), with f_i a form of
// degree m*e*i in n variables.
class StructuredF {
 public:
  static StructuredF validate(int m, int d, int e, int n, std::vector<SparsePoly> forms);

  int m() const noexcept { return m_; }
  int d() const noexcept { return d_; }
  int e() const noexcept { return e_; }
  int n() const noexcept { return n_; }
  int y_degree() const noexcept { return m_ * d_; }
  int weighted_degree() const noexcept { return m_ * d_ * e_; }

  const std::vector<SparsePoly>& forms() const noexcept { return forms_; }
  const SparsePoly& form(int i) const { return forms_.at(static_cast<std::size_t>(i - 1)); }
  const SparsePoly& last_form() const noexcept { return forms_.back(); }
  const std::vector<std::string>& x_variables() const noexcept { return forms_.front().variables(); }

  // F(Y, X) in variables (Y, X1, ..., Xn); Y is variable 0.
  const SparsePoly& polynomial() const noexcept { return full_; }
  // Largest absolute coefficient of F.
  BigInt norm() const { return full_.max_abs_coefficient(); }

  std::string describe() const;

 private:
  StructuredF() = default;
  int m_ = 0, d_ = 0, e_ = 0, n_ = 0;
  std::vector<SparsePoly> forms_;
  SparsePoly full_;
};

// F(Z^e, X) in variables (Z, X1, ..., Xn), homogeneous of degree m*d*e.
SparsePoly unweighted_form(const StructuredF& F);

// Instance file: header line `m d e n`, then f_1 ... f_d each as a sparse
// polynomial block starting with its own `vars` line.
StructuredF parse_structured(std::istream& in);
StructuredF load_structured(const std::string& path);
void write_structured(std::ostream& out, const StructuredF& F);

}  // namespace polysieve::structured
