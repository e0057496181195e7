#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "polysieve/algebra/field_poly.hpp"

namespace polysieve::algebra {

// Projective point in normalized form: first nonzero coordinate equals one.
using ProjectivePoint = std::vector<FieldElem>;

ProjectivePoint normalize_projective(const FiniteField& F, ProjectivePoint pt);

// Common zeros of homogeneous polynomials in P^{nvars-1}(F_q).
//
// Charts are visited in order of the first nonzero coordinate. Inside a chart
// with f free coordinates the first f-2 are enumerated and the remaining
// bivariate system is solved by eliminating the last coordinate with a
// resultant computed by evaluation and interpolation. Falls back to
// enumeration whenever that elimination is identically zero or the field is
// too small to interpolate in.
class ProjectiveZeroSearch {
 public:
  ProjectiveZeroSearch(FiniteField field, std::vector<FieldPoly> polys, std::size_t nvars);

  std::optional<ProjectivePoint> first() const;
  std::vector<ProjectivePoint> all() const;
  // Calls visitor on each zero; stops early when it returns true. Returns
  // whether it stopped early.
  bool visit(const std::function<bool(const ProjectivePoint&)>& visitor) const;

 private:
  FiniteField field_;
  std::vector<FieldPoly> polys_;
  std::size_t nvars_;
};

}  // namespace polysieve::algebra
