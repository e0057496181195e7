#pragma once

#include "polysieve/structured/structured_f.hpp"

namespace polysieve::dualgeom {

using algebra::SparsePoly;
using structured::StructuredF;

// mde (mde - 1)^{n-1}
BigInt dual_degree(int m, int d, int e, int n);

// Dual of the quadric F(Z^e, X) when mde = 2: u^T adj(A) u for the Gram
// matrix A, made primitive with a positive leading coefficient. Variables
// (U_Y, U1, ..., Un). Throws unless mde = 2 and the form is nondegenerate.
SparsePoly quadric_dual(const StructuredF& F);

// G(0, U): the dual with U_Y = 0, in variables (U1, ..., Un).
SparsePoly dual_at_zero(const SparsePoly& dual);

// Whether a quadratic form has a linear factor over Q: rank <= 1, or rank 2
// with minus its discriminant a rational square.
bool quadratic_form_has_linear_factor(const SparsePoly& q);

}  // namespace polysieve::dualgeom
