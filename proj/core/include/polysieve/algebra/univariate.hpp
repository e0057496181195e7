#pragma once

#include <span>
#include <vector>

#include "polysieve/algebra/finite_field.hpp"

namespace polysieve::algebra {

// Dense univariate polynomial over F_q, coefficients low -> high. Kept
// trimmed: no trailing zeros, so the zero polynomial is empty.
using UPoly = std::vector<FieldElem>;

namespace uni {

void trim(UPoly& a);
int degree(const UPoly& a) noexcept;
UPoly add(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly sub(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly mul(const FiniteField& F, const UPoly& a, const UPoly& b);
void divmod(const FiniteField& F, const UPoly& a, const UPoly& b, UPoly* quot, UPoly* rem);
UPoly rem(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly monic(const FiniteField& F, const UPoly& a);
UPoly gcd(const FiniteField& F, UPoly a, UPoly b);  // monic, gcd(0,0) = 0
UPoly powmod(const FiniteField& F, const UPoly& base, std::uint64_t e, const UPoly& modulus);
FieldElem eval(const FiniteField& F, const UPoly& a, FieldElem x);

// Distinct roots in F_q, sorted by index. a must be nonzero.
std::vector<FieldElem> roots(const FiniteField& F, const UPoly& a);

// Unique polynomial of degree < xs.size() through the points.
UPoly interpolate(const FiniteField& F, std::span<const FieldElem> xs, std::span<const FieldElem> ys);

// Determinant of a square matrix over F_q.
FieldElem determinant(const FiniteField& F, std::vector<std::vector<FieldElem>> m);

}  // namespace uni
}  // namespace polysieve::algebra
