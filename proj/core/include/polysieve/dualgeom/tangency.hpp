#pragma once

#include <span>
#include <vector>

#include "polysieve/structured/structured_f.hpp"

namespace polysieve::dualgeom {

using algebra::SparsePoly;
using structured::StructuredF;

// H_0 = F(Z^e, X), the consecutive 2x2 minors of [grad H_0 | (0, u)]
//   H_1 = u_1 dH_0/dZ,  H_i = u_i dH_0/dX_{i-1} - u_{i-1} dH_0/dX_i  (2 <= i <= n),
// and H_{n+1} = <X, u>; n + 2 polynomials in (Z, X1, ..., Xn).
//
// When some u_i vanish these minors can all vanish at a point where the
// gradient is not proportional to (0, u), so classification uses the full
// rank condition instead; see expsum::Classifier.
std::vector<SparsePoly> tangency_polys(const StructuredF& F, std::span<const long long> u);

}  // namespace polysieve::dualgeom
