#pragma once

#include <vector>

#include "polysieve/algebra/sparse_poly.hpp"

namespace polysieve::algebra {

// Res_Y(G, H): determinant of the Sylvester matrix in the variable y_var,
// G rows first, each row listing coefficients from the highest power down.
// The result is a polynomial in the remaining variables (y_var removed).
SparsePoly sylvester_resultant_y(const SparsePoly& G, const SparsePoly& H, std::size_t y_var = 0);

// Determinant of a square matrix of integer polynomials, by row expansion
// over column subsets (division free).
SparsePoly polynomial_determinant(const std::vector<std::vector<SparsePoly>>& m,
                                  const std::vector<std::string>& variables);

}  // namespace polysieve::algebra
