#include "polysieve/dualgeom/tangency.hpp"

#include <algorithm>
#include <stdexcept>

namespace polysieve::dualgeom {

std::vector<SparsePoly> tangency_polys(const StructuredF& F, std::span<const long long> u) {
  const std::size_t n = static_cast<std::size_t>(F.n());
  if (u.size() != n) throw std::invalid_argument("tangency_polys: u has wrong length");
  if (std::all_of(u.begin(), u.end(), [](long long v) { return v == 0; }))
    throw std::invalid_argument("tangency_polys: u must be nonzero");
  const SparsePoly G = structured::unweighted_form(F);
  std::vector<SparsePoly> grad;
  for (std::size_t v = 0; v <= n; ++v) grad.push_back(G.derivative(v));

  std::vector<SparsePoly> H{G};
  H.push_back(grad[0] * BigInt(u[0]));
  for (std::size_t i = 2; i <= n; ++i) H.push_back(grad[i - 1] * BigInt(u[i - 1]) - grad[i] * BigInt(u[i - 2]));
  SparsePoly lin(G.variables());
  for (std::size_t i = 0; i < n; ++i) lin += SparsePoly::variable(G.variables(), i + 1) * BigInt(u[i]);
  H.push_back(std::move(lin));
  return H;
}

}  // namespace polysieve::dualgeom
