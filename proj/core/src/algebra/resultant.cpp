#include "polysieve/algebra/resultant.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace polysieve::algebra {

SparsePoly polynomial_determinant(const std::vector<std::vector<SparsePoly>>& m,
                                  const std::vector<std::string>& variables) {
  const std::size_t n = m.size();
  if (n > 24) throw std::invalid_argument("polynomial_determinant: matrix too large");
  // layer[mask] = signed sum over ways to fill the first popcount(mask) rows
  // using exactly the columns in mask
  std::unordered_map<std::uint32_t, SparsePoly> layer;
  layer.emplace(0u, SparsePoly::constant(variables, 1));
  for (std::size_t row = 0; row < n; ++row) {
    if (m[row].size() != n) throw std::invalid_argument("polynomial_determinant: matrix not square");
    std::unordered_map<std::uint32_t, SparsePoly> next;
    for (const auto& [mask, acc] : layer) {
      for (std::size_t col = 0; col < n; ++col) {
        const std::uint32_t bit = 1u << col;
        if (mask & bit) continue;
        const SparsePoly& entry = m[row][col];
        if (entry.is_zero()) continue;
        // inversions added: already used columns to the right of col
        const int inv = std::popcount(mask & ~((bit << 1) - 1));
        SparsePoly term = acc * entry;
        if (inv & 1) term = -term;
        auto [it, inserted] = next.try_emplace(mask | bit, term);
        if (!inserted) it->second += term;
      }
    }
    layer = std::move(next);
  }
  const std::uint32_t full = n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  auto it = layer.find(full);
  return it == layer.end() ? SparsePoly(variables) : it->second;
}

SparsePoly sylvester_resultant_y(const SparsePoly& G, const SparsePoly& H, std::size_t y_var) {
  if (G.is_zero() || H.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  if (G.variables() != H.variables()) throw std::invalid_argument("resultant: variable lists differ");
  if (y_var >= G.num_vars()) throw std::invalid_argument("resultant: bad Y variable");

  std::vector<std::string> rest;
  std::vector<std::size_t> map(G.num_vars());
  for (std::size_t i = 0; i < G.num_vars(); ++i) {
    if (i == y_var) {
      map[i] = G.num_vars();  // dropped
      continue;
    }
    map[i] = rest.size();
    rest.push_back(G.variables()[i]);
  }
  auto coeffs = [&](const SparsePoly& f) {
    const int d = f.degree_in(y_var);
    std::vector<SparsePoly> out;
    for (int j = d; j >= 0; --j) out.push_back(f.coefficient_in(y_var, static_cast<std::uint32_t>(j)).remap(rest, map));
    return out;
  };
  const auto g = coeffs(G), h = coeffs(H);
  const std::size_t dg = g.size() - 1, dh = h.size() - 1;
  const std::size_t n = dg + dh;
  std::vector<std::vector<SparsePoly>> syl(n, std::vector<SparsePoly>(n, SparsePoly(rest)));
  for (std::size_t r = 0; r < dh; ++r)
    for (std::size_t j = 0; j <= dg; ++j) syl[r][r + j] = g[j];
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t j = 0; j <= dh; ++j) syl[dh + r][r + j] = h[j];
  return polynomial_determinant(syl, rest);
}

}  // namespace polysieve::algebra
