#include "polysieve/dualgeom/quadric.hpp"

#include <boost/multiprecision/integer.hpp>
#include <stdexcept>

namespace polysieve::dualgeom {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Twice the Gram matrix, so entries stay integral.
Matrix gram2(const SparsePoly& q) {
  if (q.total_degree() != 2 || !q.is_homogeneous()) throw std::invalid_argument("expected a quadratic form");
  const std::size_t v = q.num_vars();
  Matrix A(v, std::vector<BigInt>(v, 0));
  for (const auto& [mono, c] : q.terms()) {
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < v; ++i)
      for (std::uint32_t k = 0; k < mono[i]; ++k) at.push_back(i);
    if (at[0] == at[1]) {
      A[at[0]][at[0]] = 2 * c;
    } else {
      A[at[0]][at[1]] = c;
      A[at[1]][at[0]] = c;
    }
  }
  return A;
}

BigInt det(Matrix a) {
  // Bareiss elimination
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Matrix minor_of(const Matrix& a, std::size_t r, std::size_t c) {
  Matrix m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == r) continue;
    std::vector<BigInt> row;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != c) row.push_back(a[i][j]);
    m.push_back(std::move(row));
  }
  return m;
}

std::size_t rank(Matrix a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * a[r][c] - a[r][j] * f;
    }
    ++r;
  }
  return r;
}

bool is_square(const BigInt& x) {
  if (x < 0) return false;
  const BigInt s = boost::multiprecision::sqrt(x);
  return s * s == x;
}

}  // namespace

BigInt dual_degree(int m, int d, int e, int n) {
  if (m < 1 || d < 1 || e < 1 || n < 1) throw std::invalid_argument("dual_degree: parameters must be positive");
  const BigInt D = BigInt(m) * d * e;
  BigInt r = D;
  for (int i = 1; i < n; ++i) r *= D - 1;
  return r;
}

SparsePoly quadric_dual(const StructuredF& F) {
  if (F.weighted_degree() != 2) throw std::invalid_argument("quadric_dual: needs mde = 2");
  const SparsePoly G = structured::unweighted_form(F);
  const Matrix A = gram2(G);
  const std::size_t v = A.size();
  if (det(A) == 0) throw std::invalid_argument("quadric_dual: degenerate quadratic form");

  std::vector<std::string> vars{"U_Y"};
  for (int i = 1; i <= F.n(); ++i) vars.push_back("U" + std::to_string(i));
  SparsePoly dual(vars);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i; j < v; ++j) {
      // adj(A)_{ij} = (-1)^{i+j} det(A without row j, column i)
      BigInt c = det(minor_of(A, j, i));
      if ((i + j) % 2) c = -c;
      if (i != j) c *= 2;
      if (c == 0) continue;
      algebra::Monomial mono(v, 0);
      ++mono[i];
      ++mono[j];
      dual.add_term(mono, c);
    }
  BigInt g = 0;
  for (const auto& [mono, c] : dual.terms()) g = gcd(g, c);
  // leading term: largest exponent vector, i.e. the U_Y^2 end of the map
  if (dual.terms().rbegin()->second < 0) g = -g;
  SparsePoly out(vars);
  for (const auto& [mono, c] : dual.terms()) out.add_term(mono, c / g);
  return out;
}

SparsePoly dual_at_zero(const SparsePoly& dual) {
  const std::size_t v = dual.num_vars();
  std::vector<std::string> vars(dual.variables().begin() + 1, dual.variables().end());
  SparsePoly out(vars);
  for (const auto& [mono, c] : dual.terms()) {
    if (mono[0] != 0) continue;
    out.add_term(algebra::Monomial(mono.begin() + 1, mono.begin() + static_cast<std::ptrdiff_t>(v)), c);
  }
  return out;
}

bool quadratic_form_has_linear_factor(const SparsePoly& q) {
  if (q.is_zero()) return true;
  const Matrix A = gram2(q);
  const std::size_t r = rank(A);
  if (r <= 1) return true;
  if (r > 2) return false;
  // a rank 2 form restricts nondegenerately to some coordinate plane
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      const BigInt d = A[i][i] * A[j][j] - A[i][j] * A[j][i];
      if (d != 0) return is_square(-d);
    }
  return false;
}

}  // namespace polysieve::dualgeom
