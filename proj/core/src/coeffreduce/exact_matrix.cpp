#include "polysieve/coeffreduce/exact_matrix.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace polysieve::coeffreduce {

using Rational = boost::multiprecision::cpp_rational;

ExactMatrix::ExactMatrix(const std::vector<std::vector<BigInt>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

std::vector<BigInt> ExactMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

BigInt ExactMatrix::max_abs() const {
  BigInt m = 0;
  for (const auto& x : data_) m = std::max(m, BigInt(abs(x)));
  return m;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& which) const {
  ExactMatrix out(which.size(), cols_);
  for (std::size_t r = 0; r < which.size(); ++r)
    for (std::size_t j = 0; j < cols_; ++j) out.at(r, j) = at(which[r], j);
  return out;
}

ExactMatrix ExactMatrix::drop_column(std::size_t c) const {
  ExactMatrix out(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, k = 0; j < cols_; ++j)
      if (j != c) out.at(i, k++) = at(i, j);
  return out;
}

std::vector<BigInt> ExactMatrix::multiply(const std::vector<BigInt>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("ExactMatrix::multiply: size mismatch");
  std::vector<BigInt> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

// Bareiss forward elimination with row pivoting; returns rank, and the
// signed determinant when square and nonsingular.
std::size_t bareiss(ExactMatrix a, BigInt* det) {
  const std::size_t R = a.rows(), C = a.cols();
  BigInt prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a.at(piv, c) == 0) ++piv;
    if (piv == R) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < C; ++j) std::swap(a.at(r, j), a.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) a.at(i, j) = (a.at(i, j) * a.at(r, c) - a.at(i, c) * a.at(r, j)) / prev;
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    ++r;
  }
  if (det) *det = (R == C && r == R) ? BigInt(sign * prev) : BigInt(0);
  return r;
}

BigInt content(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return bareiss(m, nullptr); }

BigInt determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  BigInt d;
  bareiss(m, &d);
  return d;
}

std::vector<std::size_t> independent_rows(const ExactMatrix& m) {
  // integer echelon basis of the rows kept so far
  std::vector<std::vector<BigInt>> basis;
  std::vector<std::size_t> pivots, kept;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t c = pivots[b];
      if (r[c] == 0) continue;
      const BigInt f = r[c], g = basis[b][c];
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] * g - basis[b][j] * f;
      const BigInt ct = content(r);
      if (ct > 1)
        for (auto& x : r) x /= ct;
    }
    std::size_t c = 0;
    while (c < r.size() && r[c] == 0) ++c;
    if (c == r.size()) continue;
    basis.push_back(std::move(r));
    pivots.push_back(c);
    kept.push_back(i);
  }
  return kept;
}

std::vector<BigInt> cofactor_null_vector(const ExactMatrix& m) {
  if (m.rows() + 1 != m.cols()) throw std::invalid_argument("cofactor_null_vector: need a (k-1) x k matrix");
  std::vector<BigInt> b(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    b[j] = determinant(m.drop_column(j));
    if (j % 2) b[j] = -b[j];
  }
  return b;
}

std::vector<std::vector<BigInt>> integer_null_space(const ExactMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m.at(i, j);
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[r], a[piv]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < C; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(C, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(C, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][f];
    BigInt den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    std::vector<BigInt> iv(C);
    for (std::size_t j = 0; j < C; ++j) iv[j] = boost::multiprecision::numerator(Rational(v[j] * den));
    const BigInt ct = content(iv);
    if (ct > 1)
      for (auto& x : iv) x /= ct;
    basis.push_back(std::move(iv));
  }
  return basis;
}

RankNull rank_and_nullvector(const ExactMatrix& m) {
  RankNull out;
  out.rank = rank(m);
  if (m.cols() == 0 || out.rank + 1 != m.cols()) return out;
  const auto rows = independent_rows(m);
  auto b = cofactor_null_vector(m.select_rows(rows));
  const auto Cb = m.multiply(b);
  out.verified = std::all_of(Cb.begin(), Cb.end(), [](const BigInt& x) { return x == 0; });
  out.b = std::move(b);
  return out;
}

bool proportional(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.size() != b.size()) return false;
  // all 2x2 minors with a fixed nonzero pivot
  std::size_t k = 0;
  while (k < a.size() && a[k] == 0) ++k;
  if (k == a.size()) return true;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[k] * b[j] != a[j] * b[k]) return false;
  return true;
}

}  // namespace polysieve::coeffreduce
