#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polysieve/bigint.hpp"

namespace polysieve::coeffreduce {

// Dense integer matrix, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit ExactMatrix(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<BigInt> row(std::size_t i) const;
  BigInt max_abs() const;

  ExactMatrix select_rows(const std::vector<std::size_t>& which) const;
  ExactMatrix drop_column(std::size_t j) const;
  std::vector<BigInt> multiply(const std::vector<BigInt>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

// Fraction-free (Bareiss) elimination.
std::size_t rank(const ExactMatrix& m);
BigInt determinant(const ExactMatrix& m);

// Rows kept greedily in order whenever they raise the rank.
std::vector<std::size_t> independent_rows(const ExactMatrix& m);

// For a (k-1) x k matrix: b_j = (-1)^j det(M without column j), 0-based.
// M b = 0 by Laplace expansion.
std::vector<BigInt> cofactor_null_vector(const ExactMatrix& m);

// Primitive integer basis of the right null space, one vector per free
// column of the reduced echelon form, in column order.
std::vector<std::vector<BigInt>> integer_null_space(const ExactMatrix& m);

struct RankNull {
  std::size_t rank = 0;
  std::optional<std::vector<BigInt>> b;  // cofactor null vector when rank = cols - 1
  bool verified = false;                 // C b = 0 checked exactly
};

RankNull rank_and_nullvector(const ExactMatrix& m);

bool proportional(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

}  // namespace polysieve::coeffreduce
