#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polysieve/algebra/zero_search.hpp"
#include "polysieve/sieve/weight.hpp"
#include "polysieve/structured/structured_f.hpp"

namespace polysieve::counting {

using algebra::SparsePoly;
using structured::StructuredF;

// The cube [-B, B]^n.
struct BoxSpec {
  long long B = 0;
  int n = 1;
};

// Number of distinct y in F_p with F(y, k) = 0.
int nu_p(const StructuredF& F, std::span<const long long> k, std::uint64_t p);

// nu_p over all of F_p^n, row-major with the first coordinate slowest.
class FiberTable {
 public:
  FiberTable(const StructuredF& F, std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }
  std::size_t index(std::span<const long long> k) const;
  int at(std::span<const long long> k) const { return values_[index(k)]; }
  int at_index(std::size_t i) const { return values_[i]; }

 private:
  std::uint64_t p_;
  int n_;
  std::vector<std::uint8_t> values_;
};

// Distinct integer roots of F(Y, x), ascending. Uses the divisors of f_d(x)
// (y = 0 when f_d(x) = 0 together with the divisors of the lowest nonzero
// coefficient of the quotient by Y).
std::vector<BigInt> integer_roots(const StructuredF& F, std::span<const long long> x);

// N(F, B): x in the box with an integer root y.
std::uint64_t count_N(const StructuredF& F, const BoxSpec& box);

struct SmoothedCount {
  double value = 0.0;
  std::uint64_t inner = 0;  // solvable points with W = 1 exactly, counted exactly
  double error_bound = 0.0;  // compensated summation bound on the transition shell
};

// S(F, B) = sum of W(k) over solvable k in the weight support.
SmoothedCount count_S(const StructuredF& F, const BoxSpec& box, const sieve::SmoothWeightSpec& w);

// All projective zeros, normalized (first nonzero coordinate = 1).
std::vector<algebra::ProjectivePoint> projective_points(std::span<const SparsePoly> polys,
                                                        const algebra::FiniteField& field, std::size_t nvars = 0);

// Integer zeros of f in [-B, B]^{num_vars(f)}.
std::uint64_t schwartz_zippel_count(const SparsePoly& f, long long B);

// Number of distinct prime divisors of |N|.
int omega(const BigInt& N);

// Calls body(k) for every k in [-R, R]^n, first coordinate slowest.
template <class Body>
void for_each_in_box(int n, long long R, Body&& body) {
  std::vector<long long> k(static_cast<std::size_t>(n), -R);
  if (R < 0) return;
  for (;;) {
    body(std::span<const long long>(k));
    int i = n - 1;
    while (i >= 0 && k[static_cast<std::size_t>(i)] == R) {
      k[static_cast<std::size_t>(i)] = -R;
      --i;
    }
    if (i < 0) return;
    ++k[static_cast<std::size_t>(i)];
  }
}

}  // namespace polysieve::counting
