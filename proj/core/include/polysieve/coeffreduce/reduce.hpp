#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "polysieve/coeffreduce/exact_matrix.hpp"
#include "polysieve/structured/structured_f.hpp"

namespace polysieve::coeffreduce {

using algebra::Monomial;
using algebra::SparsePoly;
using structured::StructuredF;

// Exponent vectors (d_Y, d_1, ..., d_n) with d_Y e + sum d_i = D e.
struct MonomialSet {
  int D = 0, e = 0, n = 0;
  std::vector<Monomial> monomials;
  std::size_t size() const noexcept { return monomials.size(); }
};

MonomialSet monomial_set(int D, int e, int n);

// One integer solution (y, x1, ..., xn).
using Solution = std::vector<long long>;

// Rows are solutions, columns the monomials of E evaluated there.
ExactMatrix solution_matrix(const std::vector<Solution>& solutions, const MonomialSet& E);

// F's coefficients on E, with the Y^D entry equal to 1.
std::vector<BigInt> coefficient_vector(const StructuredF& F, const MonomialSet& E);

// All (y, x) with x in [-B, B]^n and y an integer root of F(Y, x).
std::vector<Solution> collect_solutions(const StructuredF& F, long long B);

struct CoeffBounded {
  std::vector<BigInt> b;       // empty in the trivial branch
  bool trivial = false;        // fewer solutions than |E|
  bool null_verified = false;  // C b = 0 exactly
  bool proportional_to_a = false;
  BigInt b_max;
  BigInt hadamard_bound;  // (2B)^{De(|E|-1)} (|E|-1)!
  bool bound_check = false;  // |a| <= |b| <= hadamard_bound
};

struct SecondaryCurve {
  SparsePoly H;  // in (Y, X1, ..., Xn)
  SparsePoly R;  // Res_Y(F, H) in (X1, ..., Xn)
  std::vector<BigInt> b;
  bool null_verified = false;
  bool solutions_on_H = false;
  bool R_nonzero = false;
  std::uint64_t zero_count = 0;  // zeros of R in [-B, B]^n
  double zero_ratio = 0.0;       // zero_count / B^{n-1}
  bool solutions_on_R = false;   // every solution x is a zero of R
};

struct ReduceDecision {
  MonomialSet E;
  std::size_t solutions = 0;
  std::size_t rank = 0;
  std::variant<CoeffBounded, SecondaryCurve> outcome;

  bool certificate_ok() const;
};

ReduceDecision reduce_decision(const StructuredF& F, long long B);
ReduceDecision reduce_decision(const StructuredF& F, long long B, const std::vector<Solution>& solutions);

}  // namespace polysieve::coeffreduce
