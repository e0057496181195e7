#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "polysieve/coeffreduce/exact_matrix.hpp"
#include "polysieve/coeffreduce/reduce.hpp"
#include "polysieve/counting/counting.hpp"
#include "polysieve/structured/instances.hpp"

using namespace polysieve;
using namespace polysieve::coeffreduce;
using Rational = boost::multiprecision::cpp_rational;

namespace {

ExactMatrix from_ll(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<BigInt>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return ExactMatrix(r);
}

bool all_zero(const std::vector<BigInt>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

structured::StructuredF parse(const std::string& text) {
  std::istringstream in(text);
  return structured::parse_structured(in);
}

// Coefficients in Y of P(Y, x), lowest degree first.
std::vector<Rational> specialize(const algebra::SparsePoly& P, std::span<const long long> x) {
  std::vector<Rational> c;
  for (const auto& [mono, coef] : P.terms()) {
    BigInt v = coef;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::uint32_t k = 0; k < mono[i + 1]; ++k) v *= x[i];
    if (c.size() <= mono[0]) c.resize(mono[0] + 1);
    c[mono[0]] += Rational(v);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::vector<Rational> rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= q * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Degree of gcd over Q; -1 when both vanish identically.
int gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  if (a.empty() && b.empty()) return -1;
  while (!b.empty()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

TEST(MonomialSet, Sizes) {
  EXPECT_EQ(monomial_set(2, 1, 3).size(), 10u);
  const auto E = monomial_set(2, 2, 3);
  EXPECT_EQ(E.size(), 22u);
  std::size_t by_y[3] = {0, 0, 0};
  for (const auto& m : E.monomials) {
    unsigned total = m[0] * 2;
    for (std::size_t i = 1; i < m.size(); ++i) total += m[i];
    EXPECT_EQ(total, 4u);
    ++by_y[m[0]];
  }
  EXPECT_EQ(by_y[2], 1u);
  EXPECT_EQ(by_y[1], 6u);
  EXPECT_EQ(by_y[0], 15u);
  EXPECT_EQ(E.monomials.front(), (algebra::Monomial{2, 0, 0, 0}));
  // the bound needs De >= 2: for De = 1, E is the n + 1 linear monomials
  EXPECT_EQ(monomial_set(1, 1, 3).size(), 4u);
  for (int D = 1; D <= 3; ++D)
    for (int e = 1; e <= 2; ++e) {
      if (D * e < 2) continue;
      std::size_t bound = 1;
      for (int i = 0; i < 4; ++i) bound *= static_cast<std::size_t>(D * e);
      EXPECT_LE(monomial_set(D, e, 3).size(), bound);
    }
}

TEST(ExactMatrix, RankAndDeterminant) {
  const auto I = from_ll({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(rank(I), 3u);
  EXPECT_EQ(determinant(I), BigInt(1));
  EXPECT_EQ(determinant(from_ll({{2, 3}, {5, 7}})), BigInt(-1));
  EXPECT_EQ(rank(from_ll({{1, 2, 3}, {2, 4, 6}, {0, 0, 0}})), 1u);
  EXPECT_EQ(independent_rows(from_ll({{0, 0}, {1, 2}, {2, 4}, {0, 1}})), (std::vector<std::size_t>{1, 3}));
}

TEST(ExactMatrix, CofactorNullVector) {
  const auto M = from_ll({{1, 2}});
  const auto b = cofactor_null_vector(M);
  EXPECT_EQ(b, (std::vector<BigInt>{2, -1}));
  const auto r = rank_and_nullvector(from_ll({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.rank, 1u);
  ASSERT_TRUE(r.b);
  EXPECT_TRUE(proportional(*r.b, {2, -1}));
  EXPECT_TRUE(r.verified);
}

TEST(ExactMatrix, SyntheticRankDeficient) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long long> d(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t k = 6;
    std::vector<std::vector<long long>> rows(k - 1, std::vector<long long>(k));
    for (auto& row : rows)
      for (auto& x : row) x = d(rng);
    // append dependent rows: sums of two existing rows
    rows.push_back(rows[0]);
    for (std::size_t j = 0; j < k; ++j) rows.back()[j] += 3 * rows[1][j];
    rows.push_back(rows[2]);
    const auto M = from_ll(rows);
    const auto r = rank_and_nullvector(M);
    if (r.rank != k - 1) continue;  // random rows happened to be dependent
    ASSERT_TRUE(r.b);
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(all_zero(M.multiply(*r.b)));
    EXPECT_FALSE(all_zero(*r.b));
    const auto ns = integer_null_space(M);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_TRUE(proportional(ns[0], *r.b));
  }
}

TEST(ExactMatrix, NullSpaceBasis) {
  const auto M = from_ll({{1, 1, 0, 0}, {0, 0, 1, 1}});
  const auto ns = integer_null_space(M);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(all_zero(M.multiply(v)));
  EXPECT_FALSE(proportional(ns[0], ns[1]));
}

TEST(Reduce, CoefficientVectorIsKernel) {
  const auto& F = structured::instance_FA();
  const auto E = monomial_set(2, 1, 3);
  const auto a = coefficient_vector(F, E);
  EXPECT_EQ(a.front(), BigInt(1));
  const auto sols = collect_solutions(F, 2);
  EXPECT_EQ(sols.size(), 73u);  // x = 0 gives y = 0; the other 36 solvable x give y = +-r
  EXPECT_TRUE(all_zero(solution_matrix(sols, E).multiply(a)));
}

TEST(Reduce, FAAtB2Certificate) {
  const auto& F = structured::instance_FA();
  const auto dec = reduce_decision(F, 2);
  EXPECT_EQ(dec.E.size(), 10u);
  EXPECT_TRUE(dec.certificate_ok());
  ASSERT_TRUE(std::holds_alternative<CoeffBounded>(dec.outcome));
  const auto& cb = std::get<CoeffBounded>(dec.outcome);
  EXPECT_FALSE(cb.trivial);
  EXPECT_EQ(dec.rank, 9u);
  EXPECT_TRUE(cb.null_verified);
  EXPECT_TRUE(cb.proportional_to_a);
  EXPECT_TRUE(cb.bound_check);
}

TEST(Reduce, TrivialWhenFewSolutions) {
  const auto dec = reduce_decision(structured::instance_FA(), 2, {});
  ASSERT_TRUE(std::holds_alternative<CoeffBounded>(dec.outcome));
  EXPECT_TRUE(std::get<CoeffBounded>(dec.outcome).trivial);
  EXPECT_TRUE(dec.certificate_ok());
}

TEST(Reduce, SecondaryCurveBranch) {
  // Y^2 - 3 X1^2: only x1 = 0, y = 0 solves, so every row sits on x2^2 alone
  const auto F = parse("2 1 1 2\nvars X1 X2\n-3 2 0\n");
  const long long B = 3;
  const auto dec = reduce_decision(F, B);
  EXPECT_EQ(dec.solutions, 7u);
  EXPECT_EQ(dec.E.size(), 6u);
  ASSERT_TRUE(std::holds_alternative<SecondaryCurve>(dec.outcome));
  const auto& sc = std::get<SecondaryCurve>(dec.outcome);
  EXPECT_TRUE(sc.null_verified);
  EXPECT_TRUE(sc.solutions_on_H);
  EXPECT_TRUE(sc.R_nonzero);
  EXPECT_TRUE(sc.solutions_on_R);
  EXPECT_TRUE(dec.certificate_ok());
  // R(x) = 0 exactly when F(Y, x) and H(Y, x) share a root
  counting::for_each_in_box(2, 3, [&](std::span<const long long> x) {
    const bool r_zero = sc.R.evaluate(x) == 0;
    const auto f = specialize(F.polynomial(), x), h = specialize(sc.H, x);
    EXPECT_EQ(r_zero, gcd_degree(f, h) != 0) << x[0] << " " << x[1];
  });
}
