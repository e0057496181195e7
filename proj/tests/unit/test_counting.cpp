#include <gtest/gtest.h>

#include "polysieve/counting/counting.hpp"
#include "polysieve/structured/instances.hpp"
#include "test_support.hpp"

using namespace polysieve;
using namespace polysieve::counting;
using testing_support::fixtures;
using testing_support::poly;

namespace {
structured::StructuredF named(const std::string& s) { return *structured::bundled_instance(s); }
}  // namespace

TEST(NuP, Fixtures) {
  for (const auto& f : fixtures()["nu_p"]) {
    const auto k = f["k"].get<std::vector<long long>>();
    EXPECT_EQ(nu_p(named(f["instance"]), k, f["p"]), f["value"].get<int>());
  }
}

TEST(NuP, BoundedByMdAndMatchesTable) {
  for (const auto& name : {"F_A", "F_B", "F_C"}) {
    const auto F = named(name);
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
      const FiberTable t(F, p);
      const auto n = static_cast<long long>(p);
      for (long long a = 0; a < n; a += 2)
        for (long long b = 0; b < n; ++b)
          for (long long c = 0; c < n; c += 3) {
            const long long k[] = {a, b, c};
            const int v = nu_p(F, k, p);
            EXPECT_EQ(t.at(k), v);
            EXPECT_LE(v, F.y_degree());
          }
    }
  }
}

TEST(CountN, Fixtures) {
  for (const auto& f : fixtures()["count_N"]) {
    const auto F = named(f["instance"]);
    EXPECT_EQ(count_N(F, {f["B"].get<long long>(), 3}), f["value"].get<std::uint64_t>()) << f.dump();
  }
}

// divisor search against a plain scan over |y| <= Cauchy bound
TEST(CountN, DivisorSearchMatchesScan) {
  for (const auto& name : {"F_A", "F_B", "F_C", "F_D"}) {
    const auto F = named(name);
    for_each_in_box(3, 3, [&](std::span<const long long> x) {
      std::vector<BigInt> pt{0, x[0], x[1], x[2]};
      BigInt bound = 1;
      for (int i = 1; i <= F.d(); ++i) bound = std::max(bound, BigInt(abs(F.form(i).evaluate(x))) + 1);
      std::vector<BigInt> scan;
      for (BigInt y = -bound; y <= bound; ++y) {
        pt[0] = y;
        if (F.polynomial().evaluate(std::span<const BigInt>(pt)) == 0) scan.push_back(y);
      }
      EXPECT_EQ(integer_roots(F, x), scan);
    });
  }
}

TEST(CountS, DominatesN) {
  for (const auto& name : {"F_A", "F_C", "F_D"}) {
    const auto F = named(name);
    for (long long B : {1, 2, 3}) {
      const auto S = count_S(F, {B, 3}, {static_cast<double>(B), 6});
      EXPECT_GE(S.inner, count_N(F, {B, 3}));
      EXPECT_GE(S.value, static_cast<double>(count_N(F, {B, 3})));
    }
  }
  EXPECT_GE(count_S(named("F_A"), {2, 3}, {2.0, 6}).value, 37.0);
}

TEST(ProjectivePoints, Examples) {
  const auto F3 = algebra::FiniteField::prime_field(3);
  const SparsePoly q = poly("vars Z X1; 1 2 0; -1 0 2");
  EXPECT_EQ(projective_points(std::span(&q, 1), F3).size(), 2u);
  EXPECT_EQ(projective_points(std::span<const SparsePoly>{}, F3, 2).size(), 4u);
  const SparsePoly xs[] = {poly("vars X1 X2; 1 1 0"), poly("vars X1 X2; 1 0 1")};
  EXPECT_TRUE(projective_points(xs, F3).empty());
  const SparsePoly nh = poly("vars X1 X2; 1 2 0; 1 0 1");
  EXPECT_THROW(projective_points(std::span(&nh, 1), F3), std::invalid_argument);
}

TEST(SchwartzZippel, Examples) {
  EXPECT_EQ(schwartz_zippel_count(poly("vars X1 X2; 1 1 0"), 3), 7u);
  EXPECT_EQ(schwartz_zippel_count(poly("vars X1 X2; 1 2 0; 1 0 2"), 5), 1u);
  EXPECT_EQ(schwartz_zippel_count(poly("vars X1 X2; 1 1 1"), 2), 9u);
  EXPECT_THROW(schwartz_zippel_count(SparsePoly({"X1"}), 2), std::invalid_argument);
}

TEST(SchwartzZippel, LastFormRatioRecorded) {
  // f_d has O(B^{n-1}) zeros; C is only measured
  for (const auto& name : {"F_A", "F_D"}) {
    const auto F = named(name);
    for (long long B : {4, 8}) {
      const double ratio = static_cast<double>(schwartz_zippel_count(F.last_form(), B)) / double(B * B);
      EXPECT_LT(ratio, 50.0) << name;
    }
  }
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(12), 2);
  EXPECT_EQ(omega(1), 0);
  EXPECT_EQ(omega(30), 3);
  EXPECT_EQ(omega(-30), 3);
  EXPECT_EQ(omega(BigInt("618970019642690137449562111") * 9), 2);
  EXPECT_THROW(omega(0), std::invalid_argument);
}

// sum_p (nu_p(k) - 1) >= (m - 1)(P - omega(f_d(k))) for solvable k, f_d(k) != 0
TEST(SieveLowerBound, PerK) {
  for (const auto& name : {"F_A", "F_C"}) {
    const auto F = named(name);
    const std::uint64_t primes[] = {11, 13, 17, 19};
    for_each_in_box(3, 6, [&](std::span<const long long> k) {
      const BigInt fd = F.last_form().evaluate(k);
      if (fd == 0 || integer_roots(F, k).empty()) return;
      long long s = 0;
      for (auto p : primes) s += nu_p(F, k, p) - 1;
      EXPECT_GE(s, (F.m() - 1) * (4 - omega(fd)));
    });
  }
}
