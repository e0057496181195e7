#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "polysieve/expsum/classify.hpp"
#include "polysieve/expsum/direct.hpp"
#include "polysieve/expsum/exp_sum_table.hpp"
#include "polysieve/expsum/weil.hpp"
#include "polysieve/structured/instances.hpp"
#include "test_support.hpp"

using namespace polysieve;
using namespace polysieve::expsum;
using structured::instance_FA;
using structured::instance_FC;
using testing_support::fixtures;

namespace {

std::vector<long long> random_u(std::mt19937_64& rng, long long range) {
  std::uniform_int_distribution<long long> d(-range, range);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST(GTable, OriginValueAndShape) {
  const auto t = g_table(instance_FA(), 5);
  EXPECT_EQ(t.values.size(), 125u);
  const long long zero[] = {0, 0, 0};
  EXPECT_NEAR(t.at(zero).real(), 20.0, t.err_budget);
  EXPECT_NEAR(t.at(zero).imag(), 0.0, t.err_budget);
  const auto inv = inverse_at_origin(t);
  EXPECT_NEAR(inv.value.real(), 0.0, inv.error);  // nu_5(0) - 1 = 0
}

TEST(GTable, ConjugateSymmetry) {
  const auto t = g_table(instance_FC(), 7);
  counting::for_each_in_box(3, 3, [&](std::span<const long long> u) {
    const long long neg[] = {-u[0], -u[1], -u[2]};
    EXPECT_NEAR(std::abs(t.at(neg) - std::conj(t.at(u))), 0.0, 2 * t.err_budget);
  });
}

TEST(GTable, Fixtures) {
  for (const auto& f : fixtures()["g"]) {
    const auto F = *structured::bundled_instance(f["instance"].get<std::string>());
    const auto t = g_table(F, f["p"]);
    const auto u = f["u"].get<std::vector<long long>>();
    const std::complex<double> want(f["re"], f["im"]);
    EXPECT_LE(std::abs(t.at(u) - want), t.err_budget + 1e-9) << f.dump();
    const auto d = g_direct(F, u, f["p"]);
    EXPECT_LE(std::abs(d.value - want), d.error + 1e-9) << f.dump();
  }
}

TEST(GDirect, BoundAtP3) {
  const long long u[] = {1, 0, 0};
  EXPECT_LE(std::abs(g_direct(instance_FA(), u, 3).value), 2 * std::pow(3.0, 1.5));
}

TEST(GTable, AgreesWithDirectEverywhere) {
  for (const auto& F : {instance_FA(), instance_FC()}) {
    for (std::uint64_t p : {3u, 5u, 7u}) {
      const counting::FiberTable fib(F, p);
      const auto t = g_table(fib);
      const auto tol = 1e-6 * std::pow(double(p), 1.5);
      for (std::size_t i = 0; i < t.values.size(); ++i) {
        const long long u[] = {static_cast<long long>(i / (p * p)), static_cast<long long>(i / p % p),
                               static_cast<long long>(i % p)};
        const auto d = g_direct(fib, u);
        ASSERT_LE(std::abs(d.value - t.values[i]), tol);
        ASSERT_LE(std::abs(d.value - t.values[i]), d.error + t.err_budget);
      }
    }
  }
}

TEST(GTable, Parseval) {
  for (std::uint64_t p : {5u, 11u}) {
    const counting::FiberTable fib(instance_FA(), p);
    const auto t = g_table(fib);
    double lhs = 0.0, rhs = 0.0;
    for (const auto& v : t.values) lhs += std::norm(v);
    for (auto v : fib.values()) rhs += (v - 1.0) * (v - 1.0);
    rhs *= std::pow(double(p), 3);
    EXPECT_NEAR(lhs, rhs, 1e-9 * rhs);
  }
}

TEST(GTable, BinaryDumpRoundTrip) {
  const auto t = g_table(instance_FA(), 5);
  std::stringstream buf;
  write_table_binary(buf, t);
  EXPECT_EQ(buf.str().size(), 24u + 16u * 125u);
  const auto r = read_table_binary(buf);
  EXPECT_EQ(r.p, t.p);
  EXPECT_EQ(r.n, t.n);
  EXPECT_EQ(r.err_budget, t.err_budget);
  EXPECT_EQ(r.values, t.values);
}

TEST(GComposite, OriginProduct) {
  const auto t5 = g_table(instance_FA(), 5), t13 = g_table(instance_FA(), 13);
  const long long u[] = {65, 130, -65};
  const long long zero[] = {0, 0, 0};
  const auto v = g_composite(t5, t13, u);
  EXPECT_LE(std::abs(v.value - t5.at(zero) * t13.at(zero)), v.error + 1e-9);
  EXPECT_THROW(g_composite(t5, t5, u), std::invalid_argument);
}

TEST(GComposite, Fixtures) {
  for (const auto& f : fixtures()["g_pq"]) {
    const auto u = f["u"].get<std::vector<long long>>();
    const std::complex<double> want(f["re"], f["im"]);
    const auto F = *structured::bundled_instance(f["instance"].get<std::string>());
    const double L = f["p"].get<double>() * f["q"].get<double>();
    const auto v = g_composite(F, u, f["p"], f["q"]);
    EXPECT_LE(std::abs(v.value - want), 1e-6 * std::pow(L, 1.5)) << f.dump();
  }
}

TEST(GComposite, MatchesDefiningSum) {
  for (const auto& f : fixtures()["g_pq"]) {
    const auto u = f["u"].get<std::vector<long long>>();
    const auto F = *structured::bundled_instance(f["instance"].get<std::string>());
    const std::complex<double> want(f["re"], f["im"]);
    const auto d = g_pq_direct(F, u, f["p"], f["q"]);
    EXPECT_LE(std::abs(d.value - want), d.error + 1e-9) << f.dump();
  }
  const long long u[] = {1, 2, 3};
  EXPECT_THROW(g_pq_direct(instance_FA(), u, 3, 3), std::invalid_argument);
}

TEST(GComposite, ModulusIsProductOfModuli) {
  std::mt19937_64 rng(5);
  const auto t5 = g_table(instance_FA(), 5), t13 = g_table(instance_FA(), 13);
  for (int i = 0; i < 100; ++i) {
    const auto u = random_u(rng, 1000);
    const auto v = g_composite(t5, t13, u);
    // 13^{-1} = 2 mod 5 and 5^{-1} = 8 mod 13
    const long long u5[] = {u[0] * 2, u[1] * 2, u[2] * 2};
    const long long u13[] = {u[0] * 8, u[1] * 8, u[2] * 8};
    EXPECT_NEAR(std::abs(v.value), std::abs(t5.at(u5)) * std::abs(t13.at(u13)), v.error + 1e-9);
  }
}

TEST(Split, SolutionSumIdentity) {
  for (const auto& f : fixtures()["solution_sum"]) {
    const auto u = f["u"].get<std::vector<long long>>();
    const std::complex<double> want(f["re"], f["im"]);
    const auto s = solution_sum(instance_FC(), u, f["p"]);
    EXPECT_LE(std::abs(s.value - want), s.error + 1e-9);
    const auto d = g_direct(instance_FC(), u, f["p"]);
    const bool zero = u == std::vector<long long>{0, 0, 0};
    EXPECT_LE(std::abs(d.value + (zero ? 125.0 : 0.0) - s.value), d.error + s.error);
  }
}

TEST(Split, MatchesUnsplitSum) {
  std::mt19937_64 rng(9);
  for (std::uint64_t p : {5u, 13u}) {
    std::vector<std::vector<long long>> us{{0, 0, 0}};
    for (int i = 0; i < 10; ++i) us.push_back(random_u(rng, 100));
    for (const auto& u : us) {
      const auto split = split_components(instance_FC(), u, p);
      const auto whole = solution_sum(instance_FC(), u, p);
      EXPECT_LE(std::abs(split.total.value - whole.value), 1e-6 * std::pow(double(p), 1.5));
    }
  }
}

TEST(Split, ComponentSizes) {
  for (const auto& f : fixtures()["split_sizes"]) {
    const long long zero[] = {0, 0, 0};
    const auto s = split_components(instance_FC(), zero, f["p"]);
    EXPECT_EQ(s.f, f["f"].get<std::uint64_t>());
    EXPECT_EQ(s.sizes, f["sizes"].get<std::vector<std::uint64_t>>());
    std::uint64_t total = 0;
    for (auto x : s.sizes) total += x;
    // at u = 0 the split reproduces |W| = sum_a nu_p(a) times f
    const auto whole = solution_sum(instance_FC(), zero, f["p"]);
    EXPECT_NEAR(double(total) / double(s.f), whole.value.real(), 1e-9);
  }
}

TEST(Split, DegenerateSplitForFA) {
  const long long u[] = {1, 2, 3};
  const auto s = split_components(instance_FA(), u, 7);
  EXPECT_EQ(s.f, 1u);
  EXPECT_LE(std::abs(s.total.value - solution_sum(instance_FA(), u, 7).value), 1e-9);
}

TEST(Split, ScalingInvariance) {
  std::mt19937_64 rng(13);
  const std::uint64_t p = 13;
  for (int i = 0; i < 5; ++i) {
    auto u = random_u(rng, 12);
    if (u == std::vector<long long>{0, 0, 0}) u[0] = 1;
    const auto base = split_components(instance_FC(), u, p);
    for (long long a = 2; a < 13; a += 3) {
      const std::vector<long long> au{a * u[0], a * u[1], a * u[2]};
      const auto s = split_components(instance_FC(), au, p);
      for (std::size_t j = 0; j < s.g.size(); ++j)
        EXPECT_LE(std::abs(s.g[j].value - base.g[j].value), s.g[j].error + base.g[j].error);
    }
  }
}

TEST(Classify, Examples) {
  const long long u0[] = {5, 10, 20}, u1[] = {1, 0, 0}, u2[] = {1, 2, 0};
  EXPECT_EQ(classify(instance_FA(), u0, 5).type, HyperplaneType::TypeZero);
  const auto good = classify(instance_FA(), u1, 5, 2);
  EXPECT_EQ(good.type, HyperplaneType::Good);
  EXPECT_EQ(good.k_searched, 2u);
  const auto bad = classify(instance_FA(), u2, 5, 2);
  ASSERT_EQ(bad.type, HyperplaneType::Bad);
  ASSERT_TRUE(bad.witness);
  EXPECT_TRUE(verify_tangency_witness(instance_FA(), *bad.witness));
}

TEST(Classify, RefusesBadReduction) {
  EXPECT_THROW(Classifier(structured::instance_Fsing(), 5), BadReductionError);
  EXPECT_THROW(Classifier(instance_FA(), 2), std::invalid_argument);
}

TEST(Classify, ScalingInvariance) {
  const Classifier c(instance_FC(), 13);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    const auto u = random_u(rng, 12);
    const auto t = c.classify(u).type;
    for (long long a = 2; a < 13; a += 4) {
      const std::vector<long long> au{a * u[0], a * u[1], a * u[2]};
      EXPECT_EQ(c.classify(au).type, t);
    }
  }
}

TEST(Classify, TableMatchesDirectCalls) {
  const Classifier c(instance_FA(), 7);
  const ClassificationTable table(c);
  EXPECT_EQ(table.count(HyperplaneType::TypeZero), 1u);
  counting::for_each_in_box(3, 3, [&](std::span<const long long> u) { EXPECT_EQ(table.at(u), c.classify(u).type); });
  for (const auto& w : table.bad_witnesses()) EXPECT_TRUE(verify_tangency_witness(instance_FA(), w));
}

TEST(Weil, Report) {
  const std::vector<std::vector<long long>> sample{{0, 0, 0}, {1, 0, 0}, {1, 2, 0}, {2, 3, 4}};
  const auto r = weil_check(instance_FA(), 5, sample);
  ASSERT_EQ(r.entries.size(), 4u);
  EXPECT_NEAR(r.entries[0].ratio, 20.0 / std::pow(5.0, 2.5), 1e-9);
  EXPECT_EQ(r.entries[0].type, HyperplaneType::TypeZero);
  EXPECT_EQ(r.entries[1].type, HyperplaneType::Good);
  EXPECT_EQ(r.entries[2].type, HyperplaneType::Bad);
  EXPECT_EQ(r.counts[0] + r.counts[1] + r.counts[2], sample.size());
  EXPECT_EQ(r.flagged, 0u);
}
