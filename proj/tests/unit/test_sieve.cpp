#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polysieve/expsum/classify.hpp"
#include "polysieve/expsum/exp_sum_table.hpp"
#include "polysieve/sieve/poisson.hpp"
#include "polysieve/sieve/sieve_bound.hpp"
#include "polysieve/sieve/sieving_set.hpp"
#include "polysieve/sieve/weight.hpp"
#include "polysieve/structured/instances.hpp"
#include "test_support.hpp"

using namespace polysieve;
using namespace polysieve::sieve;
using structured::instance_FA;
using structured::instance_FC;
using testing_support::fixtures;

TEST(Weight, BumpProfile) {
  EXPECT_EQ(bump(0.0), 1.0);
  EXPECT_EQ(bump(1.0), 1.0);
  EXPECT_EQ(bump(-0.7), 1.0);
  EXPECT_EQ(bump(2.0), 0.0);
  EXPECT_EQ(bump(5.0), 0.0);
  EXPECT_NEAR(bump(1.5), 0.5, 1e-15);
  for (double t = 1.0; t < 2.0; t += 0.01) EXPECT_GE(bump(t), bump(t + 0.01));
}

TEST(Weight, ProductWeight) {
  const SmoothWeightSpec w{10.0, 6};
  const long long inner[] = {10, -10, 0}, outer[] = {20, 0, 0}, mid[] = {15, 0, 0};
  EXPECT_EQ(weight_eval_int(w, inner), 1.0);
  EXPECT_EQ(weight_eval_int(w, outer), 0.0);
  EXPECT_NEAR(weight_eval_int(w, mid), 0.5, 1e-15);
  const double x[] = {15.0, 15.0};
  EXPECT_NEAR(weight_eval(w, x), 0.25, 1e-15);
}

TEST(Weight, FourierFixtures) {
  for (const auto& f : fixtures()["psi_hat"]) {
    const auto v = bump_fourier(f["xi"]);
    EXPECT_NEAR(v.value, f["value"].get<double>(), v.error + 1e-12) << f.dump();
    EXPECT_LT(v.error, 1e-9);
  }
}

TEST(Weight, FourierScaling) {
  const SmoothWeightSpec w{4.0, 6};
  const double t[] = {0.1, -0.05};
  const auto v = weight_fourier(w, t);
  EXPECT_NEAR(v.value, 16.0 * bump_fourier(0.4).value * bump_fourier(0.2).value, v.error);
}

TEST(Weight, DerivativeNormBoundsDecay) {
  for (int M = 2; M <= 8; M += 2) {
    const double C = bump_derivative_l1(M);
    for (double xi = 0.5; xi <= 12.0; xi += 0.37) {
      const auto f = bump_fourier(xi);
      EXPECT_LE(std::abs(f.value) - f.error, C / std::pow(2 * std::numbers::pi * xi, M)) << M << " " << xi;
    }
  }
  EXPECT_NEAR(bump_derivative_l1(2), 8.0, 1.0);
  EXPECT_THROW(bump_derivative_l1(9), std::invalid_argument);
}

TEST(SievingSet, Examples) {
  const auto s2 = build_sieving_set(instance_FA(), 11, 2);
  EXPECT_EQ(s2.primes, (std::vector<std::uint64_t>{11, 13, 17, 19}));
  EXPECT_EQ(s2.certs.size(), 4u);
  const auto s4 = build_sieving_set(instance_FA(), 11, 4);
  EXPECT_EQ(s4.primes, (std::vector<std::uint64_t>{13, 17}));
  EXPECT_THROW(build_sieving_set(structured::instance_Fsing(), 11, 2), std::runtime_error);
  EXPECT_THROW(build_sieving_set(instance_FA(), 2, 2), std::invalid_argument);
}

TEST(SievingSet, ChooseQ) {
  const auto& f = fixtures()["choose_Q"][0];
  EXPECT_NEAR(choose_Q(f["B"], f["n"]), f["value"].get<double>(), 1e-9 * f["value"].get<double>());
  EXPECT_THROW(choose_Q(2.0, 3), std::invalid_argument);
}

TEST(TDirect, Fixture) {
  const auto& f = fixtures()["T_direct"][0];
  const auto F = *structured::bundled_instance(f["instance"].get<std::string>());
  const auto t = T_direct(F, f["p"], f["q"], SmoothWeightSpec{f["B"], 6});
  EXPECT_NEAR(t.value, f["value"].get<double>(), t.error + 1e-9);
}

TEST(TDirect, SymmetricAndBounded) {
  const SmoothWeightSpec w{6.0, 6};
  const auto a = T_direct(instance_FA(), 5, 13, w), b = T_direct(instance_FA(), 13, 5, w);
  EXPECT_NEAR(a.value, b.value, a.error + b.error);
  // |nu - 1| <= md - 1 = 1 for F_A
  EXPECT_LE(std::abs(a.value), a.weight_mass);
  EXPECT_THROW(T_direct(instance_FA(), 5, 5, w), std::invalid_argument);
}

TEST(Poisson, AgreesWithDirect) {
  const SmoothWeightSpec w{4.0, 6};
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{3, 5}, {5, 7}}) {
    const auto tp = expsum::g_table(instance_FC(), p), tq = expsum::g_table(instance_FC(), q);
    const PoissonSide side(tp, tq, w);
    const auto T = side.choose_truncation(0.5);
    EXPECT_LT(side.tail_bound(T), 0.5);
    const auto r = side.evaluate(T);
    const auto d = T_direct(instance_FC(), p, q, w);
    EXPECT_LE(std::abs(r.value - d.value), r.tail_bound + r.err_budget + d.error) << p << " " << q;
    EXPECT_LE(std::abs(r.imag), r.err_budget + r.tail_bound);
  }
}

TEST(Poisson, TailBoundMonotone) {
  const auto tp = expsum::g_table(instance_FA(), 3), tq = expsum::g_table(instance_FA(), 5);
  const PoissonSide side(tp, tq, SmoothWeightSpec{3.0, 6});
  double prev = side.tail_bound(0);
  for (long long T = 1; T < 200; T += 7) {
    const double t = side.tail_bound(T);
    EXPECT_LE(t, prev);
    prev = t;
  }
  EXPECT_GT(side.fourier_abs_sum(), 0.0);
}

TEST(Poisson, ZeroTruncationIsOriginTerm) {
  const SmoothWeightSpec w{3.0, 6};
  const auto tp = expsum::g_table(instance_FA(), 3), tq = expsum::g_table(instance_FA(), 5);
  const PoissonSide side(tp, tq, w);
  const auto r = side.evaluate(0);
  EXPECT_EQ(r.terms, 1u);
  const long long zero[] = {0, 0, 0};
  const double zero_d[] = {0, 0, 0};
  const double want = weight_fourier(w, zero_d).value * (tp.at(zero) * tq.at(zero)).real() / std::pow(15.0, 3);
  EXPECT_NEAR(r.value, want, 1e-9 * std::abs(want) + r.err_budget);
}

TEST(Poisson, TypeBreakdownSums) {
  const SmoothWeightSpec w{4.0, 6};
  const auto tp = expsum::g_table(instance_FA(), 5), tq = expsum::g_table(instance_FA(), 7);
  const expsum::ClassificationTable cp(expsum::Classifier(instance_FA(), 5)), cq(expsum::Classifier(instance_FA(), 7));
  const PoissonSide side(tp, tq, w);
  const auto r = side.evaluate(side.choose_truncation(0.5), &cp, &cq);
  double total = 0.0;
  for (const auto& row : r.by_type)
    for (double v : row) total += v;
  EXPECT_NEAR(total, r.value, 1e-9 * std::abs(r.value) + r.err_budget);
}

TEST(SieveBound, DeskRunOnFA) {
  SieveParameters params;
  params.Q = 11;
  const auto rep = sieve_bound(instance_FA(), 12, params);
  EXPECT_EQ(rep.sieving_set.primes, (std::vector<std::uint64_t>{11, 13, 17, 19}));
  EXPECT_TRUE(rep.N_le_S);
  EXPECT_LE(double(rep.N), rep.S);
  EXPECT_EQ(rep.per_k_violations, 0u);
  EXPECT_TRUE(rep.chain_holds);
  EXPECT_TRUE(rep.chain_expansion_agrees);
  EXPECT_EQ(rep.pairs.size(), 6u);
  EXPECT_TRUE(rep.poisson_all_agree);
}

TEST(SieveBound, ParameterChecks) {
  SieveParameters params;
  params.kappa = 0.5;
  EXPECT_THROW(sieve_bound(instance_FA(), 12, params), std::invalid_argument);
  EXPECT_NEAR(default_alpha(3), 1.0 / (24 * (3 - 5.0 / 3 + 0.01)), 1e-15);
  EXPECT_EQ(default_M(3, default_alpha(3)), 34);
}
