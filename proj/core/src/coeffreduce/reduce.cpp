#include "polysieve/coeffreduce/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "polysieve/algebra/resultant.hpp"
#include "polysieve/counting/counting.hpp"

namespace polysieve::coeffreduce {

MonomialSet monomial_set(int D, int e, int n) {
  if (D < 1 || e < 1 || n < 1) throw std::invalid_argument("monomial_set: D, e, n must be >= 1");
  MonomialSet E{D, e, n, {}};
  Monomial mono(static_cast<std::size_t>(n) + 1, 0);
  // X part of total degree `left` in variables i..n, descending lex
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
    if (i == static_cast<std::size_t>(n)) {
      mono[i] = static_cast<std::uint32_t>(left);
      E.monomials.push_back(mono);
      return;
    }
    for (int k = left; k >= 0; --k) {
      mono[i] = static_cast<std::uint32_t>(k);
      fill(i + 1, left - k);
    }
  };
  for (int dy = D; dy >= 0; --dy) {
    mono[0] = static_cast<std::uint32_t>(dy);
    fill(1, (D - dy) * e);
  }
  return E;
}

ExactMatrix solution_matrix(const std::vector<Solution>& solutions, const MonomialSet& E) {
  if (solutions.empty()) throw std::invalid_argument("solution_matrix: no solutions");
  const std::size_t v = static_cast<std::size_t>(E.n) + 1;
  ExactMatrix C(solutions.size(), E.size());
  for (std::size_t r = 0; r < solutions.size(); ++r) {
    const auto& s = solutions[r];
    if (s.size() != v) throw std::invalid_argument("solution_matrix: solution has wrong length");
    for (std::size_t c = 0; c < E.size(); ++c) {
      BigInt x = 1;
      for (std::size_t i = 0; i < v; ++i) x *= boost::multiprecision::pow(BigInt(s[i]), E.monomials[c][i]);
      C.at(r, c) = x;
    }
  }
  return C;
}

std::vector<BigInt> coefficient_vector(const StructuredF& F, const MonomialSet& E) {
  std::vector<BigInt> a;
  for (const auto& mono : E.monomials) a.push_back(F.polynomial().coefficient(mono));
  return a;
}

std::vector<Solution> collect_solutions(const StructuredF& F, long long B) {
  std::vector<Solution> out;
  counting::for_each_in_box(F.n(), B, [&](std::span<const long long> x) {
    for (const auto& y : counting::integer_roots(F, x)) {
      Solution s{static_cast<long long>(y)};
      s.insert(s.end(), x.begin(), x.end());
      out.push_back(std::move(s));
    }
  });
  return out;
}

bool ReduceDecision::certificate_ok() const {
  if (const auto* cb = std::get_if<CoeffBounded>(&outcome))
    return cb->trivial || (cb->null_verified && cb->proportional_to_a && cb->bound_check);
  const auto& sc = std::get<SecondaryCurve>(outcome);
  return sc.null_verified && sc.R_nonzero && sc.solutions_on_H && sc.solutions_on_R;
}

ReduceDecision reduce_decision(const StructuredF& F, long long B) {
  return reduce_decision(F, B, collect_solutions(F, B));
}

ReduceDecision reduce_decision(const StructuredF& F, long long B, const std::vector<Solution>& solutions) {
  if (B < 0) throw std::invalid_argument("reduce_decision: B must be >= 0");
  ReduceDecision dec;
  dec.E = monomial_set(F.y_degree(), F.e(), F.n());
  dec.solutions = solutions.size();
  const std::size_t k = dec.E.size();
  if (solutions.size() < k) {
    CoeffBounded cb;
    cb.trivial = true;
    if (!solutions.empty()) dec.rank = rank(solution_matrix(solutions, dec.E));
    dec.outcome = std::move(cb);
    return dec;
  }
  const ExactMatrix C = solution_matrix(solutions, dec.E);
  const auto a = coefficient_vector(F, dec.E);
  const auto Ca = C.multiply(a);
  if (!std::all_of(Ca.begin(), Ca.end(), [](const BigInt& x) { return x == 0; }))
    throw std::logic_error("reduce_decision: a solution does not satisfy F");

  const auto rn = rank_and_nullvector(C);
  dec.rank = rn.rank;
  if (rn.b) {
    CoeffBounded cb;
    cb.b = *rn.b;
    cb.null_verified = rn.verified;
    cb.proportional_to_a = proportional(a, cb.b);
    for (const auto& x : cb.b) cb.b_max = std::max(cb.b_max, BigInt(abs(x)));
    BigInt a_max = 0;
    for (const auto& x : a) a_max = std::max(a_max, BigInt(abs(x)));
    BigInt fact = 1;
    for (std::size_t i = 2; i < k; ++i) fact *= i;
    const auto expo = static_cast<unsigned>(dec.E.D * dec.E.e * static_cast<int>(k - 1));
    cb.hadamard_bound = boost::multiprecision::pow(BigInt(2 * B), expo) * fact;
    cb.bound_check = a_max <= cb.b_max && cb.b_max <= cb.hadamard_bound;
    dec.outcome = std::move(cb);
    return dec;
  }

  // rank <= |E| - 2: a null vector outside the span of a
  SecondaryCurve sc;
  for (auto& v : integer_null_space(C))
    if (!proportional(a, v)) {
      sc.b = std::move(v);
      break;
    }
  if (sc.b.empty()) throw std::logic_error("reduce_decision: null space is spanned by a");
  const auto Cb = C.multiply(sc.b);
  sc.null_verified = std::all_of(Cb.begin(), Cb.end(), [](const BigInt& x) { return x == 0; });
  const auto& Fp = F.polynomial();
  sc.H = SparsePoly(Fp.variables());
  for (std::size_t c = 0; c < k; ++c)
    if (sc.b[c] != 0) sc.H.add_term(dec.E.monomials[c], sc.b[c]);
  sc.R = algebra::sylvester_resultant_y(Fp, sc.H, 0);
  sc.R_nonzero = !sc.R.is_zero();
  sc.solutions_on_H = true;
  sc.solutions_on_R = true;
  for (const auto& s : solutions) {
    sc.solutions_on_H = sc.solutions_on_H && sc.H.evaluate(std::span<const long long>(s)) == 0;
    if (sc.R_nonzero)
      sc.solutions_on_R =
          sc.solutions_on_R && sc.R.evaluate(std::span<const long long>(s.data() + 1, s.size() - 1)) == 0;
  }
  if (sc.R_nonzero) {
    sc.zero_count = counting::schwartz_zippel_count(sc.R, B);
    sc.zero_ratio = static_cast<double>(sc.zero_count) / std::pow(static_cast<double>(std::max<long long>(B, 1)), F.n() - 1);
  } else {
    sc.solutions_on_R = false;
  }
  dec.outcome = std::move(sc);
  return dec;
}

}  // namespace polysieve::coeffreduce
