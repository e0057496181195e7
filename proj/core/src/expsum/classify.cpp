#include "polysieve/expsum/classify.hpp"

#include <algorithm>

namespace polysieve::expsum {

using algebra::FieldElem;
using algebra::FieldPoly;
using algebra::FiniteField;
using algebra::SparsePoly;

const char* to_string(HyperplaneType t) noexcept {
  switch (t) {
    case HyperplaneType::TypeZero: return "zero";
    case HyperplaneType::Good: return "good";
    case HyperplaneType::Bad: return "bad";
  }
  return "?";
}

BadReductionError::BadReductionError(std::uint64_t p, structured::GoodReductionCert cert)
    : std::runtime_error("bad reduction at p = " + std::to_string(p) + ": F(Z^e, X) is singular mod p"),
      p_(p),
      cert_(std::move(cert)) {}

namespace {

std::vector<long long> reduce_u(std::span<const long long> u, std::uint64_t p) {
  std::vector<long long> r(u.begin(), u.end());
  const auto pp = static_cast<long long>(p);
  for (auto& v : r) {
    v %= pp;
    if (v < 0) v += pp;
  }
  return r;
}

bool all_zero(std::span<const long long> r) {
  return std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; });
}

}  // namespace

Classifier::Classifier(const StructuredF& F, std::uint64_t p, unsigned k_max)
    : p_(p), k_max_(k_max), n_(F.n()), F_(F) {
  if (p == 2 || !algebra::is_prime(p)) throw std::invalid_argument("Classifier: p must be an odd prime");
  if (k_max == 0) throw std::invalid_argument("Classifier: k_max must be >= 1");
  cert_ = structured::smoothness_mod_p(F, p, k_max);
  if (!cert_.smooth) throw BadReductionError(p, cert_);
  const SparsePoly G = structured::unweighted_form(F);
  for (unsigned k = 1; k <= k_max; ++k) {
    const auto field = FiniteField::extension(p, k);
    Level lv{k, field, FieldPoly::reduce(G, field), {}};
    for (std::size_t v = 0; v < G.num_vars(); ++v) lv.grad.push_back(lv.G.derivative(v));
    levels_.push_back(std::move(lv));
  }
}

Classification Classifier::classify(std::span<const long long> u) const {
  if (u.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("classify: u has wrong length");
  const auto r = reduce_u(u, p_);
  Classification out;
  if (all_zero(r)) {
    out.type = HyperplaneType::TypeZero;
    return out;
  }
  out.k_searched = k_max_;
  const std::size_t nv = static_cast<std::size_t>(n_) + 1;
  const std::size_t j = static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](long long v) { return v != 0; }) - r.begin());
  const std::size_t xj = j + 1;  // slot of X_j among (Z, X1, ..., Xn)

  for (const auto& lv : levels_) {
    const auto& K = lv.field;
    std::vector<FieldElem> uk(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) uk[i] = K.from_int(r[i]);

    // rank [grad G | (0, u)] <= 1 with u_j != 0: G_Z = 0 and
    // u_j G_{X_i} = u_i G_{X_j} for all i != j.
    std::vector<FieldPoly> sys{lv.G, lv.grad[0]};
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i == j) continue;
      auto h = lv.grad[i + 1].scaled(uk[j]) - lv.grad[xj].scaled(uk[i]);
      if (!h.is_zero()) sys.push_back(std::move(h));
    }

    // X_j = -u_j^{-1} sum_{i != j} u_i X_i puts us on the hyperplane.
    const FieldElem c = K.neg(K.inv(uk[j]));
    FieldPoly lin(K, nv);
    for (std::size_t i = 0; i < r.size(); ++i)
      if (i != j && r[i] != 0) lin += FieldPoly::variable(K, nv, i + 1).scaled(K.mul(c, uk[i]));
    std::vector<FieldPoly> reduced;
    for (const auto& f : sys) {
      auto g = f.substitute(xj, lin).drop_variable(xj);
      if (!g.is_zero()) reduced.push_back(std::move(g));
    }

    algebra::ProjectiveZeroSearch search(K, std::move(reduced), nv - 1);
    std::optional<TangencyWitness> found;
    search.visit([&](const algebra::ProjectivePoint& pt) {
      algebra::ProjectivePoint full(nv);
      FieldElem xjv = K.zero();
      for (std::size_t s = 0, t = 0; s < nv; ++s) {
        if (s == xj) continue;
        full[s] = pt[t++];
        if (s >= 1) xjv = K.add(xjv, K.mul(K.mul(c, uk[s - 1]), full[s]));
      }
      full[xj] = xjv;
      TangencyWitness w{std::vector<long long>(u.begin(), u.end()), p_, lv.k, K,
                        algebra::normalize_projective(K, std::move(full))};
      if (!verify_tangency_witness(F_, w)) throw std::logic_error("tangency witness failed verification");
      found = std::move(w);
      return true;
    });
    if (found) {
      out.type = HyperplaneType::Bad;
      out.witness = std::move(found);
      out.k_searched = lv.k;
      return out;
    }
  }
  out.type = HyperplaneType::Good;
  return out;
}

Classification classify(const StructuredF& F, std::span<const long long> u, std::uint64_t p, unsigned k_max) {
  const auto r = reduce_u(u, p);
  if (all_zero(r)) {
    Classification out;
    out.type = HyperplaneType::TypeZero;
    return out;
  }
  return Classifier(F, p, k_max).classify(u);
}

bool verify_tangency_witness(const StructuredF& F, const TangencyWitness& w) {
  const auto& K = w.field;
  const std::size_t n = static_cast<std::size_t>(F.n());
  if (w.point.size() != n + 1 || w.u.size() != n) return false;
  if (K.characteristic() != w.p) return false;
  if (std::all_of(w.point.begin(), w.point.end(), [](FieldElem x) { return x.index == 0; })) return false;
  const auto r = reduce_u(w.u, w.p);
  if (all_zero(r)) return false;
  const SparsePoly G = structured::unweighted_form(F);
  if (algebra::poly_eval(G, w.point, K).index != 0) return false;
  FieldElem lin = K.zero();
  for (std::size_t i = 0; i < n; ++i) lin = K.add(lin, K.mul(K.from_int(r[i]), w.point[i + 1]));
  if (lin.index != 0) return false;
  // 2x2 minors of [grad | (0, u)]
  std::vector<FieldElem> grad(n + 1);
  for (std::size_t v = 0; v <= n; ++v) grad[v] = algebra::poly_eval(G.derivative(v), w.point, K);
  std::vector<FieldElem> col(n + 1, K.zero());
  for (std::size_t i = 0; i < n; ++i) col[i + 1] = K.from_int(r[i]);
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b)
      if (K.sub(K.mul(grad[a], col[b]), K.mul(grad[b], col[a])).index != 0) return false;
  return true;
}

ClassificationTable::ClassificationTable(const Classifier& c) : p_(c.p()), n_(c.n()) {
  std::size_t total = 1;
  for (int i = 0; i < n_; ++i) total *= p_;
  types_.assign(total, HyperplaneType::TypeZero);
  std::vector<long long> u(static_cast<std::size_t>(n_));
  std::vector<bool> done(total, false);
  done[0] = true;
  for (std::size_t idx = 1; idx < total; ++idx) {
    if (done[idx]) continue;
    std::size_t t = idx;
    for (int i = n_ - 1; i >= 0; --i) {
      u[static_cast<std::size_t>(i)] = static_cast<long long>(t % p_);
      t /= p_;
    }
    const auto cl = c.classify(u);
    if (cl.witness) witnesses_.push_back(*cl.witness);
    // spread over the projective class alpha * u
    for (std::uint64_t a = 1; a < p_; ++a) {
      std::size_t j = 0;
      for (int i = 0; i < n_; ++i)
        j = j * p_ + static_cast<std::size_t>(static_cast<std::uint64_t>(u[static_cast<std::size_t>(i)]) * a % p_);
      types_[j] = cl.type;
      done[j] = true;
    }
  }
}

HyperplaneType ClassificationTable::at(std::span<const long long> u) const {
  if (u.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("ClassificationTable: u has wrong length");
  const auto r = reduce_u(u, p_);
  std::size_t j = 0;
  for (auto v : r) j = j * p_ + static_cast<std::size_t>(v);
  return types_[j];
}

std::size_t ClassificationTable::count(HyperplaneType t) const {
  return static_cast<std::size_t>(std::count(types_.begin(), types_.end(), t));
}

}  // namespace polysieve::expsum
