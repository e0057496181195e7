#include "polysieve/algebra/zero_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "polysieve/algebra/univariate.hpp"

namespace polysieve::algebra {

namespace {

using AffineVisitor = std::function<bool(const std::vector<FieldElem>&)>;

// Polynomial in (s, t): by_t[j] is the coefficient of t^j as a polynomial in s.
struct BiPoly {
  std::vector<UPoly> by_t;
  int deg_t() const { return static_cast<int>(by_t.size()) - 1; }
  int deg_s() const {
    int d = -1;
    for (const auto& c : by_t) d = std::max(d, uni::degree(c));
    return d;
  }
};

BiPoly to_bipoly(const FieldPoly& f) {
  const auto& F = f.field();
  BiPoly b;
  for (const auto& [m, c] : f.terms()) {
    const std::size_t j = m[1], i = m[0];
    if (b.by_t.size() <= j) b.by_t.resize(j + 1);
    auto& u = b.by_t[j];
    if (u.size() <= i) u.resize(i + 1, F.zero());
    u[i] = F.add(u[i], c);
  }
  for (auto& u : b.by_t) uni::trim(u);
  while (!b.by_t.empty() && b.by_t.back().empty()) b.by_t.pop_back();
  return b;
}

UPoly specialize_s(const FiniteField& F, const BiPoly& b, FieldElem s) {
  UPoly out(b.by_t.size(), F.zero());
  for (std::size_t j = 0; j < b.by_t.size(); ++j) out[j] = uni::eval(F, b.by_t[j], s);
  uni::trim(out);
  return out;
}

// Resultant in t as a polynomial in s, using the formal t-degrees. nullopt
// when the field has too few elements to interpolate.
std::optional<UPoly> resultant_t(const FiniteField& F, const BiPoly& a, const BiPoly& b) {
  const int ma = a.deg_t(), mb = b.deg_t();
  const std::uint64_t bound = static_cast<std::uint64_t>(mb) * std::max(a.deg_s(), 0) +
                              static_cast<std::uint64_t>(ma) * std::max(b.deg_s(), 0);
  if (bound + 1 > F.order()) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(ma + mb);
  std::vector<FieldElem> xs, ys;
  xs.reserve(bound + 1);
  ys.reserve(bound + 1);
  std::vector<std::vector<FieldElem>> syl(n, std::vector<FieldElem>(n));
  for (std::uint64_t i = 0; i <= bound; ++i) {
    const FieldElem s{i};
    for (auto& row : syl) std::fill(row.begin(), row.end(), F.zero());
    for (int r = 0; r < mb; ++r)
      for (int j = 0; j <= ma; ++j) syl[r][r + j] = uni::eval(F, a.by_t[ma - j], s);
    for (int r = 0; r < ma; ++r)
      for (int j = 0; j <= mb; ++j) syl[mb + r][r + j] = uni::eval(F, b.by_t[mb - j], s);
    xs.push_back(s);
    ys.push_back(uni::determinant(F, syl));
  }
  return uni::interpolate(F, xs, ys);
}

// Common roots of univariate polynomials; empty list means every element.
bool common_roots(const FiniteField& F, const std::vector<UPoly>& polys, const std::function<bool(FieldElem)>& cb) {
  UPoly g;
  bool any = false;
  for (const auto& u : polys) {
    if (u.empty()) continue;
    g = any ? uni::gcd(F, g, u) : uni::monic(F, u);
    any = true;
    if (uni::degree(g) == 0) return false;
  }
  if (!any) {
    for (std::uint64_t x = 0; x < F.order(); ++x)
      if (cb(FieldElem{x})) return true;
    return false;
  }
  for (auto r : uni::roots(F, g))
    if (cb(r)) return true;
  return false;
}

bool solve_bivariate(const FiniteField& F, const std::vector<FieldPoly>& polys,
                     const std::function<bool(FieldElem, FieldElem)>& cb) {
  std::vector<BiPoly> bps;
  std::vector<UPoly> s_only;
  for (const auto& f : polys) {
    BiPoly b = to_bipoly(f);
    if (b.by_t.empty()) continue;
    if (b.deg_t() == 0)
      s_only.push_back(b.by_t[0]);
    else
      bps.push_back(std::move(b));
  }

  std::optional<UPoly> eliminant;
  if (!s_only.empty()) {
    UPoly g = uni::monic(F, s_only[0]);
    for (std::size_t i = 1; i < s_only.size(); ++i) g = uni::gcd(F, g, s_only[i]);
    eliminant = g;
  } else if (bps.size() >= 2) {
    std::vector<std::size_t> order(bps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return bps[x].deg_t() * (bps[x].deg_s() + 1) < bps[y].deg_t() * (bps[y].deg_s() + 1);
    });
    for (std::size_t i = 0; i < order.size() && !eliminant; ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        auto r = resultant_t(F, bps[order[i]], bps[order[j]]);
        if (r && !r->empty()) {
          eliminant = std::move(*r);
          break;
        }
      }
    }
  }

  auto solve_at = [&](FieldElem s) {
    std::vector<UPoly> ts;
    for (const auto& b : bps) {
      UPoly u = specialize_s(F, b, s);
      if (!u.empty() && uni::degree(u) == 0) return false;
      ts.push_back(std::move(u));
    }
    return common_roots(F, ts, [&](FieldElem t) { return cb(s, t); });
  };

  if (eliminant) {
    if (uni::degree(*eliminant) == 0) return false;
    for (auto s : uni::roots(F, *eliminant))
      if (solve_at(s)) return true;
    return false;
  }
  for (std::uint64_t x = 0; x < F.order(); ++x)
    if (solve_at(FieldElem{x})) return true;
  return false;
}

// Zeros in affine f-space of the given polynomials.
bool solve_affine(const FiniteField& F, std::vector<FieldPoly> polys, std::size_t f,
                  std::vector<FieldElem>& prefix, const AffineVisitor& cb) {
  std::vector<FieldPoly> live;
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    if (p.total_degree() == 0) return false;
    live.push_back(std::move(p));
  }
  if (f == 0) return cb(prefix);
  if (f == 1) {
    std::vector<UPoly> us;
    for (const auto& p : live) {
      UPoly u;
      for (const auto& [m, c] : p.terms()) {
        if (u.size() <= m[0]) u.resize(m[0] + 1, F.zero());
        u[m[0]] = c;
      }
      us.push_back(std::move(u));
    }
    return common_roots(F, us, [&](FieldElem x) {
      prefix.push_back(x);
      const bool stop = cb(prefix);
      prefix.pop_back();
      return stop;
    });
  }
  if (f == 2) {
    return solve_bivariate(F, live, [&](FieldElem s, FieldElem t) {
      prefix.push_back(s);
      prefix.push_back(t);
      const bool stop = cb(prefix);
      prefix.resize(prefix.size() - 2);
      return stop;
    });
  }
  std::vector<std::optional<FieldElem>> assign(f);
  for (std::uint64_t x = 0; x < F.order(); ++x) {
    assign[0] = FieldElem{x};
    std::vector<FieldPoly> sub;
    sub.reserve(live.size());
    for (const auto& p : live) sub.push_back(p.restrict_to(assign));
    prefix.push_back(FieldElem{x});
    const bool stop = solve_affine(F, std::move(sub), f - 1, prefix, cb);
    prefix.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace

ProjectivePoint normalize_projective(const FiniteField& F, ProjectivePoint pt) {
  auto it = std::find_if(pt.begin(), pt.end(), [](FieldElem x) { return x.index != 0; });
  if (it == pt.end()) throw std::invalid_argument("the zero vector is not a projective point");
  const FieldElem inv = F.inv(*it);
  for (auto& x : pt) x = F.mul(x, inv);
  return pt;
}

ProjectiveZeroSearch::ProjectiveZeroSearch(FiniteField field, std::vector<FieldPoly> polys, std::size_t nvars)
    : field_(std::move(field)), polys_(std::move(polys)), nvars_(nvars) {
  if (nvars_ == 0) throw std::invalid_argument("projective space needs at least one coordinate");
  for (const auto& p : polys_) {
    if (p.num_vars() != nvars_) throw std::invalid_argument("polynomial has wrong number of variables");
    if (!p.is_homogeneous()) throw std::invalid_argument("projective search needs homogeneous polynomials");
    if (!(p.field() == field_)) throw std::invalid_argument("polynomial over a different field");
  }
}

bool ProjectiveZeroSearch::visit(const std::function<bool(const ProjectivePoint&)>& visitor) const {
  ProjectivePoint full(nvars_);
  std::vector<std::optional<FieldElem>> assign(nvars_);
  for (std::size_t chart = 0; chart < nvars_; ++chart) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i < chart)
        assign[i] = field_.zero();
      else if (i == chart)
        assign[i] = field_.one();
      else
        assign[i] = std::nullopt;
    }
    std::vector<FieldPoly> restricted;
    restricted.reserve(polys_.size());
    for (const auto& p : polys_) restricted.push_back(p.restrict_to(assign));
    std::vector<FieldElem> prefix;
    const std::size_t f = nvars_ - chart - 1;
    const bool stop = solve_affine(field_, std::move(restricted), f, prefix, [&](const std::vector<FieldElem>& v) {
      for (std::size_t i = 0; i < nvars_; ++i) full[i] = i < chart ? field_.zero() : field_.one();
      for (std::size_t i = 0; i < f; ++i) full[chart + 1 + i] = v[i];
      return visitor(full);
    });
    if (stop) return true;
  }
  return false;
}

std::optional<ProjectivePoint> ProjectiveZeroSearch::first() const {
  std::optional<ProjectivePoint> out;
  visit([&](const ProjectivePoint& p) {
    out = p;
    return true;
  });
  return out;
}

std::vector<ProjectivePoint> ProjectiveZeroSearch::all() const {
  std::vector<ProjectivePoint> out;
  visit([&](const ProjectivePoint& p) {
    out.push_back(p);
    return false;
  });
  return out;
}

}  // namespace polysieve::algebra
