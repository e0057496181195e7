#include "polysieve/sieve/poisson.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "polysieve/parallel.hpp"
#include "polysieve/summation.hpp"

namespace polysieve::sieve {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Beyond this frequency the 1-D tail is bounded analytically.
constexpr double kExplicitXi = 60.0;

std::size_t mod_index(long long k, std::uint64_t p) {
  const auto pp = static_cast<long long>(p);
  long long r = k % pp;
  if (r < 0) r += pp;
  return static_cast<std::size_t>(r);
}

}  // namespace

TValue T_direct(const counting::FiberTable& fp, const counting::FiberTable& fq, const SmoothWeightSpec& w) {
  if (fp.p() == fq.p()) throw std::invalid_argument("T_direct: p and q must differ");
  if (fp.n() != fq.n()) throw std::invalid_argument("T_direct: dimension mismatch");
  if (!(w.B > 0)) throw std::invalid_argument("T_direct: B must be positive");
  const int n = fp.n();
  const auto R = static_cast<long long>(std::floor(2 * w.B));
  const std::size_t side = static_cast<std::size_t>(2 * R + 1);
  std::vector<double> b(side);
  for (std::size_t i = 0; i < side; ++i) b[i] = bump(static_cast<double>(static_cast<long long>(i) - R) / w.B);

  std::vector<CompensatedSum> sums(side), mass(side);
  parallel_slabs(side, [&](std::size_t slab) {
    if (b[slab] == 0.0) return;
    std::vector<long long> k(static_cast<std::size_t>(n), -R);
    k[0] = static_cast<long long>(slab) - R;
    auto& s = sums[slab];
    auto& ms = mass[slab];
    for (;;) {
      double wk = 1.0;
      std::size_t ip = 0, iq = 0;
      for (int i = 0; i < n; ++i) {
        const auto ki = k[static_cast<std::size_t>(i)];
        wk *= b[static_cast<std::size_t>(ki + R)];
        ip = ip * fp.p() + mod_index(ki, fp.p());
        iq = iq * fq.p() + mod_index(ki, fq.p());
      }
      if (wk != 0.0) {
        const int c = (fp.at_index(ip) - 1) * (fq.at_index(iq) - 1);
        if (c != 0) s.add(wk * c);
        ms.add(wk);
      }
      int i = n - 1;
      while (i >= 1 && k[static_cast<std::size_t>(i)] == R) {
        k[static_cast<std::size_t>(i)] = -R;
        --i;
      }
      if (i < 1) break;
      ++k[static_cast<std::size_t>(i)];
    }
  });
  CompensatedSum total, total_mass;
  for (std::size_t i = 0; i < side; ++i) {
    total.add(sums[i]);
    total_mass.add(mass[i]);
  }
  TValue out;
  out.value = total.value();
  out.weight_mass = total_mass.value();
  // each term carries the rounding of an n-fold product of bump values
  out.error = 8.0 * (n + 2) * kEps * total.abs_total() + total.error_bound();
  return out;
}

TValue T_direct(const StructuredF& F, std::uint64_t p, std::uint64_t q, const SmoothWeightSpec& w) {
  if (p == q) throw std::invalid_argument("T_direct: p and q must differ");
  return T_direct(counting::FiberTable(F, p), counting::FiberTable(F, q), w);
}

PoissonSide::PoissonSide(const expsum::ExpSumTable& tp, const expsum::ExpSumTable& tq, const SmoothWeightSpec& w)
    : tp_(tp), tq_(tq), w_(w), L_(tp.p * tq.p), n_(tp.n) {
  if (tp.p == tq.p) throw std::invalid_argument("PoissonSide: p and q must differ");
  if (tp.n != tq.n) throw std::invalid_argument("PoissonSide: dimension mismatch");
  if (!(w.B > 0)) throw std::invalid_argument("PoissonSide: B must be positive");
  M_ = std::clamp(w.M, 2, 8);
  g_max_ = (tp.max_abs() + tp.err_budget) * (tq.max_abs() + tq.err_budget);
  U_ = static_cast<long long>(std::ceil(kExplicitXi * static_cast<double>(L_) / w.B));
  extend(U_);
}

void PoissonSide::extend(long long U) const {
  const auto need = static_cast<std::size_t>(U) + 1;
  const double L = static_cast<double>(L_);
  while (w1_.size() < need) {
    const double u = static_cast<double>(w1_.size());
    const auto f = bump_fourier(w_.B * u / L);
    w1_.push_back({w_.B * f.value, w_.B * f.error + kEps * w_.B * std::abs(f.value)});
  }
}

double PoissonSide::analytic_tail(long long U) const {
  // 2 sum_{u > U} B C / (2 pi B u / L)^M <= 2 B C (L / (2 pi B))^M U^{1-M} / (M - 1)
  const double C = bump_derivative_l1(M_);
  const double r = static_cast<double>(L_) / (2 * std::numbers::pi * w_.B);
  return 2 * w_.B * C * std::pow(r, M_) * std::pow(static_cast<double>(U), 1 - M_) / (M_ - 1);
}

double PoissonSide::fourier_abs_sum() const {
  double s = std::abs(w1_[0].value) + w1_[0].error;
  for (long long u = 1; u <= U_; ++u) s += 2 * (std::abs(w1_[static_cast<std::size_t>(u)].value) + w1_[static_cast<std::size_t>(u)].error);
  s += analytic_tail(U_);
  return std::pow(s * (1 + 4 * kEps * static_cast<double>(U_)), n_);
}

double PoissonSide::tail_bound(long long T) const {
  if (T < 0) throw std::invalid_argument("tail_bound: T must be >= 0");
  const long long U = std::max(U_, T);
  extend(U);
  double s_in = std::max(0.0, std::abs(w1_[0].value) - w1_[0].error);
  double s_all = std::abs(w1_[0].value) + w1_[0].error;
  for (long long u = 1; u <= U; ++u) {
    const auto& f = w1_[static_cast<std::size_t>(u)];
    if (u <= T) s_in += 2 * std::max(0.0, std::abs(f.value) - f.error);
    s_all += 2 * (std::abs(f.value) + f.error);
  }
  s_all += analytic_tail(U);
  s_in *= 1 - 4 * kEps * static_cast<double>(U);
  s_all *= 1 + 4 * kEps * static_cast<double>(U);
  const double scale = std::pow(static_cast<double>(L_), -n_);
  return g_max_ * (std::pow(s_all, n_) - std::pow(s_in, n_)) * scale * (1 + 8 * n_ * kEps);
}

long long PoissonSide::choose_truncation(double target) const {
  long long lo = 0;
  if (tail_bound(0) < target) return 0;
  // the bound is monotone in T; doubling then bisection
  long long hi = 1;
  while (tail_bound(hi) >= target) {
    if (hi > 4 * U_) throw std::runtime_error("choose_truncation: target tail bound not reachable");
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    (tail_bound(mid) < target ? hi : lo) = mid;
  }
  return hi;
}

PoissonResult PoissonSide::evaluate(long long T, const expsum::ClassificationTable* cp,
                                    const expsum::ClassificationTable* cq) const {
  if (T < 0) throw std::invalid_argument("PoissonSide: trunc must be >= 0");
  extend(T);
  const std::uint64_t p = tp_.p, q = tq_.p;
  const std::uint64_t qbar = algebra::modinv(q % p, p), pbar = algebra::modinv(p % q, q);
  const std::size_t side = static_cast<std::size_t>(2 * T + 1);

  // Per coordinate: summed weight, summed |weight|, error, and the twisted
  // residues. Once the cube is wider than L, coordinates are folded mod L,
  // since the table factor only sees u mod L.
  const bool fold = side > L_;
  const std::size_t K = fold ? static_cast<std::size_t>(L_) : side;
  std::vector<double> val(K, 0.0), absval(K, 0.0), werr(K, 0.0);
  std::vector<std::size_t> rp(K), rq(K), cnt(K, 0);
  for (std::size_t i = 0; i < side; ++i) {
    const long long u = static_cast<long long>(i) - T;
    const std::size_t c = fold ? mod_index(u, L_) : i;
    const auto& f = w1_[static_cast<std::size_t>(std::llabs(u))];
    val[c] += f.value;
    absval[c] += std::abs(f.value);
    werr[c] += f.error;
    ++cnt[c];
  }
  for (std::size_t c = 0; c < K; ++c) {
    const long long u = fold ? static_cast<long long>(c) : static_cast<long long>(c) - T;
    rp[c] = mod_index(static_cast<long long>(mod_index(u, p) * qbar % p), p);
    rq[c] = mod_index(static_cast<long long>(mod_index(u, q) * pbar % q), q);
    werr[c] += static_cast<double>(cnt[c]) * kEps * absval[c];
  }
  const double ep = tp_.err_budget, eq = tq_.err_budget;

  struct Partial {
    CompensatedSum re, im;
    double err = 0.0;
    TypeBreakdown by{}, abs_by{};
  };
  std::vector<Partial> parts(K);
  parallel_slabs(K, [&](std::size_t slab) {
    auto& part = parts[slab];
    if (cnt[slab] == 0) return;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n_), 0);
    idx[0] = slab;
    for (;;) {
      // wv: product of summed weights; wa: product of summed |weights|;
      // we: bound on prod(wa_i + err_i) - prod(wa_i)
      double wv = 1.0, wa = 1.0, we = 0.0;
      std::size_t ip = 0, iq = 0;
      for (int i = 0; i < n_; ++i) {
        const std::size_t c = idx[static_cast<std::size_t>(i)];
        we = wa * werr[c] + absval[c] * we + we * werr[c];
        wv *= val[c];
        wa *= absval[c];
        ip = ip * p + rp[c];
        iq = iq * q + rq[c];
      }
      if (wa != 0.0 || we != 0.0) {
        const auto a = tp_.values[ip], b = tq_.values[iq];
        const auto g = a * b;
        const double ga = std::abs(g);
        const double eg = ep * std::abs(b) + eq * std::abs(a) + ep * eq + 2 * kEps * ga;
        const auto term = wv * g;
        part.re.add(term.real());
        part.im.add(term.imag());
        part.err += wa * eg + ga * we + we * eg + 2 * kEps * wa * ga;
        if (cp && cq) {
          const auto tp = static_cast<std::size_t>(cp->at_index(ip)), tq = static_cast<std::size_t>(cq->at_index(iq));
          part.by[tp][tq] += term.real();
          part.abs_by[tp][tq] += wa * ga;
        }
      }
      int i = n_ - 1;
      while (i >= 1 && idx[static_cast<std::size_t>(i)] == K - 1) {
        idx[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 1) break;
      ++idx[static_cast<std::size_t>(i)];
    }
  });

  CompensatedSum re, im;
  double err = 0.0;
  PoissonResult out;
  for (auto& part : parts) {
    re.add(part.re);
    im.add(part.im);
    err += part.err;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        out.by_type[i][j] += part.by[i][j];
        out.abs_by_type[i][j] += part.abs_by[i][j];
      }
  }
  const double scale = std::pow(static_cast<double>(L_), -n_);
  out.value = re.value() * scale;
  out.imag = im.value() * scale;
  out.err_budget = (err + re.error_bound() + im.error_bound()) * scale * (1 + 4 * kEps) +
                   2 * kEps * std::abs(out.value);
  out.tail_bound = tail_bound(T);
  out.trunc = T;
  out.terms = 1;
  for (int i = 0; i < n_; ++i) out.terms *= side;
  for (auto& row : out.by_type)
    for (auto& v : row) v *= scale;
  for (auto& row : out.abs_by_type)
    for (auto& v : row) v *= scale;
  return out;
}

PoissonResult T_poisson(const StructuredF& F, std::uint64_t p, std::uint64_t q, const SmoothWeightSpec& w,
                        long long trunc) {
  if (p == q) throw std::invalid_argument("T_poisson: p and q must differ");
  const auto tp = expsum::g_table(F, p), tq = expsum::g_table(F, q);
  return PoissonSide(tp, tq, w).evaluate(trunc);
}

}  // namespace polysieve::sieve
