#include "polysieve/sieve/weight.hpp"

#include <array>
#include <boost/math/differentiation/autodiff.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <mutex>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace polysieve::sieve {

namespace {

double s_fn(double x) noexcept { return x > 0 ? std::exp(-1.0 / x) : 0.0; }

template <class T>
T s_auto(const T& x) {
  using std::exp;
  return exp(-1 / x);
}

template <std::size_t M>
double derivative_l1_impl() {
  using namespace boost::math::differentiation;
  auto f = [](double t) {
    const auto x = make_fvar<double, M>(t);
    const auto a = s_auto(2 - x), b = s_auto(x - 1);
    return std::abs(static_cast<double>((a / (a + b)).derivative(M)));
  };
  double err = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 1.0, 2.0, 15, 1e-12, &err);
  // both flanks of the even profile
  return 2.0 * (v + err) * (1 + 1e-12);
}

}  // namespace

double bump_derivative_l1(int M) {
  if (M < 1 || M > 8) throw std::invalid_argument("bump_derivative_l1: M must be in [1, 8]");
  static std::array<std::once_flag, 9> once;
  static std::array<double, 9> cache{};
  static constexpr std::array<double (*)(), 9> impl{nullptr,
                                             derivative_l1_impl<1>,
                                             derivative_l1_impl<2>,
                                             derivative_l1_impl<3>,
                                             derivative_l1_impl<4>,
                                             derivative_l1_impl<5>,
                                             derivative_l1_impl<6>,
                                             derivative_l1_impl<7>,
                                             derivative_l1_impl<8>};
  const auto m = static_cast<std::size_t>(M);
  std::call_once(once[m], [m] { cache[m] = impl[m](); });
  return cache[m];
}

double bump(double t) noexcept {
  t = std::abs(t);
  if (t <= 1.0) return 1.0;
  if (t >= 2.0) return 0.0;
  const double a = s_fn(2.0 - t), b = s_fn(t - 1.0);
  return a / (a + b);
}

FourierValue bump_fourier(double xi) {
  using boost::math::quadrature::gauss_kronrod;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  xi = std::abs(xi);
  const double w = 2.0 * std::numbers::pi * xi;
  // one subinterval per half period keeps each piece non-oscillatory
  const int pieces = std::max(1, static_cast<int>(std::ceil(2.0 * xi)));
  double integral = 0.0, err = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double a = 1.0 + static_cast<double>(i) / pieces, b = 1.0 + static_cast<double>(i + 1) / pieces;
    double piece_err = 0.0;
    integral += gauss_kronrod<double, 31>::integrate([w](double x) { return bump(x) * std::cos(w * x); }, a, b, 4,
                                                     1e-12, &piece_err);
    err += piece_err * (b - a) + 4 * eps * (b - a);
  }
  const double head = xi == 0.0 ? 1.0 : std::sin(w) / w;
  FourierValue out;
  out.value = 2.0 * (head + integral);
  out.error = 2.0 * (err + 4 * eps);
  return out;
}

double weight_eval(const SmoothWeightSpec& w, std::span<const double> x) {
  if (!(w.B > 0)) throw std::invalid_argument("weight half-width must be positive");
  double r = 1.0;
  for (double xi : x) {
    r *= bump(xi / w.B);
    if (r == 0.0) break;
  }
  return r;
}

double weight_eval_int(const SmoothWeightSpec& w, std::span<const long long> k) {
  if (!(w.B > 0)) throw std::invalid_argument("weight half-width must be positive");
  double r = 1.0;
  for (long long ki : k) {
    r *= bump(static_cast<double>(ki) / w.B);
    if (r == 0.0) break;
  }
  return r;
}

FourierValue weight_fourier(const SmoothWeightSpec& w, std::span<const double> t) {
  if (!(w.B > 0)) throw std::invalid_argument("weight half-width must be positive");
  double v = 1.0, e = 0.0;
  for (double ti : t) {
    const FourierValue f = bump_fourier(w.B * ti);
    const double fv = w.B * f.value, fe = w.B * f.error;
    // (v +- e)(fv +- fe)
    e = std::abs(v) * fe + std::abs(fv) * e + e * fe;
    v *= fv;
  }
  return {v, e + 4 * std::numeric_limits<double>::epsilon() * std::abs(v) * static_cast<double>(t.size())};
}

DecayMeasurement measure_decay(int M, double xi_lo, double xi_hi, double step) {
  if (M < 0 || !(xi_hi >= xi_lo) || !(step > 0)) throw std::invalid_argument("measure_decay: bad range");
  DecayMeasurement d;
  d.M = M;
  d.xi_lo = xi_lo;
  d.xi_hi = xi_hi;
  for (double xi = xi_lo; xi <= xi_hi + 1e-12; xi += step) {
    const auto f = bump_fourier(xi);
    const double v = (std::abs(f.value) + f.error) * std::pow(1.0 + xi, M);
    if (v > d.constant) {
      d.constant = v;
      d.argmax = xi;
    }
  }
  return d;
}

}  // namespace polysieve::sieve
