#pragma once

#include <span>
#include <vector>

namespace polysieve::sieve {

// 1-D profile: 1 on |t| <= 1, 0 on |t| >= 2, and on 1 < |t| < 2
// s(2-|t|) / (s(2-|t|) + s(|t|-1)) with s(x) = exp(-1/x).
double bump(double t) noexcept;

struct FourierValue {
  double value = 0.0;
  double error = 0.0;  // quadrature error estimate plus rounding slack
};

// psi_hat(xi) = int psi(x) exp(-2 pi i x xi) dx, real because psi is even:
// 2 [sin(2 pi xi) / (2 pi xi) + int_1^2 psi(x) cos(2 pi x xi) dx].
FourierValue bump_fourier(double xi);

// W(x) = prod_i psi(x_i / B), supported in [-2B, 2B]^n. M is only used when
// reporting decay.
struct SmoothWeightSpec {
  double B = 1.0;
  int M = 6;
};

double weight_eval(const SmoothWeightSpec& w, std::span<const double> x);
// Same on integer points; used in the counting loops.
double weight_eval_int(const SmoothWeightSpec& w, std::span<const long long> k);

// hat W(t) = prod_i B psi_hat(B t_i), with the error of the product.
FourierValue weight_fourier(const SmoothWeightSpec& w, std::span<const double> t);

// || psi^(M) ||_1 over the real line, for 1 <= M <= 8, by automatic
// differentiation and quadrature; the returned value includes the quadrature
// error estimate. Integration by parts gives
// |psi_hat(xi)| <= bump_derivative_l1(M) / (2 pi |xi|)^M.
double bump_derivative_l1(int M);

struct DecayMeasurement {
  int M = 0;
  double xi_lo = 0.0, xi_hi = 0.0;
  double constant = 0.0;  // max of (|psi_hat(xi)| + err) (1 + xi)^M on the grid
  double argmax = 0.0;
};

// Measures the decay constant of psi_hat on [xi_lo, xi_hi] with the given grid step.
DecayMeasurement measure_decay(int M, double xi_lo, double xi_hi, double step = 0.05);

}  // namespace polysieve::sieve
