#include "polysieve/sieve/sieving_set.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace polysieve::sieve {

SievingSet build_sieving_set(const StructuredF& F, double Q, int m, unsigned k_max) {
  if (!(Q >= 3)) throw std::invalid_argument("build_sieving_set: Q must be >= 3");
  if (m < 1) throw std::invalid_argument("build_sieving_set: m must be positive");
  SievingSet s;
  s.Q = Q;
  s.m = m;
  s.k_max = k_max;
  const auto lo = static_cast<std::uint64_t>(std::ceil(Q)), hi = static_cast<std::uint64_t>(std::floor(2 * Q));
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p) {
    if (!algebra::is_prime(p) || p % static_cast<std::uint64_t>(m) != 1 % static_cast<std::uint64_t>(m)) continue;
    auto cert = structured::smoothness_mod_p(F, p, k_max);
    if (cert.smooth) {
      s.primes.push_back(p);
      s.certs.push_back(std::move(cert));
    } else {
      s.rejected.push_back(p);
    }
  }
  if (s.primes.empty()) {
    std::ostringstream msg;
    msg << "build_sieving_set: no admissible primes in [" << Q << ", " << 2 * Q << "] with p = 1 mod " << m;
    throw std::runtime_error(msg.str());
  }
  const double expected = Q / (2 * std::log(Q));
  if (static_cast<double>(s.P()) < expected) {
    std::ostringstream msg;
    msg << "P = " << s.P() << " is below Q/(2 log Q) = " << expected;
    s.warnings.push_back(msg.str());
  }
  return s;
}

double choose_Q(double B, int n) {
  if (!(B > std::numbers::e)) throw std::invalid_argument("choose_Q: B must exceed e");
  if (n < 1) throw std::invalid_argument("choose_Q: n must be positive");
  const double k = static_cast<double>(n) / (n + 1);
  return std::pow(B, k) * std::pow(std::log(B), 1.0 / (n + 1));
}

}  // namespace polysieve::sieve
