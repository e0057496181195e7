#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polysieve/structured/smoothness.hpp"

namespace polysieve::sieve {

using structured::StructuredF;

struct SievingSet {
  double Q = 0.0;
  int m = 1;
  unsigned k_max = 2;
  std::vector<std::uint64_t> primes;
  std::vector<structured::GoodReductionCert> certs;  // parallel to primes
  std::vector<std::uint64_t> rejected;                // p = 1 mod m in range, singular mod p
  std::vector<std::string> warnings;

  std::size_t P() const noexcept { return primes.size(); }
};

// Odd primes p in [Q, 2Q] with p = 1 mod m and a smooth reduction of
// F(Z^e, X) over F_{p^k}, k <= k_max. Throws when nothing qualifies; warns
// when fewer than Q / (2 log Q) primes survive.
SievingSet build_sieving_set(const StructuredF& F, double Q, int m, unsigned k_max = 2);

// B^{n/(n+1)} (log B)^{1/(n+1)}; needs B > e.
double choose_Q(double B, int n);

}  // namespace polysieve::sieve
