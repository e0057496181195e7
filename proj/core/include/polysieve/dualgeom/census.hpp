#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "polysieve/expsum/classify.hpp"

namespace polysieve::dualgeom {

using structured::StructuredF;

// Per-prime classifiers for all odd primes up to a bound. Primes of bad
// reduction are set aside (classification refuses them).
class BadPrimeCensus {
 public:
  BadPrimeCensus(const StructuredF& F, std::uint64_t prime_bound, unsigned k_max = 2);

  std::uint64_t prime_bound() const noexcept { return bound_; }
  const std::vector<std::uint64_t>& good_primes() const noexcept { return good_; }
  const std::vector<std::uint64_t>& bad_reduction_primes() const noexcept { return bad_reduction_; }

  // Good-reduction primes p <= bound with u bad mod p.
  std::vector<std::uint64_t> bad_primes(std::span<const long long> u) const;

 private:
  std::uint64_t bound_;
  std::vector<std::uint64_t> good_;
  std::vector<std::uint64_t> bad_reduction_;
  std::vector<std::unique_ptr<expsum::Classifier>> classifiers_;
};

std::vector<std::uint64_t> bad_prime_census(const StructuredF& F, std::span<const long long> u,
                                            std::uint64_t prime_bound, unsigned k_max = 2);

// Number of u in [-R, R]^n that are of type zero or bad modulo every probe
// prime (u = 0 included). Probes must be at least three distinct odd primes
// of good reduction.
std::uint64_t bad_locus_census(const StructuredF& F, long long R, std::span<const std::uint64_t> probes,
                               unsigned k_max = 2);

// Same count for several R at once, sharing the per-probe tables.
std::vector<std::uint64_t> bad_locus_census(const StructuredF& F, std::span<const long long> radii,
                                            std::span<const std::uint64_t> probes, unsigned k_max = 2);

}  // namespace polysieve::dualgeom
