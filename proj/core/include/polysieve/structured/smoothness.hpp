#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polysieve/algebra/zero_search.hpp"
#include "polysieve/structured/structured_f.hpp"

namespace polysieve::structured {

struct SingularWitness {
  unsigned k = 1;  // residue degree of the field the point lives in
  algebra::FiniteField field;
  algebra::ProjectivePoint point;  // coordinates (Z, X1, ..., Xn)
};

struct GoodReductionCert {
  std::uint64_t p = 0;
  unsigned k_searched = 0;  // extensions F_{p^k}, k <= k_searched, were examined
  bool smooth = false;
  std::optional<SingularWitness> witness;
};

// F(Z^e, X) together with its n+1 partial derivatives, over the integers.
std::vector<SparsePoly> singularity_system(const StructuredF& F);

// Searches for a common zero of F(Z^e, X) and all its partials over F_{p^k},
// k = 1..k_max, stopping at the first k that yields one. Smooth means none
// was found in that range, which is not a proof for larger k.
GoodReductionCert smoothness_mod_p(const StructuredF& F, std::uint64_t p, unsigned k_max = 2);

// Re-evaluates the whole singularity system at the witness.
bool verify_singular_witness(const StructuredF& F, const SingularWitness& w);

struct SmoothCertificate {
  bool certified = false;
  std::optional<std::uint64_t> prime;
  std::vector<GoodReductionCert> certs;  // one per trial prime examined
};

// A single smooth reduction certifies smoothness over C. Trial primes must be
// odd primes; they are tried in the given order.
SmoothCertificate smooth_over_C_certificate(const StructuredF& F, std::span<const std::uint64_t> trial_primes,
                                            unsigned k_max = 2);

}  // namespace polysieve::structured
