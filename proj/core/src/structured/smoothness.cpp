#include "polysieve/structured/smoothness.hpp"

#include <stdexcept>

#include "polysieve/algebra/field_poly.hpp"

namespace polysieve::structured {

using algebra::FieldPoly;
using algebra::FiniteField;

std::vector<SparsePoly> singularity_system(const StructuredF& F) {
  const SparsePoly G = unweighted_form(F);
  std::vector<SparsePoly> sys{G};
  for (std::size_t v = 0; v < G.num_vars(); ++v) sys.push_back(G.derivative(v));
  return sys;
}

GoodReductionCert smoothness_mod_p(const StructuredF& F, std::uint64_t p, unsigned k_max) {
  if (!algebra::is_prime(p)) throw std::invalid_argument("smoothness_mod_p: p must be prime");
  if (k_max == 0) throw std::invalid_argument("smoothness_mod_p: k_max must be >= 1");
  const auto sys = singularity_system(F);
  GoodReductionCert cert;
  cert.p = p;
  cert.k_searched = k_max;
  for (unsigned k = 1; k <= k_max; ++k) {
    const auto field = FiniteField::extension(p, k);
    std::vector<FieldPoly> polys;
    for (const auto& f : sys) polys.push_back(FieldPoly::reduce(f, field));
    algebra::ProjectiveZeroSearch search(field, std::move(polys), sys.front().num_vars());
    if (auto pt = search.first()) {
      cert.smooth = false;
      cert.witness = SingularWitness{k, field, *pt};
      if (!verify_singular_witness(F, *cert.witness))
        throw std::logic_error("singular witness failed re-evaluation");
      return cert;
    }
  }
  cert.smooth = true;
  return cert;
}

bool verify_singular_witness(const StructuredF& F, const SingularWitness& w) {
  for (const auto& f : singularity_system(F))
    if (algebra::poly_eval(f, w.point, w.field).index != 0) return false;
  bool nonzero = false;
  for (auto x : w.point) nonzero = nonzero || x.index != 0;
  return nonzero;
}

SmoothCertificate smooth_over_C_certificate(const StructuredF& F, std::span<const std::uint64_t> trial_primes,
                                            unsigned k_max) {
  if (trial_primes.empty()) throw std::invalid_argument("smooth_over_C_certificate: empty prime list");
  for (auto p : trial_primes)
    if (p == 2 || !algebra::is_prime(p))
      throw std::invalid_argument("smooth_over_C_certificate: trial primes must be odd primes");
  SmoothCertificate out;
  for (auto p : trial_primes) {
    out.certs.push_back(smoothness_mod_p(F, p, k_max));
    if (out.certs.back().smooth) {
      out.certified = true;
      out.prime = p;
      break;
    }
  }
  return out;
}

}  // namespace polysieve::structured
