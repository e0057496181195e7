#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysieve/algebra/zero_search.hpp"
#include "polysieve/structured/smoothness.hpp"
#include "polysieve/structured/structured_f.hpp"

namespace polysieve::expsum {

using structured::StructuredF;

enum class HyperplaneType { TypeZero, Good, Bad };

const char* to_string(HyperplaneType t) noexcept;

// A point of V(F(Z^e, X)) on the hyperplane <X, u> = 0 where the gradient
// is proportional to (0, u).
struct TangencyWitness {
  std::vector<long long> u;
  std::uint64_t p = 0;
  unsigned k = 1;
  algebra::FiniteField field;
  algebra::ProjectivePoint point;  // (Z, X1, ..., Xn)
};

struct Classification {
  HyperplaneType type = HyperplaneType::Good;
  std::optional<TangencyWitness> witness;  // set iff Bad
  unsigned k_searched = 0;                 // Good means nothing found for k <= k_searched
};

// Raised when classification is requested at a prime of bad reduction.
class BadReductionError : public std::runtime_error {
 public:
  BadReductionError(std::uint64_t p, structured::GoodReductionCert cert);
  std::uint64_t prime() const noexcept { return p_; }
  const structured::GoodReductionCert& certificate() const noexcept { return cert_; }

 private:
  std::uint64_t p_;
  structured::GoodReductionCert cert_;
};

// Classifies hyperplanes for one prime. Construction certifies good reduction
// up to k_max (throws BadReductionError otherwise) and caches the reduced
// gradient over each F_{p^k}.
class Classifier {
 public:
  Classifier(const StructuredF& F, std::uint64_t p, unsigned k_max = 2);

  std::uint64_t p() const noexcept { return p_; }
  unsigned k_max() const noexcept { return k_max_; }
  int n() const noexcept { return n_; }
  const structured::GoodReductionCert& reduction_certificate() const noexcept { return cert_; }

  Classification classify(std::span<const long long> u) const;

 private:
  struct Level {
    unsigned k;
    algebra::FiniteField field;
    algebra::FieldPoly G;
    std::vector<algebra::FieldPoly> grad;  // d/dZ, d/dX1, ..., d/dXn
  };

  std::uint64_t p_;
  unsigned k_max_;
  int n_;
  structured::GoodReductionCert cert_;
  std::vector<Level> levels_;
  StructuredF F_;
};

Classification classify(const StructuredF& F, std::span<const long long> u, std::uint64_t p, unsigned k_max = 2);

// Recomputes G, <X, u> and the rank of [grad G | (0, u)] at the witness.
bool verify_tangency_witness(const StructuredF& F, const TangencyWitness& w);

// Types for every u in F_p^n, computed once per projective class.
class ClassificationTable {
 public:
  explicit ClassificationTable(const Classifier& c);

  std::uint64_t p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  HyperplaneType at(std::span<const long long> u) const;
  HyperplaneType at_index(std::size_t i) const { return types_[i]; }
  std::size_t size() const noexcept { return types_.size(); }
  std::size_t count(HyperplaneType t) const;
  // Witness for one representative of each bad class, in index order.
  const std::vector<TangencyWitness>& bad_witnesses() const noexcept { return witnesses_; }

 private:
  std::uint64_t p_;
  int n_;
  std::vector<HyperplaneType> types_;
  std::vector<TangencyWitness> witnesses_;
};

}  // namespace polysieve::expsum
