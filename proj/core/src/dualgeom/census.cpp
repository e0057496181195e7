#include "polysieve/dualgeom/census.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "polysieve/parallel.hpp"

namespace polysieve::dualgeom {

BadPrimeCensus::BadPrimeCensus(const StructuredF& F, std::uint64_t prime_bound, unsigned k_max)
    : bound_(prime_bound) {
  for (std::uint64_t p = 3; p <= prime_bound; p += 2) {
    if (!algebra::is_prime(p)) continue;
    try {
      classifiers_.push_back(std::make_unique<expsum::Classifier>(F, p, k_max));
      good_.push_back(p);
    } catch (const expsum::BadReductionError&) {
      bad_reduction_.push_back(p);
    }
  }
}

std::vector<std::uint64_t> BadPrimeCensus::bad_primes(std::span<const long long> u) const {
  if (std::all_of(u.begin(), u.end(), [](long long v) { return v == 0; }))
    throw std::invalid_argument("bad_prime_census: u must be nonzero");
  std::vector<std::uint64_t> out;
  for (const auto& c : classifiers_)
    if (c->classify(u).type == expsum::HyperplaneType::Bad) out.push_back(c->p());
  return out;
}

std::vector<std::uint64_t> bad_prime_census(const StructuredF& F, std::span<const long long> u,
                                            std::uint64_t prime_bound, unsigned k_max) {
  return BadPrimeCensus(F, prime_bound, k_max).bad_primes(u);
}

std::vector<std::uint64_t> bad_locus_census(const StructuredF& F, std::span<const long long> radii,
                                            std::span<const std::uint64_t> probes, unsigned k_max) {
  if (std::set<std::uint64_t>(probes.begin(), probes.end()).size() != probes.size())
    throw std::invalid_argument("bad_locus_census: probe primes must be distinct");
  if (probes.size() < 3) throw std::invalid_argument("bad_locus_census: need at least three probe primes");
  for (auto r : radii)
    if (r < 0) throw std::invalid_argument("bad_locus_census: R must be >= 0");
  const int n = F.n();
  // per probe: is u (mod p) of type zero or bad
  std::vector<std::vector<std::uint8_t>> hit;
  for (auto p : probes) {
    const expsum::ClassificationTable table(expsum::Classifier(F, p, k_max));
    std::vector<std::uint8_t> h(table.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = table.at_index(i) != expsum::HyperplaneType::Good;
    hit.push_back(std::move(h));
  }
  const long long Rmax = radii.empty() ? 0 : *std::max_element(radii.begin(), radii.end());
  const std::size_t side = static_cast<std::size_t>(2 * Rmax + 1);
  // residues of each coordinate value, per probe
  std::vector<std::vector<std::size_t>> res(probes.size(), std::vector<std::size_t>(side));
  for (std::size_t j = 0; j < probes.size(); ++j) {
    const auto p = static_cast<long long>(probes[j]);
    for (std::size_t i = 0; i < side; ++i) res[j][i] = static_cast<std::size_t>(((static_cast<long long>(i) - Rmax) % p + p) % p);
  }
  // count by sup-norm shell so every radius falls out of one sweep
  std::vector<std::vector<std::uint64_t>> shells(side, std::vector<std::uint64_t>(static_cast<std::size_t>(Rmax) + 1, 0));
  parallel_slabs(side, [&](std::size_t slab) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    idx[0] = slab;
    auto& counts = shells[slab];
    for (;;) {
      bool all = true;
      for (std::size_t j = 0; j < probes.size() && all; ++j) {
        std::size_t ix = 0;
        for (auto c : idx) ix = ix * probes[j] + res[j][c];
        all = hit[j][ix] != 0;
      }
      if (all) {
        long long norm = 0;
        for (auto c : idx) norm = std::max(norm, std::llabs(static_cast<long long>(c) - Rmax));
        ++counts[static_cast<std::size_t>(norm)];
      }
      int i = n - 1;
      while (i >= 1 && idx[static_cast<std::size_t>(i)] == side - 1) {
        idx[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 1) break;
      ++idx[static_cast<std::size_t>(i)];
    }
  });
  std::vector<std::uint64_t> by_norm(static_cast<std::size_t>(Rmax) + 1, 0);
  for (const auto& s : shells)
    for (std::size_t r = 0; r < s.size(); ++r) by_norm[r] += s[r];
  std::vector<std::uint64_t> out;
  for (auto R : radii) {
    std::uint64_t c = 0;
    for (long long r = 0; r <= R; ++r) c += by_norm[static_cast<std::size_t>(r)];
    out.push_back(c);
  }
  return out;
}

std::uint64_t bad_locus_census(const StructuredF& F, long long R, std::span<const std::uint64_t> probes,
                               unsigned k_max) {
  const long long radii[] = {R};
  return bad_locus_census(F, std::span<const long long>(radii), probes, k_max).front();
}

}  // namespace polysieve::dualgeom
