#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polysieve/expsum/classify.hpp"
#include "polysieve/expsum/exp_sum_table.hpp"

namespace polysieve::expsum {

struct WeilOptions {
  unsigned k_max = 2;
  // A Good u with |g| / p^{n/2} above this is reported as a probable
  // misclassification (too small k_max can only turn Bad into Good).
  double good_ceiling = 8.0;
};

struct WeilEntry {
  std::vector<long long> u;
  std::complex<double> g;
  double abs = 0.0;
  double error = 0.0;
  HyperplaneType type = HyperplaneType::Good;
  double exponent = 0.0;  // n - 1/2, n/2 or (n + 1)/2 by type
  double ratio = 0.0;     // |g| / p^exponent
  double ratio_half = 0.0;  // |g| / p^{n/2}
  bool probable_misclassification = false;
};

struct WeilReport {
  std::uint64_t p = 0;
  int n = 0;
  unsigned k_max = 0;
  std::vector<WeilEntry> entries;
  double max_ratio[3] = {0, 0, 0};  // indexed by HyperplaneType
  std::size_t counts[3] = {0, 0, 0};
  std::size_t flagged = 0;
};

double weil_exponent(HyperplaneType t, int n) noexcept;

// Values come from the DFT table, types from the classifier.
WeilReport weil_check(const StructuredF& F, std::uint64_t p, std::span<const std::vector<long long>> sample,
                      const WeilOptions& opt = {});
WeilReport weil_check(const ExpSumTable& table, const Classifier& c, std::span<const std::vector<long long>> sample,
                      const WeilOptions& opt = {});

}  // namespace polysieve::expsum
