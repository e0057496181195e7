#include "polysieve/expsum/weil.hpp"

#include <cmath>

namespace polysieve::expsum {

double weil_exponent(HyperplaneType t, int n) noexcept {
  switch (t) {
    case HyperplaneType::TypeZero: return n - 0.5;
    case HyperplaneType::Good: return n / 2.0;
    case HyperplaneType::Bad: return (n + 1) / 2.0;
  }
  return 0.0;
}

WeilReport weil_check(const ExpSumTable& table, const Classifier& c, std::span<const std::vector<long long>> sample,
                      const WeilOptions& opt) {
  if (table.p != c.p() || table.n != c.n()) throw std::invalid_argument("weil_check: table and classifier disagree");
  WeilReport rep;
  rep.p = table.p;
  rep.n = table.n;
  rep.k_max = c.k_max();
  const double p = static_cast<double>(table.p);
  for (const auto& u : sample) {
    WeilEntry e;
    e.u = u;
    e.g = table.at(u);
    e.abs = std::abs(e.g);
    e.error = table.err_budget;
    e.type = c.classify(u).type;
    e.exponent = weil_exponent(e.type, table.n);
    e.ratio = e.abs / std::pow(p, e.exponent);
    e.ratio_half = e.abs / std::pow(p, table.n / 2.0);
    e.probable_misclassification = e.type == HyperplaneType::Good && e.ratio_half > opt.good_ceiling;
    const auto t = static_cast<std::size_t>(e.type);
    rep.max_ratio[t] = std::max(rep.max_ratio[t], e.ratio);
    ++rep.counts[t];
    if (e.probable_misclassification) ++rep.flagged;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

WeilReport weil_check(const StructuredF& F, std::uint64_t p, std::span<const std::vector<long long>> sample,
                      const WeilOptions& opt) {
  const Classifier c(F, p, opt.k_max);
  return weil_check(g_table(F, p), c, sample, opt);
}

}  // namespace polysieve::expsum
