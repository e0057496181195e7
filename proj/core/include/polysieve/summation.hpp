#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace polysieve {

// Neumaier's variant of Kahan summation. abs_total() tracks sum |x_i| so
// callers can turn it into an error bound.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    abs_ += std::abs(x);
    ++count_;
  }
  void add(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
    abs_ += other.abs_ - std::abs(other.sum_) - std::abs(other.comp_);
    count_ += other.count_ - 2;
  }
  double value() const noexcept { return sum_ + comp_; }
  double abs_total() const noexcept { return abs_; }
  long long count() const noexcept { return count_; }
  // Neumaier summation error is bounded by 2u|sum| + O(n u^2) sum|x_i|.
  double error_bound() const noexcept {
    constexpr double u = std::numeric_limits<double>::epsilon() / 2;
    return 2 * u * std::abs(value()) + 2 * static_cast<double>(count_) * u * u * abs_ + 4 * u * u * abs_;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
  long long count_ = 0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }
  double error_bound() const noexcept { return re_.error_bound() + im_.error_bound(); }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace polysieve
