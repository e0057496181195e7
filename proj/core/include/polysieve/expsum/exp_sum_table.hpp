#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "polysieve/counting/counting.hpp"
#include "polysieve/structured/structured_f.hpp"

namespace polysieve::expsum {

using structured::StructuredF;

// A complex value with an absolute error bound.
struct ExpSumValue {
  std::complex<double> value;
  double error = 0.0;
};

// u -> g(u, p) over F_p^n, row-major in u with the first coordinate slowest.
struct ExpSumTable {
  std::uint64_t p = 0;
  int n = 0;
  double err_budget = 0.0;  // bound on |computed - exact| for every entry
  std::vector<std::complex<double>> values;

  std::size_t index(std::span<const long long> u) const;
  const std::complex<double>& at(std::span<const long long> u) const { return values[index(u)]; }
  double max_abs() const;
};

// g(u, p) = sum_a (nu_p(a) - 1) e_p(<a, u>) for all u at once, as an
// n-dimensional DFT of the array a -> nu_p(a) - 1.
ExpSumTable g_table(const StructuredF& F, std::uint64_t p);
ExpSumTable g_table(const counting::FiberTable& fibers);

// Inverse transform at a = 0 divided by p^n: reproduces nu_p(0) - 1.
ExpSumValue inverse_at_origin(const ExpSumTable& t);

// Binary dump: uint64 p, uint64 n, float64 err_budget, then p^n pairs
// (re, im) of float64, all little-endian, u in row-major order.
void write_table_binary(std::ostream& out, const ExpSumTable& t);
ExpSumTable read_table_binary(std::istream& in);

}  // namespace polysieve::expsum
