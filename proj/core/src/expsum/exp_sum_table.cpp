#include "polysieve/expsum/exp_sum_table.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "polysieve/summation.hpp"

namespace polysieve::expsum {

namespace {

// the FFTW planner is not reentrant
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (!in) throw std::runtime_error("truncated exponential-sum table");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

void put_f64(std::ostream& out, double x) { put_u64(out, std::bit_cast<std::uint64_t>(x)); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

}  // namespace

std::size_t ExpSumTable::index(std::span<const long long> u) const {
  if (u.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("ExpSumTable: u has wrong length");
  const auto pp = static_cast<long long>(p);
  std::size_t idx = 0;
  for (long long v : u) {
    long long r = v % pp;
    if (r < 0) r += pp;
    idx = idx * p + static_cast<std::size_t>(r);
  }
  return idx;
}

double ExpSumTable::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

ExpSumTable g_table(const StructuredF& F, std::uint64_t p) { return g_table(counting::FiberTable(F, p)); }

ExpSumTable g_table(const counting::FiberTable& fibers) {
  ExpSumTable t;
  t.p = fibers.p();
  t.n = fibers.n();
  const std::size_t N = fibers.size();
  auto* data = fftw_alloc_complex(N);
  if (!data) throw std::bad_alloc();
  double l2 = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const double v = fibers.at_index(i) - 1.0;
    data[i][0] = v;
    data[i][1] = 0.0;
    l2 += v * v;
  }
  std::vector<int> dims(static_cast<std::size_t>(t.n), static_cast<int>(t.p));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    // FFTW_BACKWARD uses exp(+2 pi i jk / n), matching e_p(<a, u>)
    plan = fftw_plan_dft(t.n, dims.data(), data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!plan) {
    fftw_free(data);
    throw std::runtime_error("FFTW could not plan the transform");
  }
  fftw_execute(plan);
  t.values.resize(N);
  for (std::size_t i = 0; i < N; ++i) t.values[i] = {data[i][0], data[i][1]};
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(data);
  // The error vector of a floating FFT has l2 norm at most
  // c * eps * log2(N) * ||y||_2 with ||y||_2 = sqrt(N) ||x||_2; a single
  // entry cannot exceed that. c = 8 is generous for FFTW's algorithms.
  const double eps = std::numeric_limits<double>::epsilon();
  const double logn = std::max(1.0, std::log2(static_cast<double>(N)));
  t.err_budget = 8.0 * eps * logn * std::sqrt(static_cast<double>(N)) * std::sqrt(l2) + eps;
  return t;
}

ExpSumValue inverse_at_origin(const ExpSumTable& t) {
  CompensatedComplexSum s;
  for (const auto& v : t.values) s.add(v);
  const double N = static_cast<double>(t.values.size());
  ExpSumValue out;
  out.value = s.value() / N;
  out.error = (t.err_budget * N + s.error_bound()) / N;
  return out;
}

void write_table_binary(std::ostream& out, const ExpSumTable& t) {
  put_u64(out, t.p);
  put_u64(out, static_cast<std::uint64_t>(t.n));
  put_f64(out, t.err_budget);
  for (const auto& v : t.values) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  if (!out) throw std::runtime_error("failed writing exponential-sum table");
}

ExpSumTable read_table_binary(std::istream& in) {
  ExpSumTable t;
  t.p = get_u64(in);
  t.n = static_cast<int>(get_u64(in));
  t.err_budget = get_f64(in);
  std::size_t N = 1;
  for (int i = 0; i < t.n; ++i) {
    if (N > (std::size_t{1} << 32) / std::max<std::uint64_t>(t.p, 1)) throw std::runtime_error("table too large");
    N *= t.p;
  }
  t.values.resize(N);
  for (auto& v : t.values) {
    const double re = get_f64(in);
    const double im = get_f64(in);
    v = {re, im};
  }
  return t;
}

}  // namespace polysieve::expsum
