#include "polysieve/algebra/sparse_poly.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polysieve::algebra {

SparsePoly::SparsePoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable name " + vars_[i]);
}

SparsePoly SparsePoly::constant(std::vector<std::string> variables, const BigInt& c) {
  SparsePoly f(std::move(variables));
  f.add_term(Monomial(f.num_vars(), 0), c);
  return f;
}

SparsePoly SparsePoly::variable(std::vector<std::string> variables, std::size_t index) {
  SparsePoly f(std::move(variables));
  if (index >= f.num_vars()) throw std::out_of_range("variable index out of range");
  Monomial m(f.num_vars(), 0);
  m[index] = 1;
  f.add_term(m, 1);
  return f;
}

std::size_t SparsePoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument("unknown variable " + name);
  return static_cast<std::size_t>(it - vars_.begin());
}

void SparsePoly::add_term(const Monomial& mono, const BigInt& coef) {
  if (mono.size() != vars_.size()) throw std::invalid_argument("monomial length mismatch");
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SparsePoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int SparsePoly::total_degree() const noexcept {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto x : m) d += static_cast<int>(x);
    best = std::max(best, d);
  }
  return best;
}

int SparsePoly::degree_in(std::size_t var) const noexcept {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, static_cast<int>(m[var]));
  return best;
}

bool SparsePoly::is_homogeneous() const noexcept {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto x : m) d += static_cast<int>(x);
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

BigInt SparsePoly::max_abs_coefficient() const {
  BigInt best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, BigInt(abs(c)));
  return best;
}

BigInt SparsePoly::evaluate(std::span<const BigInt> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong length");
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= boost::multiprecision::pow(point[i], m[i]);
    total += t;
  }
  return total;
}

BigInt SparsePoly::evaluate(std::span<const long long> point) const {
  std::vector<BigInt> big(point.begin(), point.end());
  return evaluate(std::span<const BigInt>(big));
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw std::invalid_argument("unknown variable index");
  SparsePoly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out.add_term(d, c * m[var]);
  }
  return out;
}

SparsePoly SparsePoly::coefficient_in(std::size_t var, std::uint32_t deg) const {
  SparsePoly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != deg) continue;
    Monomial d = m;
    d[var] = 0;
    out.add_term(d, c);
  }
  return out;
}

SparsePoly SparsePoly::scale_exponent(std::size_t var, std::uint32_t power) const {
  SparsePoly out(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    d[var] *= power;
    out.add_term(d, c);
  }
  return out;
}

SparsePoly SparsePoly::remap(std::vector<std::string> variables, std::span<const std::size_t> map) const {
  if (map.size() != vars_.size()) throw std::invalid_argument("remap: map length mismatch");
  SparsePoly out(std::move(variables));
  for (const auto& [m, c] : terms_) {
    Monomial d(out.num_vars(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] >= d.size()) throw std::invalid_argument("remap: variable dropped but used");
      d[map[i]] += m[i];
    }
    out.add_term(d, c);
  }
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly r = constant(vars_, 1);
  SparsePoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void SparsePoly::require_same_vars(const SparsePoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials have different variable lists");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.require_same_vars(b);
  SparsePoly out(a.vars_);
  Monomial m(a.num_vars());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first, then reverse lexicographic on exponents
  std::vector<std::pair<Monomial, BigInt>> sorted(terms_.rbegin(), terms_.rend());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    unsigned dx = 0, dy = 0;
    for (auto v : x.first) dx += v;
    for (auto v : y.first) dy += v;
    return dx > dy;
  });
  for (const auto& [m, c] : sorted) {
    BigInt mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool constant = true;
    for (auto v : m) constant = constant && v == 0;
    bool need_star = false;
    if (mag != 1 || constant) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

namespace detail {

std::vector<std::string> parse_vars_line(const std::string& line) {
  std::istringstream is(line);
  std::string word;
  is >> word;
  if (word != "vars") throw std::invalid_argument("expected a 'vars' header line, got: " + line);
  std::vector<std::string> vars;
  while (is >> word) vars.push_back(word);
  return vars;
}

std::optional<Monomial> parse_term_line(const std::string& line, std::size_t nvars, BigInt& coef) {
  std::istringstream is(line);
  std::string tok;
  if (!(is >> tok)) return std::nullopt;
  try {
    coef = BigInt(tok);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad coefficient '" + tok + "'");
  }
  Monomial m;
  long long e;
  while (is >> e) {
    if (e < 0) throw std::invalid_argument("negative exponent in term line: " + line);
    m.push_back(static_cast<std::uint32_t>(e));
  }
  if (!is.eof()) throw std::invalid_argument("malformed term line: " + line);
  if (m.size() != nvars)
    throw std::invalid_argument("term has " + std::to_string(m.size()) + " exponents, expected " +
                                std::to_string(nvars));
  return m;
}

}  // namespace detail

namespace {
bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}
}  // namespace

SparsePoly parse_sparse_poly(std::istream& in) {
  std::string line;
  std::optional<SparsePoly> f;
  while (std::getline(in, line)) {
    if (skip_line(line)) continue;
    if (!f) {
      f.emplace(detail::parse_vars_line(line));
      continue;
    }
    BigInt c;
    auto m = detail::parse_term_line(line, f->num_vars(), c);
    if (m) f->add_term(*m, c);
  }
  if (!f) throw std::invalid_argument("missing 'vars' header line");
  return *f;
}

void write_sparse_poly(std::ostream& out, const SparsePoly& f) {
  out << "vars";
  for (const auto& v : f.variables()) out << ' ' << v;
  out << '\n';
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    out << it->second;
    for (auto e : it->first) out << ' ' << e;
    out << '\n';
  }
}

}  // namespace polysieve::algebra
