#include "polysieve/structured/structured_f.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace polysieve::structured {

const char* to_string(StructuredErrorKind kind) noexcept {
  switch (kind) {
    case StructuredErrorKind::DegreeMismatch: return "DegreeMismatch";
    case StructuredErrorKind::ZeroLastForm: return "ZeroLastForm";
    case StructuredErrorKind::MNotAtLeastTwo: return "MNotAtLeastTwo";
    case StructuredErrorKind::BadShape: return "BadShape";
    case StructuredErrorKind::Malformed: return "Malformed";
  }
  return "Unknown";
}

StructuredF StructuredF::validate(int m, int d, int e, int n, std::vector<SparsePoly> forms) {
  if (m < 2) throw StructuredError(StructuredErrorKind::MNotAtLeastTwo, "m = " + std::to_string(m));
  if (d < 1 || e < 1 || n < 1)
    throw StructuredError(StructuredErrorKind::BadShape, "need d, e, n >= 1");
  if (forms.size() != static_cast<std::size_t>(d))
    throw StructuredError(StructuredErrorKind::BadShape,
                          "expected " + std::to_string(d) + " forms, got " + std::to_string(forms.size()));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& f = forms[i];
    if (f.num_vars() != static_cast<std::size_t>(n))
      throw StructuredError(StructuredErrorKind::BadShape,
                            "f_" + std::to_string(i + 1) + " has " + std::to_string(f.num_vars()) + " variables");
    if (f.variables() != forms[0].variables())
      throw StructuredError(StructuredErrorKind::BadShape, "forms use different variable lists");
    const int want = m * e * static_cast<int>(i + 1);
    if (!f.is_homogeneous() || (!f.is_zero() && f.total_degree() != want))
      throw StructuredError(StructuredErrorKind::DegreeMismatch,
                            "f_" + std::to_string(i + 1) + " must be a form of degree " + std::to_string(want));
  }
  if (forms.back().is_zero()) throw StructuredError(StructuredErrorKind::ZeroLastForm, "f_d vanishes identically");
  const auto& xs = forms[0].variables();
  std::string y = "Y";
  while (std::find(xs.begin(), xs.end(), y) != xs.end()) y += "_";

  StructuredF F;
  F.m_ = m;
  F.d_ = d;
  F.e_ = e;
  F.n_ = n;
  std::vector<std::string> vars{y};
  vars.insert(vars.end(), xs.begin(), xs.end());
  std::vector<std::size_t> shift(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  SparsePoly full(vars);
  algebra::Monomial lead(vars.size(), 0);
  lead[0] = static_cast<std::uint32_t>(m * d);
  full.add_term(lead, 1);
  for (int i = 1; i <= d; ++i) {
    const SparsePoly fi = forms[static_cast<std::size_t>(i - 1)].remap(vars, shift);
    for (const auto& [mono, c] : fi.terms()) {
      algebra::Monomial t = mono;
      t[0] = static_cast<std::uint32_t>(m * (d - i));
      full.add_term(t, c);
    }
  }
  F.forms_ = std::move(forms);
  F.full_ = std::move(full);
  return F;
}

std::string StructuredF::describe() const {
  std::ostringstream os;
  os << "m=" << m_ << " d=" << d_ << " e=" << e_ << " n=" << n_ << " F = " << full_.to_string();
  return os.str();
}

SparsePoly unweighted_form(const StructuredF& F) {
  auto vars = F.polynomial().variables();
  std::string z = "Z";
  while (std::find(vars.begin() + 1, vars.end(), z) != vars.end()) z += "_";
  vars[0] = z;
  std::vector<std::size_t> id(vars.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return F.polynomial().scale_exponent(0, static_cast<std::uint32_t>(F.e())).remap(vars, id);
}

namespace {
bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}
}  // namespace

StructuredF parse_structured(std::istream& in) {
  std::string line;
  int m = 0, d = 0, e = 0, n = 0;
  bool have_header = false;
  std::vector<SparsePoly> forms;
  while (std::getline(in, line)) {
    if (skip_line(line)) continue;
    if (!have_header) {
      std::istringstream is(line);
      std::string extra;
      if (!(is >> m >> d >> e >> n) || (is >> extra))
        throw StructuredError(StructuredErrorKind::Malformed, "expected header 'm d e n', got: " + line);
      have_header = true;
      continue;
    }
    std::istringstream is(line);
    std::string first;
    is >> first;
    if (first == "vars") {
      forms.emplace_back(algebra::detail::parse_vars_line(line));
      continue;
    }
    if (forms.empty()) throw StructuredError(StructuredErrorKind::Malformed, "term line before any 'vars' line");
    BigInt c;
    try {
      auto mono = algebra::detail::parse_term_line(line, forms.back().num_vars(), c);
      if (mono) forms.back().add_term(*mono, c);
    } catch (const std::invalid_argument& ex) {
      throw StructuredError(StructuredErrorKind::Malformed, ex.what());
    }
  }
  if (!have_header) throw StructuredError(StructuredErrorKind::Malformed, "empty instance");
  return StructuredF::validate(m, d, e, n, std::move(forms));
}

StructuredF load_structured(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  return parse_structured(in);
}

void write_structured(std::ostream& out, const StructuredF& F) {
  out << F.m() << ' ' << F.d() << ' ' << F.e() << ' ' << F.n() << '\n';
  for (const auto& f : F.forms()) algebra::write_sparse_poly(out, f);
}

}  // namespace polysieve::structured
