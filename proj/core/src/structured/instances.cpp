#include "polysieve/structured/instances.hpp"

namespace polysieve::structured {

namespace {

const std::vector<std::string> kX{"X1", "X2", "X3"};

// sum_i c[i] * X_i^deg
SparsePoly diagonal(std::initializer_list<int> c, std::uint32_t deg) {
  SparsePoly f(kX);
  std::size_t i = 0;
  for (int ci : c) {
    algebra::Monomial m(3, 0);
    m[i++] = deg;
    f.add_term(m, ci);
  }
  return f;
}

}  // namespace

StructuredF instance_FA() { return StructuredF::validate(2, 1, 1, 3, {diagonal({-1, -1, -1}, 2)}); }

StructuredF instance_FB() {
  return StructuredF::validate(2, 2, 1, 3, {diagonal({1, 1, 1}, 2), diagonal({1, 1, 1}, 4)});
}

StructuredF instance_FC() { return StructuredF::validate(2, 1, 2, 3, {diagonal({-1, -1, -1}, 4)}); }

StructuredF instance_FD() { return StructuredF::validate(2, 1, 1, 3, {diagonal({-1, -1, 1}, 2)}); }

StructuredF instance_Fsing() { return StructuredF::validate(2, 1, 1, 3, {diagonal({-1, 0, 0}, 2)}); }

std::vector<std::string> bundled_instance_names() { return {"F_A", "F_B", "F_C", "F_D", "F_sing"}; }

std::optional<StructuredF> bundled_instance(std::string_view name) {
  if (name == "F_A") return instance_FA();
  if (name == "F_B") return instance_FB();
  if (name == "F_C") return instance_FC();
  if (name == "F_D") return instance_FD();
  if (name == "F_sing") return instance_Fsing();
  return std::nullopt;
}

}  // namespace polysieve::structured
