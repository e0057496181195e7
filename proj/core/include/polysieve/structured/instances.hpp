#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysieve/structured/structured_f.hpp"

namespace polysieve::structured {

// Bundled reference instances, all with m = 2 and n = 3:
//   F_A     Y^2 - (X1^2 + X2^2 + X3^2)                  d=1 e=1
//   F_B     Y^4 + Y^2 (X1^2+X2^2+X3^2) + X1^4+X2^4+X3^4  d=2 e=1
//   F_C     Y^2 - (X1^4 + X2^4 + X3^4)                  d=1 e=2
//   F_D     Y^2 - X1^2 - X2^2 + X3^2                    d=1 e=1
//   F_sing  Y^2 - X1^2 (singular over C)                d=1 e=1
StructuredF instance_FA();
StructuredF instance_FB();
StructuredF instance_FC();
StructuredF instance_FD();
StructuredF instance_Fsing();

std::vector<std::string> bundled_instance_names();
std::optional<StructuredF> bundled_instance(std::string_view name);

}  // namespace polysieve::structured
