#pragma once

#include <optional>
#include <vector>

#include "curvelattice/upoly.hpp"

namespace cl {

// All distinct roots of p in Q(w), sorted. Each root is verified exactly.
std::vector<CycloNum> roots_in_field(const UPoly& p);

// Square root in Q(w) lying in the positive half-plane, if one exists.
std::optional<CycloNum> sqrt_in_field(const CycloNum& c);
std::vector<CycloNum> cube_roots_in_field(const CycloNum& c);

}  // namespace cl
