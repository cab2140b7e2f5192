#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curvelattice/mpoly.hpp"

namespace cl {

// expr   := term (('+'|'-') term)*      (a leading sign is also accepted)
// term   := factor ('*' factor)*
// factor := base ('^' natural)?
// base   := rational | 'w' | variable | '(' expr ')'
// 'w' denotes the cube root of unity, so it cannot be a variable name.
MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

CycloNum parse_cyclo(std::string_view text);

std::vector<std::string> parse_var_list(std::string_view text);  // "x,y,z"

}  // namespace cl
