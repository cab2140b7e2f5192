#pragma once

#include <random>

#include "curvelattice/mpoly.hpp"
#include "curvelattice/upoly.hpp"

namespace cltest {

inline cl::CycloNum rand_cyclo(std::mt19937_64& rng, int lo = -3, int hi = 3, bool with_w = true) {
  std::uniform_int_distribution<int> d(lo, hi);
  return with_w ? cl::CycloNum(cl::Rat(d(rng)), cl::Rat(d(rng))) : cl::CycloNum(cl::Rat(d(rng)));
}

// Random homogeneous form of degree deg in the given variables.
inline cl::MPoly rand_form(const std::vector<std::string>& vars, int deg, std::mt19937_64& rng,
                           bool with_w = true) {
  cl::MPoly p(vars);
  std::size_t n = vars.size();
  cl::Monomial m(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      m[i] = left;
      p.add_term(m, rand_cyclo(rng, -3, 3, with_w));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, deg);
  return p;
}

inline cl::MPoly rand_poly(const std::vector<std::string>& vars, int deg, std::mt19937_64& rng,
                           bool with_w = true) {
  cl::MPoly p(vars);
  for (int d = 0; d <= deg; ++d) p += rand_form(vars, d, rng, with_w);
  return p;
}

inline cl::UPoly rand_upoly(int deg, std::mt19937_64& rng, bool with_w = true) {
  std::vector<cl::CycloNum> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rand_cyclo(rng, -5, 5, with_w));
  if (c.back().is_zero()) c.back() = cl::CycloNum(1);
  return cl::UPoly(c);
}

}  // namespace cltest
