#pragma once

#include <array>
#include <map>

#include "curvelattice/mpoly.hpp"

namespace cl {

// Weighted-homogeneous f(x1, x2) with an isolated singularity at the origin.
struct WeightedPoly {
  MPoly f;
  std::array<int, 2> weights{1, 1};
  int wdeg = 0;

  // Validates homogeneity (UsageError) and isolatedness (NotIsolated).
  static WeightedPoly make(const MPoly& f, std::array<int, 2> weights);
  // Milnor number (d - w1)(d - w2) / (w1 w2).
  Rat milnor_number() const;
};

using Spectrum = std::map<Rat, int>;

// Weighted degree -> dimension of that piece of C[x1,x2]/(f_x1, f_x2).
std::map<int, int> milnor_graded_dims(const WeightedPoly& f);

// nu(alpha) = dim M_{(alpha+1)d - w1 - w2}.
Spectrum spectrum(const WeightedPoly& f);
int nu(const Spectrum& s, const Rat& alpha);

// nu(alpha) + nu(alpha - 1), the weight of alpha in the rank formula.
int eigen_dim(const WeightedPoly& f, const Rat& alpha);

// Number of branches of f = 0 at the origin, over the algebraic closure.
int branch_count(const WeightedPoly& f);

}  // namespace cl
