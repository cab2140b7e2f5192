#pragma once

#include <map>
#include <string>

#include "curvelattice/adjunction.hpp"
#include "curvelattice/spectrum.hpp"

namespace cl {

struct RankReport {
  bool applicable = false;
  std::string reason;              // why not applicable
  std::map<Rat, int> obstruction;  // alpha -> nu(alpha) * delta_alpha, nonzero entries only
  int rank = 0;
  std::map<Rat, int> contributions;  // alpha in (0,1) -> (nu(alpha) + nu(alpha - 1)) * ord(alpha)
  int rank_from_defects = 0;         // 2 * sum nu(alpha) * delta_{1 - alpha}
  bool formulas_agree = true;
  int order_at_one = 0;  // r - 1, reported but never counted
  int e = 0;             // weighted degree of f with coprime weights
};

// e | d and sum over 0 <= alpha < 1 of nu(alpha) * delta_alpha vanishes
// (delta_0 = 0). Fills applicable, reason, obstruction and e.
RankReport applicability(const WeightedPoly& f, const CurveProfile& profile);

// Rank of y-points for x1^p + x2^q-type fibrations built from f and the curve.
// NotApplicable (with the obstruction in the message) when applicability fails.
RankReport mw_rank(const WeightedPoly& f, const CurveProfile& profile);

// y^2 = x^e + g: 2 * sum_{i=1}^{floor((e-1)/2)} ord(1/2 + i/e), checked against
// mw_rank with f = x^2 + y^e. DegreeParity for odd d, NotApplicable if e does
// not divide d, UnclassifiedPoint for singular points that are not declared.
RankReport mw_rank_hyperelliptic(int e, const CurveProfile& profile);

}  // namespace cl
