#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvelattice/adjunction.hpp"
#include "curvelattice/lattice.hpp"
#include "curvelattice/torus.hpp"

namespace cl {

// Invariants of one curve of a candidate Zariski pair, plus the Gram matrix of
// the lattice generated by its known points.
struct ZariskiSide {
  std::string name;
  std::string source;  // "computed" or "fixture"
  int degree = 0;
  int cusps = 0, nodes = 0, other = 0;
  int components = 1;
  std::map<Rat, int> alexander;  // alpha -> order, as in AlexanderPoly::orders
  int delta_sixth = 0;           // delta_{1/6}
  int predicted_rank = 0;        // mw_rank with f = x^2 + y^3
  QMatrix gram;                  // basis Gram of the generated lattice
  std::string alexander_str() const;
};

// Everything is computed from the profile; the points must lie on a rescaling
// of profile.g and pass verify_decomposition (InvalidPoint otherwise).
ZariskiSide side_from_curve(const std::string& name, const CurveProfile& profile,
                            const std::vector<QuasiToricPoint>& points);

// Declared data. The point Gram is reduced to a lattice basis as above.
ZariskiSide side_from_fixture(ZariskiSide declared, const QMatrix& point_gram);

struct ZariskiCertificate {
  bool certified = false;
  std::string verdict;  // "certificate" or "inconclusive"
  std::string reason;
  ZariskiSide a, b;
  Diagonalization diag_a, diag_b;
  QEquivalence qe;
  std::vector<std::string> assumptions;
};

// PrereqFailed unless degrees agree and are divisible by 6, the singularity
// inventories and Alexander polynomials agree, and delta_{1/6} = 0 on both
// sides. Certifies when both lattices reach the predicted rank and their
// Q-spans are inequivalent.
ZariskiCertificate zariski_certificate(const ZariskiSide& a, const ZariskiSide& b);

}  // namespace cl
