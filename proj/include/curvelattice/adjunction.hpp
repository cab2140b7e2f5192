#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "curvelattice/mpoly.hpp"
#include "curvelattice/upoly.hpp"

namespace cl {

// Projective point; canonical representative has last nonzero coordinate 1.
struct ProjPoint {
  std::array<CycloNum, 3> c;

  ProjPoint() = default;
  ProjPoint(CycloNum x, CycloNum y, CycloNum z);  // normalizes; throws on (0,0,0)
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c == b.c; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c < b.c; }
  std::string str() const;  // "(x : y : z)"
};

enum class PointKind { Node, Cusp, Custom, Unclassified };
std::string to_string(PointKind k);

// A linear functional on ternary forms: F -> (d^deriv F)(point).
struct Functional {
  ProjPoint point;
  Monomial deriv{0, 0, 0};
};

// Declared quasiadjunction data of a Custom point at one alpha. Each entry is a
// derivative multi-index evaluated at the point.
struct CustomCondition {
  Rat alpha;
  std::vector<Monomial> derivs;
};

struct ClassifiedPoint {
  ProjPoint point;
  PointKind kind = PointKind::Unclassified;
  std::vector<CustomCondition> custom;
};

// Conjugate singular points not defined over Q(w): the roots theta of minpoly
// give the points (coords[0](theta) : coords[1](theta) : coords[2](theta)).
struct PointCluster {
  UPoly minpoly;  // squarefree, monic
  std::array<UPoly, 3> coords;
  PointKind kind = PointKind::Unclassified;
  int size() const { return minpoly.degree(); }
};

struct SingularLocus {
  std::vector<ClassifiedPoint> points;  // Q(w)-rational, sorted
  std::vector<PointCluster> clusters;
  std::size_t total() const;
};

// All singular points of a squarefree homogeneous ternary form, by resultant
// elimination after a generic linear change. Rational points are classified
// individually, the rest are kept as clusters.
SingularLocus singular_locus(const MPoly& g);
// Rational points only; IncompleteLocus if any singular point lies outside Q(w).
std::vector<ClassifiedPoint> singular_points(const MPoly& g);

// Node / Cusp / Unclassified from the local Taylor expansion at p (g(p) = 0,
// grad g(p) = 0 assumed).
PointKind classify(const MPoly& g, const ProjPoint& p);
bool is_singular_at(const MPoly& g, const ProjPoint& p);

struct CurveProfile {
  MPoly g;
  int degree = 0;
  std::vector<ClassifiedPoint> points;
  std::vector<PointCluster> clusters;
  int components = 1;
  bool components_declared = false;

  // Detects and classifies the singular locus.
  static CurveProfile detect(const MPoly& g, int components = 1, bool declared = false);
  // Uses the given points (checked to be singular; Node/Cusp kinds are verified).
  static CurveProfile with_points(const MPoly& g, std::vector<ClassifiedPoint> points,
                                  int components = 1, bool declared = false);
  int cusp_count() const;
  int node_count() const;
};

// Node: none. Cusp: point evaluation at alpha = 5/6. Custom: as declared.
std::vector<Functional> conditions_at(const Rat& alpha, const std::vector<ClassifiedPoint>& points);

// Number of independent conditions the functionals impose on forms of degree k
// (exact rank of the evaluation matrix).
int conditions_rank(const std::vector<Functional>& fns, int k);

struct DefectRow {
  int l = 0;
  int h = 0;
  int delta = 0;
  int form_degree = 0;
  std::string rank_method = "exact";  // "exact" or "multimodular"
};

// l = number of conditions at alpha, h = rank of their evaluation on forms of
// degree alpha*d - 3, delta = l - h.
DefectRow defect(const CurveProfile& profile, const Rat& alpha);

struct AlexanderPoly {
  int degree = 0;                 // curve degree d
  std::map<Rat, int> orders;      // alpha in [0, 1) -> order at exp(2 pi i alpha)
  std::map<Rat, DefectRow> defects;
  std::string str(const std::string& var = "t") const;  // e.g. "(t^2 - t + 1)^3"
  int total_degree() const;
};

AlexanderPoly alexander(const CurveProfile& profile);
int ord_at(const AlexanderPoly& a, const Rat& alpha);

// Cyclotomic polynomial Phi_n over Z, as a UPoly.
UPoly cyclotomic(int n);

}  // namespace cl
