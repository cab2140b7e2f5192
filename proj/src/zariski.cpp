#include "curvelattice/zariski.hpp"

#include "curvelattice/errors.hpp"
#include "curvelattice/mordellweil.hpp"
#include "curvelattice/parse.hpp"

namespace cl {

namespace {

const char* kIndexAssumption =
    "index assumption: each point lattice is taken to have finite index in the Mordell-Weil lattice; "
    "a finite-index sublattice spans the same Q-space, so Q-inequivalence of the spans separates the "
    "Mordell-Weil lattices, while the index itself is not computed";

bool proportional(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * (b.leading_coeff() * a.leading_coeff().inverse()) == b;
}

std::string inventory(const ZariskiSide& s) {
  return std::to_string(s.cusps) + " cusps, " + std::to_string(s.nodes) + " nodes, " + std::to_string(s.other) +
         " other";
}

}  // namespace

std::string ZariskiSide::alexander_str() const {
  AlexanderPoly a;
  a.degree = degree;
  a.orders = alexander;
  return a.str();
}

ZariskiSide side_from_curve(const std::string& name, const CurveProfile& profile,
                            const std::vector<QuasiToricPoint>& points) {
  ZariskiSide s;
  s.name = name;
  s.source = "computed";
  s.degree = profile.degree;
  s.cusps = profile.cusp_count();
  s.nodes = profile.node_count();
  s.other = static_cast<int>(profile.points.size()) - s.cusps - s.nodes;
  for (auto& c : profile.clusters) s.other += c.size();
  s.components = profile.components;
  AlexanderPoly ap = alexander(profile);
  s.alexander = ap.orders;
  if (profile.degree % 6 == 0) s.delta_sixth = defect(profile, ratio(1, 6)).delta;
  auto f = WeightedPoly::make(parse_poly("x^2 + y^3", {"x", "y"}), {3, 2});
  s.predicted_rank = mw_rank(f, profile).rank;
  for (auto& p : points) {
    if (!proportional(p.g, profile.g)) throw InvalidPoint("point of " + name + " lies on a different curve");
    auto v = verify_decomposition(p);
    if (!v.ok) throw InvalidPoint(name + ": " + v.violation);
  }
  s.gram = points.empty() ? QMatrix{} : generated_lattice(to_qmatrix(gram(points).entries)).gram;
  return s;
}

ZariskiSide side_from_fixture(ZariskiSide declared, const QMatrix& point_gram) {
  declared.source = "fixture";
  declared.gram = point_gram.empty() ? QMatrix{} : generated_lattice(point_gram).gram;
  return declared;
}

ZariskiCertificate zariski_certificate(const ZariskiSide& a, const ZariskiSide& b) {
  if (a.degree != b.degree) throw PrereqFailed("equal degree: " + std::to_string(a.degree) + " vs " +
                                               std::to_string(b.degree));
  if (a.degree % 6 != 0 || a.degree == 0)
    throw PrereqFailed("degree divisible by 6: got " + std::to_string(a.degree));
  if (a.cusps != b.cusps || a.nodes != b.nodes || a.other != b.other)
    throw PrereqFailed("equal singularity inventory: " + inventory(a) + " vs " + inventory(b));
  if (a.alexander != b.alexander || a.components != b.components)
    throw PrereqFailed("equal Alexander polynomial: " + a.alexander_str() + " vs " + b.alexander_str());
  for (auto* s : {&a, &b})
    if (s->delta_sixth != 0)
      throw PrereqFailed("delta_{1/6} = 0: " + s->name + " has " + std::to_string(s->delta_sixth));

  ZariskiCertificate c;
  c.a = a;
  c.b = b;
  c.qe = q_equivalent(a.gram, b.gram);
  if (!a.gram.empty()) c.diag_a = diagonalize(a.gram);
  if (!b.gram.empty()) c.diag_b = diagonalize(b.gram);
  for (auto* s : {&a, &b}) {
    if (static_cast<int>(s->gram.size()) != s->predicted_rank) {
      c.verdict = "inconclusive";
      c.reason = s->name + ": point lattice has rank " + std::to_string(s->gram.size()) + ", predicted rank " +
                 std::to_string(s->predicted_rank);
      return c;
    }
  }
  if (c.qe.equivalent) {
    c.verdict = "inconclusive";
    c.reason = "the Q-spans of the two lattices are equivalent";
    return c;
  }
  c.certified = true;
  c.verdict = "certificate";
  c.reason = "Q-spans differ (" + c.qe.reason + "); no equisingular deformation connects the curves";
  c.assumptions.push_back(kIndexAssumption);
  return c;
}

}  // namespace cl
