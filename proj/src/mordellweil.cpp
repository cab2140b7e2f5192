#include "curvelattice/mordellweil.hpp"

#include <numeric>

#include "curvelattice/errors.hpp"

namespace cl {

namespace {

int primitive_degree(const WeightedPoly& f) {
  int g = std::gcd(f.weights[0], f.weights[1]);
  return f.wdeg / g;
}

std::string render(const std::map<Rat, int>& m) {
  std::string s;
  for (auto& [a, v] : m) s += (s.empty() ? "" : ", ") + to_string(a) + ": " + std::to_string(v);
  return "{" + s + "}";
}

}  // namespace

RankReport applicability(const WeightedPoly& f, const CurveProfile& profile) {
  RankReport r;
  r.e = primitive_degree(f);
  if (profile.degree % r.e != 0) {
    r.reason = "e = " + std::to_string(r.e) + " does not divide d = " + std::to_string(profile.degree);
    return r;
  }
  Spectrum sp = spectrum(f);
  for (auto& [alpha, mult] : sp) {
    if (sgn(alpha) <= 0 || mult == 0) continue;
    int delta = defect(profile, alpha).delta;
    if (delta != 0) r.obstruction[alpha] = mult * delta;
  }
  r.applicable = r.obstruction.empty();
  if (!r.applicable) r.reason = "nu(alpha) * delta_alpha nonzero at " + render(r.obstruction);
  return r;
}

RankReport mw_rank(const WeightedPoly& f, const CurveProfile& profile) {
  RankReport r = applicability(f, profile);
  if (!r.applicable) throw NotApplicable(r.reason);
  Spectrum sp = spectrum(f);
  AlexanderPoly ap = alexander(profile);
  r.order_at_one = ord_at(ap, Rat(0));
  for (auto& [alpha, mult] : sp) {
    if (mult == 0) continue;
    // nu(alpha) at alpha in (0,1) and nu(alpha - 1) both land on the class of alpha mod 1.
    Rat a = sgn(alpha) < 0 ? Rat(alpha + 1) : alpha;
    if (sgn(a) == 0) continue;
    int ord = ord_at(ap, a);
    r.contributions[a] += mult * ord;
    if (sgn(alpha) > 0) r.rank_from_defects += 2 * mult * defect(profile, Rat(1 - alpha)).delta;
  }
  for (auto it = r.contributions.begin(); it != r.contributions.end();)
    it = it->second == 0 ? r.contributions.erase(it) : std::next(it);
  r.rank = 0;
  for (auto& [a, c] : r.contributions) r.rank += c;
  r.formulas_agree = r.rank == r.rank_from_defects;
  return r;
}

RankReport mw_rank_hyperelliptic(int e, const CurveProfile& profile) {
  if (e < 2) throw UsageError("e must be at least 2");
  int d = profile.degree;
  if (d % 2 != 0) throw DegreeParity("curve degree " + std::to_string(d) + " is odd");
  if (d % e != 0) throw NotApplicable("e = " + std::to_string(e) + " does not divide d = " + std::to_string(d));
  for (auto& p : profile.points)
    if (p.kind == PointKind::Unclassified) throw UnclassifiedPoint("singular point " + p.point.str() + " is not of ADE type");
  for (auto& c : profile.clusters)
    if (c.kind == PointKind::Unclassified) throw UnclassifiedPoint("a cluster of singular points is not of ADE type");

  std::vector<std::string> vars{"x", "y"};
  MPoly f = MPoly::variable(vars, 0).pow(2) + MPoly::variable(vars, 1).pow(e);
  RankReport r = mw_rank(WeightedPoly::make(f, {e, 2}), profile);

  AlexanderPoly ap = alexander(profile);
  int direct = 0;
  std::map<Rat, int> contrib;
  for (int i = 1; i <= (e - 1) / 2; ++i) {
    Rat a = Rat(1, 2) + ratio(i, e);
    int ord = ord_at(ap, a);
    if (ord) contrib[a] = 2 * ord;
    direct += 2 * ord;
  }
  r.formulas_agree = r.formulas_agree && direct == r.rank;
  r.contributions = contrib;
  r.rank = direct;
  return r;
}

}  // namespace cl
