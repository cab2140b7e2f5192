#include "curvelattice/spectrum.hpp"

#include <numeric>

#include "curvelattice/errors.hpp"
#include "curvelattice/linalg.hpp"
#include "curvelattice/polyalg.hpp"
#include "curvelattice/upoly.hpp"

namespace cl {

namespace {

std::vector<Monomial> monomials_of_wdeg(int D, const std::array<int, 2>& w) {
  std::vector<Monomial> out;
  if (D < 0) return out;
  for (int a = 0; a * w[0] <= D; ++a)
    if ((D - a * w[0]) % w[1] == 0) out.push_back({a, (D - a * w[0]) / w[1]});
  return out;
}

}  // namespace

WeightedPoly WeightedPoly::make(const MPoly& f, std::array<int, 2> weights) {
  if (f.nvars() != 2) throw UsageError("weighted polynomial must have exactly two variables");
  if (weights[0] <= 0 || weights[1] <= 0) throw UsageError("weights must be positive");
  if (f.is_zero()) throw NotIsolated("zero polynomial");
  std::vector<int> wv{weights[0], weights[1]};
  if (!f.is_weighted_homogeneous(wv))
    throw UsageError("f is not weighted homogeneous for weights (" + std::to_string(weights[0]) +
                     "," + std::to_string(weights[1]) + ")");
  MPoly fx = f.derivative(0), fy = f.derivative(1);
  // fx, fy form a regular sequence iff they are coprime (or one is a unit).
  bool unit = (fx.is_constant() && !fx.is_zero()) || (fy.is_constant() && !fy.is_zero());
  if (!unit && !gcd(fx, fy).is_constant())
    throw NotIsolated("partial derivatives share a factor: " + f.str());
  WeightedPoly p;
  p.f = f;
  p.weights = weights;
  p.wdeg = f.weighted_degree(wv);
  return p;
}

Rat WeightedPoly::milnor_number() const {
  return ratio(Integer((wdeg - weights[0]) * (wdeg - weights[1])), Integer(weights[0] * weights[1]));
}

std::map<int, int> milnor_graded_dims(const WeightedPoly& wp) {
  const auto& w = wp.weights;
  const int d = wp.wdeg;
  MPoly partial[2] = {wp.f.derivative(0), wp.f.derivative(1)};
  std::map<int, int> dims;
  // The socle sits in degree 2d - 2(w1 + w2); nothing lives above it.
  int top = 2 * d - 2 * (w[0] + w[1]);
  for (int D = 0; D <= top; ++D) {
    auto basis = monomials_of_wdeg(D, w);
    if (basis.empty()) continue;
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    CMatrix rows;
    for (int i = 0; i < 2; ++i) {
      if (partial[i].is_zero()) continue;
      for (auto& m : monomials_of_wdeg(D - (d - w[i]), w)) {
        std::vector<CycloNum> row(basis.size());
        for (auto& [mono, c] : partial[i].terms()) row[col.at({mono[0] + m[0], mono[1] + m[1]})] = c;
        rows.push_back(std::move(row));
      }
    }
    int dim = static_cast<int>(basis.size() - (rows.empty() ? 0 : rank(rows)));
    if (dim > 0) dims[D] = dim;
  }
  return dims;
}

Spectrum spectrum(const WeightedPoly& wp) {
  Spectrum s;
  int shift = wp.weights[0] + wp.weights[1];
  for (auto& [D, dim] : milnor_graded_dims(wp)) s[ratio(D + shift, wp.wdeg) - 1] = dim;
  return s;
}

int nu(const Spectrum& s, const Rat& alpha) {
  auto it = s.find(alpha);
  return it == s.end() ? 0 : it->second;
}

int eigen_dim(const WeightedPoly& f, const Rat& alpha) {
  Spectrum s = spectrum(f);
  return nu(s, alpha) + nu(s, Rat(alpha - 1));
}

int branch_count(const WeightedPoly& wp) {
  const MPoly& f = wp.f;
  int a = f.min_degree_in(0), b = f.min_degree_in(1);
  int g = std::gcd(wp.weights[0], wp.weights[1]);
  int p = wp.weights[1] / g;
  // After removing x^a y^b, f is a binary form in u = x^p, v = y^(w1/g) with no root
  // at u = 0 or v = 0; each distinct root of f(u, 1) is one branch.
  std::vector<CycloNum> coef;
  for (auto& [m, c] : f.terms()) {
    int i = (m[0] - a) / p;
    if ((int)coef.size() <= i) coef.resize(i + 1);
    coef[i] += c;
  }
  UPoly h(coef);
  return squarefree_part(h).degree() + (a > 0) + (b > 0);
}

}  // namespace cl
