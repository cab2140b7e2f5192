#include "curvelattice/torus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "curvelattice/errors.hpp"
#include "curvelattice/linalg.hpp"
#include "curvelattice/polyalg.hpp"
#include "curvelattice/roots.hpp"

namespace cl {

QuasiToricPoint QuasiToricPoint::make(MPoly X, MPoly Y, MPoly Z, MPoly g) {
  int dg = g.total_degree();
  if (dg <= 0 || dg % 6 != 0) throw UsageError("curve degree must be a positive multiple of 6");
  QuasiToricPoint p;
  if (!Z.is_zero()) {
    CycloNum t = Z.leading_coeff().inverse();
    X *= t * t;
    Y *= t * t * t;
    Z *= t;
  }
  p.k = dg / 6;
  p.n = Z.total_degree();
  p.X = std::move(X);
  p.Y = std::move(Y);
  p.Z = std::move(Z);
  p.g = std::move(g);
  return p;
}

std::string QuasiToricPoint::key() const { return X.str() + " | " + Y.str() + " | " + Z.str(); }

Verification verify_decomposition(const QuasiToricPoint& P) {
  auto fail = [](std::string why) { return Verification{false, std::move(why)}; };
  if (P.Z.is_zero()) return fail("Z is zero");
  if (!P.g.is_homogeneous() || P.g.total_degree() != 6 * P.k)
    return fail("g is not a form of degree 6k");
  int m = P.k + P.n;
  if (!P.Z.is_homogeneous()) return fail("Z is not homogeneous");
  if (P.X.is_zero() || !P.X.is_homogeneous() || P.X.total_degree() != 2 * m)
    return fail("X is not a form of degree 2(k+n) = " + std::to_string(2 * m));
  if (P.Y.is_zero() || !P.Y.is_homogeneous() || P.Y.total_degree() != 3 * m)
    return fail("Y is not a form of degree 3(k+n) = " + std::to_string(3 * m));
  if (P.Y * P.Y != P.X.pow(3) + P.Z.pow(6) * P.g) return fail("Y^2 = X^3 + Z^6 g does not hold");
  const std::pair<const MPoly*, const char*> parts[] = {{&P.X, "X"}, {&P.Y, "Y"}, {&P.Z, "Z"}};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      MPoly c = gcd_fast(*parts[i].first, *parts[j].first);
      if (!c.is_constant())
        return fail(std::string(parts[i].second) + " and " + parts[j].second + " share the factor " + c.str());
    }
  return {};
}

QuasiToricPoint omega(const QuasiToricPoint& P) {
  return QuasiToricPoint::make(P.X * CycloNum::omega(), P.Y, P.Z, P.g);
}

QuasiToricPoint negate(const QuasiToricPoint& P) { return QuasiToricPoint::make(P.X, -P.Y, P.Z, P.g); }

std::vector<QuasiToricPoint> mu6_orbit(const QuasiToricPoint& P) {
  QuasiToricPoint w1 = omega(P), w2 = omega(w1);
  return {P, w1, w2, negate(P), negate(w1), negate(w2)};
}

int height(const QuasiToricPoint& P) { return 2 * (P.k + P.n); }

PairingValue pairing_value(const QuasiToricPoint& P, const QuasiToricPoint& Q) {
  if (P.g != Q.g) throw UsageError("points lie on different curves");
  if (P == Q) return {height(P), true};
  MPoly A = Q.Z.pow(3) * P.Y - P.Z.pow(3) * Q.Y;
  MPoly B = Q.Z.pow(2) * P.X - P.Z.pow(2) * Q.X;
  if (A.is_zero() && B.is_zero()) return {height(P), true};
  MPoly G = gcd_fast(A, B);
  MPoly C = gcd_fast(P.Z, Q.Z);
  int meet = G.total_degree();
  if (!C.is_constant()) {
    MPoly W = P.X * P.Z * Q.Y - Q.X * Q.Z * P.Y;
    if (W.is_zero()) throw ConventionMismatch("degenerate pair: X_P Z_P Y_Q = X_Q Z_Q Y_P");
    meet += saturation_part(W, C).total_degree() - saturation_part(G, C).total_degree();
  }
  return {P.k + P.n + Q.n - meet, false};
}

int pairing(const QuasiToricPoint& P, const QuasiToricPoint& Q) { return pairing_value(P, Q).value; }

GramMatrix gram(const std::vector<QuasiToricPoint>& points) {
  GramMatrix G;
  G.basis = points;
  std::size_t m = points.size();
  G.entries.assign(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      long a = pairing(points[i], points[j]);
      if (i != j && pairing(points[j], points[i]) != a)
        throw ConventionMismatch("pairing is not symmetric");
      G.entries[i][j] = G.entries[j][i] = a;
    }
  QMatrix q(m, std::vector<Rat>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (G.entries[i][i] != height(points[i]) || G.entries[i][i] % 2 != 0)
      throw ConventionMismatch("diagonal entry differs from the height");
    for (std::size_t j = 0; j < m; ++j) q[i][j] = Rat(G.entries[i][j]);
  }
  if (!is_positive_semidefinite(q)) throw ConventionMismatch("Gram matrix is not positive semidefinite");
  return G;
}

namespace {

std::vector<Monomial> conic_monomials() {
  return {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
}

// Rows imposing "passes through this unit" on conic coefficients.
struct CuspUnit {
  int size;
  std::vector<std::vector<CycloNum>> rows;
};

std::vector<CuspUnit> cusp_units(const CurveProfile& prof) {
  auto mons = conic_monomials();
  std::vector<CuspUnit> units;
  for (auto& p : prof.points) {
    if (p.kind != PointKind::Cusp) continue;
    std::vector<CycloNum> row;
    for (auto& m : mons) row.push_back(pow(p.point.c[0], m[0]) * pow(p.point.c[1], m[1]) * pow(p.point.c[2], m[2]));
    units.push_back({1, {row}});
  }
  for (auto& c : prof.clusters) {
    if (c.kind != PointKind::Cusp) continue;
    const UPoly& T = c.minpoly;
    std::vector<UPoly> vals;
    for (auto& m : mons) {
      UPoly v(CycloNum(1));
      for (int i = 0; i < 3; ++i) v = mulmod(v, powmod(c.coords[i], m[i], T), T);
      vals.push_back(v);
    }
    CuspUnit u{c.size(), {}};
    for (int j = 0; j < c.size(); ++j) {
      std::vector<CycloNum> row;
      for (auto& v : vals) row.push_back(v[j]);
      u.rows.push_back(row);
    }
    units.push_back(std::move(u));
  }
  return units;
}

// Restriction of F to the line P0 + s*Q0, as a polynomial in s.
UPoly restrict_to_line(const MPoly& F, const std::array<long, 3>& P0, const std::array<long, 3>& Q0) {
  std::vector<std::string> s{"s"};
  std::vector<MPoly> img;
  for (int i = 0; i < 3; ++i)
    img.push_back(MPoly::constant(s, CycloNum(P0[i])) + MPoly::variable(s, 0) * CycloNum(Q0[i]));
  return UPoly::from_mpoly(F.compose(img), 0);
}

struct MuCandidates {
  std::vector<CycloNum> in_field;
  int outside = 0;
};

// mu with g - mu q^3 a square: on a line, H = h - mu a (degree 6 in s) must be
// the square of a cubic. With c3^2 = H6 the cubic's coefficients are forced,
// and the three remaining coefficient equations, cleared of denominators,
// are C2, C1, C0 below. Common roots over several lines are the candidates;
// mu with H6 = 0 is tested directly.
MuCandidates solve_mu(const MPoly& g, const MPoly& q) {
  std::mt19937_64 rng(0x70c);
  std::uniform_int_distribution<int> d(-4, 4);
  UPoly common;
  bool first = true;
  std::vector<CycloNum> extra;
  int lines = 0;
  while (lines < 3) {
    std::array<long, 3> P0{d(rng), d(rng), d(rng)}, Q0{d(rng), d(rng), d(rng)};
    std::vector<CycloNum> qv{CycloNum(Q0[0]), CycloNum(Q0[1]), CycloNum(Q0[2])};
    if (q.eval(qv).is_zero() || g.eval(qv).is_zero()) continue;
    UPoly h = restrict_to_line(g, P0, Q0), a = restrict_to_line(q, P0, Q0).pow(3);
    if (h.degree() != 6 || a.degree() != 6) continue;
    ++lines;
    std::vector<UPoly> H;
    for (int i = 0; i <= 6; ++i) H.push_back(UPoly(std::vector<CycloNum>{h[i], -a[i]}));
    UPoly N1 = UPoly(CycloNum(4)) * H[4] * H[6] - H[5] * H[5];
    UPoly N0 = UPoly(CycloNum(8)) * H[3] * H[6].pow(2) - H[5] * N1;
    UPoly C2 = UPoly(CycloNum(64)) * H[6].pow(3) * H[2] - N1 * N1 - UPoly(CycloNum(4)) * H[5] * N0;
    UPoly C1 = UPoly(CycloNum(64)) * H[6].pow(4) * H[1] - N1 * N0;
    UPoly C0 = UPoly(CycloNum(256)) * H[6].pow(5) * H[0] - N0 * N0;
    UPoly G = gcd(gcd(C2, C1), C0);
    common = first ? G : gcd(common, G);
    first = false;
    extra.push_back(h[6] / a[6]);
  }
  MuCandidates out;
  if (common.is_zero()) return out;
  UPoly sq = squarefree_part(common);
  out.in_field = roots_in_field(sq);
  out.outside = sq.degree() - static_cast<int>(out.in_field.size());
  for (auto& e : extra)
    if (std::find(out.in_field.begin(), out.in_field.end(), e) == out.in_field.end()) out.in_field.push_back(e);
  return out;
}

}  // namespace

ToricSearch find_toric_sextic(const CurveProfile& prof) {
  if (prof.degree != 6) throw UsageError("toric search needs a sextic");
  ToricSearch out;
  const MPoly& g = prof.g;
  if (prof.cusp_count() < 6) {
    out.note = "fewer than six cusps: a toric sextic with only nodes and cusps has six cusps on q = c = 0";
    return out;
  }
  auto units = cusp_units(prof);
  auto mons = conic_monomials();
  std::set<std::string> seen_conics;

  std::vector<std::size_t> chosen;
  auto consider = [&]() {
    CMatrix A;
    for (auto i : chosen)
      for (auto& r : units[i].rows) A.push_back(r);
    auto ns = nullspace(A, mons.size());
    if (ns.size() != 1) return;
    MPoly q(g.vars());
    for (std::size_t j = 0; j < mons.size(); ++j) q.add_term(mons[j], ns[0][j]);
    q = q.monic();
    if (!seen_conics.insert(q.str()).second) return;
    out.conics.push_back(q);
  };
  auto rec = [&](auto&& self, std::size_t start, int left) -> void {
    if (left == 0) {
      consider();
      return;
    }
    for (std::size_t i = start; i < units.size(); ++i) {
      if (units[i].size > left) continue;
      chosen.push_back(i);
      self(self, i + 1, left - units[i].size);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 6);

  struct Decomp {
    MPoly q;
    CycloNum mu;
    MPoly c;
  };
  std::vector<Decomp> decomps;
  int outside = 0;
  for (auto& q : out.conics) {
    MPoly q3 = q.pow(3);
    MuCandidates mc = solve_mu(g, q);
    outside += 6 * mc.outside;
    for (auto& mu : mc.in_field) {
      if (mu.is_zero()) continue;
      auto c = poly_sqrt(g - q3 * mu);
      if (c && !c->is_zero()) decomps.push_back({q, mu, *c});
    }
  }

  // On s^2 g = (s c)^2 + s^2 mu q^3 the point is (-lambda q, +-s c, 1) with
  // lambda^3 = s^2 mu.
  MPoly one = MPoly::constant(g.vars(), CycloNum(1));
  auto assemble = [&](const CycloNum& s, ToricSearch& res) {
    MPoly gs = g * (s * s);
    std::map<std::string, QuasiToricPoint> found;
    res.field_exhausted = outside;
    for (auto& d : decomps) {
      auto lambdas = cube_roots_in_field(s * s * d.mu);
      if (lambdas.empty()) res.field_exhausted += 6;
      for (auto& lam : lambdas)
        for (int sgn : {1, -1}) {
          auto P = QuasiToricPoint::make(d.q * (-lam), d.c * (s * CycloNum(sgn)), one, gs);
          found.emplace(P.key(), P);
        }
    }
    res.scale = s * s;
    res.points.clear();
    for (auto& [key, P] : found) res.points.push_back(P);
  };
  std::vector<CycloNum> scales{CycloNum(1)};
  for (auto& d : decomps) scales.push_back(d.mu);
  std::sort(scales.begin() + 1, scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  assemble(scales[0], out);
  for (std::size_t i = 1; i < scales.size() && out.field_exhausted > 0; ++i) {
    ToricSearch trial = out;
    assemble(scales[i], trial);
    if (trial.points.size() > out.points.size()) out = std::move(trial);
  }
  return out;
}

namespace {

MPoly random_binary_form(const std::vector<std::string>& vars, int deg, std::mt19937_64& rng) {
  MPoly p(vars);
  if (deg < 0) return p;
  std::uniform_int_distribution<int> d(-3, 3);
  for (int a = deg; a >= 0; --a) p.add_term({a, deg - a, 0}, CycloNum(d(rng)));
  return p;
}

}  // namespace

Table1Params sample_table1_params(int k, std::uint64_t seed) {
  if (k < 1) throw UsageError("Table 1 needs k >= 1");
  const std::vector<std::string> vars{"x", "y", "z"};
  std::mt19937_64 rng(seed);
  Table1Params p;
  p.k = k;
  p.seed = seed;
  do p.u = random_binary_form(vars, k + 1, rng);
  while (p.u.is_zero());
  p.f1p = random_binary_form(vars, k, rng);
  p.f2p = random_binary_form(vars, k - 1, rng);
  for (int i = 3; i <= 2 * (k + 1); ++i) p.f_free.push_back(random_binary_form(vars, 2 * (k + 1) - i, rng));
  for (int i = 6; i <= 3 * (k + 1); ++i) p.g_free.push_back(random_binary_form(vars, 3 * (k + 1) - i, rng));
  return p;
}

Table1Result table1_construct(const Table1Params& p) {
  const int k = p.k;
  if (p.u.is_zero()) throw UsageError("u must be nonzero");
  const auto& vars = p.u.vars();
  if (vars.size() != 3) throw UsageError("Table 1 forms live in three variables");
  auto check = [&](const MPoly& m, int deg, const char* name) {
    if (!m.is_zero() && (!m.is_homogeneous() || m.total_degree() != deg || m.degree_in(2) > 0))
      throw UsageError(std::string(name) + " must be a form of degree " + std::to_string(deg) + " in x, y");
  };
  check(p.u, k + 1, "u");
  check(p.f1p, k, "f1'");
  check(p.f2p, k - 1, "f2'");
  if ((int)p.f_free.size() != 2 * (k + 1) - 2 || (int)p.g_free.size() != 3 * (k + 1) - 5)
    throw UsageError("wrong number of free forms for k = " + std::to_string(k));
  for (std::size_t i = 0; i < p.f_free.size(); ++i) check(p.f_free[i], 2 * (k + 1) - 3 - (int)i, "f_i");
  for (std::size_t i = 0; i < p.g_free.size(); ++i) check(p.g_free[i], 3 * (k + 1) - 6 - (int)i, "g_i");

  MPoly zero(vars);
  auto fi = [&](int i) { return i - 3 < (int)p.f_free.size() ? p.f_free[i - 3] : zero; };
  const MPoly &u = p.u, &a = p.f1p, &b = p.f2p;
  MPoly f3 = fi(3), f4 = fi(4), f5 = fi(5);
  auto q = [](long n, long d) { return CycloNum(ratio(n, d)); };

  std::vector<MPoly> f{u * u, u * a, a * a * q(1, 4) + u * b};
  for (auto& m : p.f_free) f.push_back(m);
  std::vector<MPoly> g{
      u.pow(3),
      u * u * a * q(3, 2),
      (u * a * a + u * u * b * CycloNum(2)) * q(3, 4),
      (a.pow(3) + u * a * b * CycloNum(6) + f3 * u * CycloNum(12)) * q(1, 8),
      (u * b * b + f4 * u * CycloNum(4) + f3 * a * CycloNum(2)) * q(3, 8),
      (-(a * b * b) + f5 * u * CycloNum(8) + f4 * a * CycloNum(4) + f3 * b * CycloNum(4)) * q(3, 16),
  };
  for (auto& m : p.g_free) g.push_back(m);

  auto assemble = [&](const std::vector<MPoly>& parts) {
    MPoly s(vars);
    for (std::size_t i = 0; i < parts.size(); ++i) s += parts[i].shift(2, (int)i);
    return s;
  };
  Table1Result r;
  r.params = p;
  r.f = assemble(f);
  r.g = assemble(g);
  MPoly D = r.f.pow(3) - r.g * r.g;
  if (D.is_zero()) throw Degenerate("f^3 = g^2 for these parameters");
  if (D.min_degree_in(2) < 6)
    throw DivisibilityFailure("z^6 does not divide f^3 - g^2 (z-adic order " + std::to_string(D.min_degree_in(2)) + ")");
  r.F = D.shift(2, -6);
  return r;
}

QuasiToricPoint table1_point(const Table1Result& r) {
  const auto& vars = r.f.vars();
  return QuasiToricPoint::make(r.f, r.g, MPoly::variable(vars, 2), -r.F);
}

}  // namespace cl
