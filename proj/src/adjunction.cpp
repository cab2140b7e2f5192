#include "curvelattice/adjunction.hpp"

#include <algorithm>
#include <random>

#include "curvelattice/errors.hpp"
#include "curvelattice/linalg.hpp"
#include "curvelattice/modular.hpp"
#include "curvelattice/polyalg.hpp"
#include "curvelattice/roots.hpp"

namespace cl {

ProjPoint::ProjPoint(CycloNum x, CycloNum y, CycloNum z) : c{std::move(x), std::move(y), std::move(z)} {
  int last = 2;
  while (last >= 0 && c[last].is_zero()) --last;
  if (last < 0) throw InvalidPoint("(0 : 0 : 0) is not a projective point");
  CycloNum inv = c[last].inverse();
  for (auto& v : c) v *= inv;
}

std::string ProjPoint::str() const {
  return "(" + c[0].str() + " : " + c[1].str() + " : " + c[2].str() + ")";
}

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::Node: return "node";
    case PointKind::Cusp: return "cusp";
    case PointKind::Custom: return "custom";
    case PointKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

std::size_t SingularLocus::total() const {
  std::size_t n = points.size();
  for (auto& c : clusters) n += c.size();
  return n;
}

namespace {

Monomial unit3(int i, int j = -1, int k = -1) {
  Monomial m{0, 0, 0};
  for (int t : {i, j, k})
    if (t >= 0) ++m[t];
  return m;
}

MPoly partial(const MPoly& g, const Monomial& orders) {
  MPoly r = g;
  for (std::size_t v = 0; v < 3; ++v)
    for (int e = 0; e < orders[v]; ++e) r = r.derivative(v);
  return r;
}

// Second and third partials of g, indexed by sorted index tuples.
struct Derivs {
  std::map<Monomial, MPoly> second, third;
  explicit Derivs(const MPoly& g) {
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        second[unit3(i, j)] = partial(g, unit3(i, j));
        for (int k = j; k < 3; ++k) third[unit3(i, j, k)] = partial(g, unit3(i, j, k));
      }
  }
};

// Generic scalar ring interface over CycloNum or Q(w)[y]/(T).
struct FieldOps {
  using E = CycloNum;
  E mul(const E& a, const E& b) const { return a * b; }
  E add(const E& a, const E& b) const { return a + b; }
  E scale(const E& a, const CycloNum& c) const { return a * c; }
  E zero() const { return CycloNum(); }
};

struct QuotientOps {
  using E = UPoly;
  UPoly T;
  E mul(const E& a, const E& b) const { return mulmod(a, b, T); }
  E add(const E& a, const E& b) const { return a + b; }
  E scale(const E& a, const CycloNum& c) const { return a * c; }
  E zero() const { return UPoly(); }
};

template <class Ops>
typename Ops::E eval_form(const Ops& ops, const MPoly& F,
                          const std::map<Monomial, typename Ops::E>& images) {
  typename Ops::E r = ops.zero();
  for (auto& [m, c] : F.terms()) r = ops.add(r, ops.scale(images.at(m), c));
  return r;
}

// p^m for every monomial m of total degree D.
template <class Ops>
std::map<Monomial, typename Ops::E> monomial_images(const Ops& ops,
                                                    const std::array<typename Ops::E, 3>& p,
                                                    int D) {
  std::array<std::vector<typename Ops::E>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(typename Ops::E(CycloNum(1)));
    for (int e = 1; e <= D; ++e) pw[i].push_back(ops.mul(pw[i].back(), p[i]));
  }
  std::map<Monomial, typename Ops::E> out;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) {
      int c = D - a - b;
      out[{a, b, c}] = ops.mul(ops.mul(pw[0][a], pw[1][b]), pw[2][c]);
    }
  return out;
}

template <class Ops>
std::map<Monomial, typename Ops::E> eval_all(const Ops& ops, const std::map<Monomial, MPoly>& forms,
                                             const std::array<typename Ops::E, 3>& p, int D) {
  std::map<Monomial, typename Ops::E> out;
  if (D < 0) {
    for (auto& [k, F] : forms) out[k] = ops.zero();
    return out;
  }
  auto img = monomial_images(ops, p, D);
  for (auto& [k, F] : forms) out[k] = eval_form(ops, F, img);
  return out;
}

template <class E>
const E& sym(const std::map<Monomial, E>& m, int i, int j, int k = -1) {
  return m.at(unit3(i, j, k));
}

// 2x2 minors of the Hessian (rank <= 1 iff all vanish), and the cubic test
// values C(r_i x e_k) whose common vanishing means "not an ordinary cusp".
template <class Ops>
std::vector<typename Ops::E> hessian_minors(const Ops& ops, const std::map<Monomial, typename Ops::E>& H) {
  std::vector<typename Ops::E> out;
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = i1 + 1; i2 < 3; ++i2)
      for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = j1 + 1; j2 < 3; ++j2)
          out.push_back(ops.add(ops.mul(sym(H, i1, j1), sym(H, i2, j2)),
                                ops.scale(ops.mul(sym(H, i1, j2), sym(H, i2, j1)), CycloNum(-1))));
  return out;
}

// C(u) for u = r_i x e_k, r_i the i-th Hessian row; i, k in 0..2.
template <class Ops>
typename Ops::E cubic_test(const Ops& ops, const std::map<Monomial, typename Ops::E>& H,
                           const std::map<Monomial, typename Ops::E>& C3, int i, int k) {
  using E = typename Ops::E;
  auto neg = [&](const E& a) { return ops.scale(a, CycloNum(-1)); };
  std::array<E, 3> r{sym(H, i, 0), sym(H, i, 1), sym(H, i, 2)};
  std::array<E, 3> u;
  if (k == 0) u = {ops.zero(), r[2], neg(r[1])};
  if (k == 1) u = {neg(r[2]), ops.zero(), r[0]};
  if (k == 2) u = {r[1], neg(r[0]), ops.zero()};
  // Sum over a <= b <= c with the multinomial weight of the index multiset.
  E acc = ops.zero();
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      E ab = ops.mul(u[a], u[b]);
      for (int c = b; c < 3; ++c) {
        long w = (a == b && b == c) ? 1 : (a == b || b == c) ? 3 : 6;
        acc = ops.add(acc, ops.scale(ops.mul(ops.mul(ab, u[c]), sym(C3, a, b, c)), CycloNum(w)));
      }
    }
  return acc;
}

UPoly gcd_all(UPoly t, const std::vector<UPoly>& rs) {
  for (auto& r : rs) {
    if (t.degree() <= 0) break;
    t = gcd(t, r);
  }
  return t.degree() <= 0 ? UPoly(CycloNum(1)) : t.monic();
}

// Entries d(-span..span) + 3 on the diagonal; later attempts widen the span
// so that many small-height singular points stop colliding under projection.
std::vector<std::vector<CycloNum>> change_matrix(std::mt19937_64& rng, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  for (;;) {
    std::vector<std::vector<CycloNum>> M(3, std::vector<CycloNum>(3));
    CMatrix A(3, std::vector<CycloNum>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) A[i][j] = M[i][j] = CycloNum(d(rng) + (i == j ? 3 : 0));
    if (!det(A).is_zero()) return M;
  }
}

void require_squarefree_form(const MPoly& g) {
  if (g.nvars() != 3) throw UsageError("a plane curve needs exactly three variables");
  if (g.is_zero() || !g.is_homogeneous()) throw UsageError("curve polynomial must be a nonzero form");
  if (g.total_degree() < 1) throw UsageError("curve polynomial must have positive degree");
  MPoly c = g;
  for (std::size_t v = 0; v < 3 && !c.is_constant(); ++v) c = gcd_fast(c, g.derivative(v));
  if (!c.is_constant()) throw UsageError("curve polynomial is not squarefree: repeated factor " + c.str());
}

struct Piece {
  UPoly T;
  PointKind kind;
};

}  // namespace

bool is_singular_at(const MPoly& g, const ProjPoint& p) {
  std::vector<CycloNum> pt(p.c.begin(), p.c.end());
  if (!g.eval(pt).is_zero()) return false;
  for (std::size_t v = 0; v < 3; ++v)
    if (!g.derivative(v).eval(pt).is_zero()) return false;
  return true;
}

PointKind classify(const MPoly& g, const ProjPoint& p) {
  FieldOps ops;
  Derivs dv(g);
  std::array<CycloNum, 3> pt = p.c;
  int d = g.total_degree();
  auto H = eval_all(ops, dv.second, pt, d - 2);
  auto C3 = eval_all(ops, dv.third, pt, d - 3);
  CMatrix Hm(3, std::vector<CycloNum>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Hm[i][j] = sym(H, i, j);
  std::size_t r = rank(Hm);
  if (r == 2) return PointKind::Node;
  if (r == 1)
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        if (!cubic_test(ops, H, C3, i, k).is_zero()) return PointKind::Cusp;
  return PointKind::Unclassified;
}

SingularLocus singular_locus(const MPoly& g0) {
  require_squarefree_form(g0);
  SingularLocus out;
  const int d = g0.total_degree();
  if (d <= 1) return out;
  const MPoly& g = g0;
  std::mt19937_64 rng(0x5eed);

  for (int attempt = 0; attempt < 24; ++attempt) {
    auto M = change_matrix(rng, 2 + 2 * (attempt / 4));
    MPoly G = linear_change(g, M);
    if (G.coeff({d, 0, 0}).is_zero()) continue;
    // No singular point on the line at infinity w_ = 0.
    MPoly h = G.specialize(2, CycloNum());
    if (h.is_zero()) continue;
    MPoly c = h;
    for (std::size_t v = 0; v < 3 && !c.is_constant(); ++v) c = gcd_fast(c, G.derivative(v).specialize(2, CycloNum()));
    if (!c.is_constant()) continue;

    MPoly f = G.specialize(2, CycloNum(1)), fx = f.derivative(0), fy = f.derivative(1);
    UPoly disc = UPoly::from_mpoly(resultant(f, fx, 0), 1);
    UPoly crit = fy.degree_in(0) >= 0 && fx.degree_in(0) > 0 ? UPoly::from_mpoly(resultant(fx, fy, 0), 1)
                                                              : UPoly();
    UPoly T = squarefree_part(crit.is_zero() ? disc : gcd(disc, crit));
    if (T.degree() <= 0) return out;

    UPoly s0, s1;
    if (fx.degree_in(0) == 1) {
      auto k = fx.coeffs_in(0);
      s0 = UPoly::from_mpoly(k[0], 1);
      s1 = UPoly::from_mpoly(k[1], 1);
    } else {
      auto s = subresultant_coeffs(f, fx, 0, 1, 1);
      s0 = s[0];
      s1 = s[1];
    }
    if (gcd(s1, T).degree() > 0) continue;

    // Points (x(y) : y : 1) modulo T with x = -s0/s1. The affine form keeps
    // coefficient heights far below those of (-s0 : y*s1 : s1).
    std::array<UPoly, 3> v{mulmod(-s0, invmod(s1, T), T), UPoly::x() % T, UPoly(CycloNum(1))};
    Derivs dv(G);
    {
      QuotientOps ops{T};
      auto img = monomial_images(ops, v, d);
      auto img1 = monomial_images(ops, v, d - 1);
      std::vector<UPoly> res{eval_form(ops, G, img)};
      for (std::size_t k = 0; k < 2; ++k) res.push_back(eval_form(ops, G.derivative(k), img1));
      T = gcd_all(T, res);
    }
    if (T.degree() <= 0) return out;
    for (auto& e : v) e = e % T;

    // Split T by the local type of its roots.
    std::vector<Piece> pieces;
    {
      QuotientOps ops{T};
      auto H = eval_all(ops, dv.second, v, d - 2);
      auto C3 = eval_all(ops, dv.third, v, d - 3);
      UPoly rank_le1 = gcd_all(T, hessian_minors(ops, H));
      std::vector<UPoly> entries;
      for (auto& [k, e] : H) entries.push_back(e);
      UPoly rank0 = gcd_all(rank_le1, entries);
      UPoly rank1 = div_exact(rank_le1, rank0);
      UPoly nodes = div_exact(T, rank_le1);
      UPoly notcusp = rank1;
      if (rank1.degree() > 0) {
        QuotientOps o1{rank1};
        std::map<Monomial, UPoly> H1, C1;
        for (auto& [k, e] : H) H1[k] = e % rank1;
        for (auto& [k, e] : C3) C1[k] = e % rank1;
        for (int i = 0; i < 3 && notcusp.degree() > 0; ++i)
          for (int k = 0; k < 3 && notcusp.degree() > 0; ++k) notcusp = gcd(notcusp, cubic_test(o1, H1, C1, i, k));
        notcusp = notcusp.degree() <= 0 ? UPoly(CycloNum(1)) : notcusp.monic();
      }
      UPoly cusps = div_exact(rank1, notcusp);
      pieces = {{nodes, PointKind::Node}, {cusps, PointKind::Cusp}, {notcusp * rank0, PointKind::Unclassified}};
    }

    for (auto& [part, kind] : pieces) {
      if (part.degree() <= 0) continue;
      UPoly rest = part.monic();
      std::array<UPoly, 3> orig;
      for (int i = 0; i < 3; ++i) {
        orig[i] = UPoly();
        for (int j = 0; j < 3; ++j) orig[i] += v[j] * M[i][j];
      }
      for (auto& theta : roots_in_field(rest)) {
        ProjPoint p(orig[0].eval(theta), orig[1].eval(theta), orig[2].eval(theta));
        PointKind k = classify(g0, p);
        if (k != kind || !is_singular_at(g0, p))
          throw std::logic_error("singular locus: inconsistent classification at " + p.str());
        out.points.push_back({p, kind, {}});
        rest = div_exact(rest, UPoly(std::vector<CycloNum>{-theta, CycloNum(1)}));
      }
      if (rest.degree() > 0) {
        if (kind == PointKind::Unclassified)
          throw IncompleteLocus(std::to_string(rest.degree()) +
                                " singular points outside Q(w) are neither nodes nor cusps");
        PointCluster cl;
        cl.minpoly = rest;
        for (int i = 0; i < 3; ++i) cl.coords[i] = orig[i] % rest;
        cl.kind = kind;
        out.clusters.push_back(std::move(cl));
      }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const ClassifiedPoint& a, const ClassifiedPoint& b) { return a.point < b.point; });
    return out;
  }
  throw IncompleteLocus("no generic projection found; the curve may have singular points of multiplicity > 2");
}

std::vector<ClassifiedPoint> singular_points(const MPoly& g) {
  SingularLocus loc = singular_locus(g);
  if (!loc.clusters.empty()) {
    std::size_t n = loc.total() - loc.points.size();
    throw IncompleteLocus(std::to_string(n) + " singular points are not defined over Q(w)");
  }
  return loc.points;
}

CurveProfile CurveProfile::detect(const MPoly& g, int components, bool declared) {
  if (components < 1) throw UsageError("component count must be positive");
  SingularLocus loc = singular_locus(g);
  CurveProfile p;
  p.g = g;
  p.degree = g.total_degree();
  p.points = std::move(loc.points);
  p.clusters = std::move(loc.clusters);
  p.components = components;
  p.components_declared = declared;
  return p;
}

CurveProfile CurveProfile::with_points(const MPoly& g, std::vector<ClassifiedPoint> points, int components,
                                       bool declared) {
  require_squarefree_form(g);
  if (components < 1) throw UsageError("component count must be positive");
  for (auto& cp : points) {
    if (!is_singular_at(g, cp.point)) throw InvalidPoint(cp.point.str() + " is not a singular point of the curve");
    if (cp.kind == PointKind::Node || cp.kind == PointKind::Cusp) {
      PointKind k = classify(g, cp.point);
      if (k != cp.kind)
        throw InvalidPoint(cp.point.str() + " was declared " + to_string(cp.kind) + " but is " + to_string(k));
    }
  }
  CurveProfile p;
  p.g = g;
  p.degree = g.total_degree();
  p.points = std::move(points);
  p.components = components;
  p.components_declared = declared;
  return p;
}

int CurveProfile::cusp_count() const {
  int n = 0;
  for (auto& p : points) n += p.kind == PointKind::Cusp;
  for (auto& c : clusters) n += c.kind == PointKind::Cusp ? c.size() : 0;
  return n;
}

int CurveProfile::node_count() const {
  int n = 0;
  for (auto& p : points) n += p.kind == PointKind::Node;
  for (auto& c : clusters) n += c.kind == PointKind::Node ? c.size() : 0;
  return n;
}

std::vector<Functional> conditions_at(const Rat& alpha, const std::vector<ClassifiedPoint>& points) {
  std::vector<Functional> out;
  for (auto& cp : points) {
    switch (cp.kind) {
      case PointKind::Node: break;
      case PointKind::Cusp:
        if (alpha == Rat(5, 6)) out.push_back({cp.point, {0, 0, 0}});
        break;
      case PointKind::Custom:
        for (auto& cc : cp.custom)
          if (cc.alpha == alpha)
            for (auto& dv : cc.derivs) out.push_back({cp.point, dv});
        break;
      case PointKind::Unclassified:
        throw UnclassifiedPoint(cp.point.str() + " needs quasiadjunction data before defects can be computed");
    }
  }
  return out;
}

namespace {

std::vector<Monomial> forms_basis(int k) {
  std::vector<Monomial> out;
  for (int a = k; a >= 0; --a)
    for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
  return out;
}

Integer falling(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

CycloNum apply_functional(const Functional& fn, const Monomial& m) {
  CycloNum r(1);
  for (int i = 0; i < 3; ++i) {
    if (m[i] < fn.deriv[i]) return CycloNum();
    r *= CycloNum(Rat(falling(m[i], fn.deriv[i]))) * pow(fn.point.c[i], m[i] - fn.deriv[i]);
  }
  return r;
}

// Number of independent conditions; exact unless clusters are involved.
int evaluation_rank(const std::vector<Functional>& fns, const std::vector<const PointCluster*>& cls, int k,
                    std::string& method) {
  auto basis = forms_basis(k);
  std::size_t ncond = fns.size();
  for (auto* c : cls) ncond += c->size();
  if (ncond == 0) return 0;
  std::size_t cap = std::min(ncond, basis.size());
  if (cls.empty()) {
    method = "exact";
    CMatrix A;
    for (auto& fn : fns) {
      std::vector<CycloNum> row;
      for (auto& m : basis) row.push_back(apply_functional(fn, m));
      A.push_back(std::move(row));
    }
    return static_cast<int>(rank(A));
  }
  // Columns of a cluster: coefficients of m(coords) mod minpoly. Reduction mod
  // a prime can only lose rank, so the maximum over primes is a lower bound
  // that is exact unless every prime tried divides one fixed nonzero minor.
  method = "multimodular";
  std::size_t best = 0;
  int good = 0;
  for (std::size_t pi = 0; good < 4 && best < cap; ++pi) {
    u64 p = prime_1mod3(pi), wp = cube_root_of_unity(p);
    std::vector<std::vector<u64>> A(basis.size());
    bool ok = true;
    for (std::size_t r = 0; r < basis.size() && ok; ++r)
      for (auto& fn : fns) {
        auto e = reduce(apply_functional(fn, basis[r]), p, wp);
        if (!e) {
          ok = false;
          break;
        }
        A[r].push_back(*e);
      }
    for (auto* c : cls) {
      if (!ok) break;
      auto T = reduce(c->minpoly, p, wp);
      if (!T || (int)T->size() != c->size() + 1) {
        ok = false;
        break;
      }
      std::array<NPoly, 3> x;
      for (int i = 0; i < 3 && ok; ++i) {
        auto xi = reduce(c->coords[i], p, wp);
        if (!xi) ok = false;
        else x[i] = nmod(*xi, *T, p);
      }
      if (!ok) break;
      std::array<std::vector<NPoly>, 3> pw;
      for (int i = 0; i < 3; ++i) {
        pw[i].push_back(NPoly{1});
        for (int e = 1; e <= k; ++e) pw[i].push_back(nmod(nmul(pw[i].back(), x[i], p), *T, p));
      }
      for (std::size_t r = 0; r < basis.size(); ++r) {
        auto& m = basis[r];
        NPoly val = nmod(nmul(nmod(nmul(pw[0][m[0]], pw[1][m[1]], p), *T, p), pw[2][m[2]], p), *T, p);
        for (int j = 0; j < c->size(); ++j) A[r].push_back(j < (int)val.size() ? val[j] : 0);
      }
    }
    if (!ok) continue;
    ++good;
    best = std::max(best, rank_mod(A, p));
  }
  return static_cast<int>(best);
}

}  // namespace

int conditions_rank(const std::vector<Functional>& fns, int k) {
  if (k < 0) return 0;
  std::string method;
  return evaluation_rank(fns, {}, k, method);
}

DefectRow defect(const CurveProfile& profile, const Rat& alpha) {
  if (alpha <= 0 || alpha > 1) throw UsageError("alpha must lie in (0, 1]");
  Rat ad = alpha * profile.degree;
  if (ad.get_den() != 1) throw UsageError("alpha * d must be an integer");
  DefectRow row;
  row.form_degree = static_cast<int>(ad.get_num().get_si()) - 3;
  auto fns = conditions_at(alpha, profile.points);
  std::vector<const PointCluster*> cls;
  for (auto& c : profile.clusters) {
    if (c.kind == PointKind::Unclassified)
      throw UnclassifiedPoint("a cluster of " + std::to_string(c.size()) + " points is unclassified");
    if (c.kind == PointKind::Cusp && alpha == Rat(5, 6)) cls.push_back(&c);
  }
  row.l = static_cast<int>(fns.size());
  for (auto* c : cls) row.l += c->size();
  row.h = row.form_degree >= 0 ? evaluation_rank(fns, cls, row.form_degree, row.rank_method) : 0;
  row.delta = row.l - row.h;
  return row;
}

UPoly cyclotomic(int n) {
  UPoly t = UPoly::x();
  UPoly r = t.pow(n) - UPoly(CycloNum(1));
  for (int m = 1; m < n; ++m)
    if (n % m == 0) r = div_exact(r, cyclotomic(m));
  return r;
}

AlexanderPoly alexander(const CurveProfile& profile) {
  AlexanderPoly a;
  a.degree = profile.degree;
  int d = profile.degree;
  std::map<Rat, int> delta;
  for (int k = 1; k < d; ++k) {
    Rat alpha = ratio(k, d);
    DefectRow row = defect(profile, alpha);
    if (row.l > 0) a.defects[alpha] = row;
    delta[alpha] = row.delta;
  }
  for (int k = 1; k < d; ++k) {
    Rat alpha = ratio(k, d);
    int o = delta[alpha] + delta[Rat(1 - alpha)];
    if (o > 0) a.orders[alpha] = o;
  }
  if (profile.components > 1) a.orders[Rat(0)] = profile.components - 1;
  return a;
}

int ord_at(const AlexanderPoly& a, const Rat& alpha) {
  auto it = a.orders.find(alpha);
  return it == a.orders.end() ? 0 : it->second;
}

int AlexanderPoly::total_degree() const {
  int n = 0;
  for (auto& [alpha, o] : orders) n += o;
  return n;
}

std::string AlexanderPoly::str(const std::string& var) const {
  // Group roots by their order n; a full orbit with a common exponent is Phi_n^e.
  std::map<Integer, std::map<Rat, int>> by_order;
  for (auto& [alpha, o] : orders) by_order[alpha.get_den()][alpha] = o;
  std::vector<std::string> factors;
  auto power = [](const std::string& base, int e, bool wrap) {
    std::string b = wrap ? "(" + base + ")" : base;
    return e == 1 ? b : b + "^" + std::to_string(e);
  };
  for (auto& [n, roots] : by_order) {
    int ni = static_cast<int>(n.get_si());
    std::vector<int> prim;
    for (int j = 0; j < ni; ++j)
      if (std::gcd(j, ni) == 1) prim.push_back(j);
    int e0 = roots.begin()->second;
    bool uniform = roots.size() == prim.size() &&
                   std::all_of(roots.begin(), roots.end(), [&](auto& kv) { return kv.second == e0; });
    if (uniform) {
      std::string base = cyclotomic(ni).str(var);
      bool wrap = by_order.size() > 1 || e0 > 1;
      factors.push_back(power(base, e0, wrap && base.find(' ') != std::string::npos));
    } else {
      for (auto& [alpha, o] : roots)
        factors.push_back(power(var + " - exp(2*pi*i*" + to_string(alpha) + ")", o, true));
    }
  }
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i];
  return s;
}

}  // namespace cl
