#include "curvelattice/polyalg.hpp"

#include <stdexcept>

#include "curvelattice/linalg.hpp"
#include "curvelattice/roots.hpp"

namespace cl {

namespace {

std::optional<std::size_t> first_var(const MPoly& p, const MPoly& q) {
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (p.degree_in(v) > 0 || q.degree_in(v) > 0) return v;
  return std::nullopt;
}

MPoly one_like(const MPoly& p) { return MPoly::constant(p.vars(), CycloNum(1)); }

MPoly div_or_throw(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("expected exact division");
  return *q;
}

// Leading coefficient of p viewed in v (a polynomial free of v).
MPoly lc_in(const MPoly& p, std::size_t v) { return p.coeffs_in(v).back(); }

MPoly content_in(const MPoly& p, std::size_t v) {
  MPoly c(p.vars());
  for (auto& k : p.coeffs_in(v)) {
    if (k.is_zero()) continue;
    c = c.is_zero() ? k.monic() : gcd(c, k);
    if (c.is_constant()) break;
  }
  return c;
}

MPoly prem(const MPoly& a, const MPoly& b, std::size_t v) {
  int db = b.degree_in(v);
  int e = a.degree_in(v) - db + 1;
  MPoly lb = lc_in(b, v);
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    MPoly t = lc_in(r, v).shift(v, dr - db) * b;
    r = lb * r - t;
    --e;
  }
  if (e > 0) r = lb.pow(e) * r;
  return r;
}

MPoly gcd_prs(MPoly a, MPoly b, std::size_t v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  MPoly g = one_like(a), h = one_like(a);
  for (;;) {
    int d = a.degree_in(v) - b.degree_in(v);
    MPoly r = prem(a, b, v);
    if (r.is_zero()) return b;
    if (r.degree_in(v) == 0) return one_like(a);
    a = b;
    b = div_or_throw(r, g * h.pow(d));
    g = lc_in(a, v);
    if (d == 0) {
    } else if (d == 1) {
      h = g;
    } else {
      h = div_or_throw(g.pow(d), h.pow(d - 1));
    }
  }
}

}  // namespace

MPoly gcd(const MPoly& p, const MPoly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  auto v = first_var(p, q);
  if (!v) return one_like(p);
  if (p.degree_in(*v) == 0) return gcd(p, content_in(q, *v));
  if (q.degree_in(*v) == 0) return gcd(q, content_in(p, *v));
  MPoly cp = content_in(p, *v), cq = content_in(q, *v);
  MPoly c = gcd(cp, cq);
  MPoly pp = div_or_throw(p, cp), qq = div_or_throw(q, cq);
  MPoly g = gcd_prs(pp, qq, *v);
  if (g.degree_in(*v) > 0) g = div_or_throw(g, content_in(g, *v));
  else g = one_like(p);
  return (c * g).monic();
}

MPoly strip_power(const MPoly& p, std::size_t v, int* power) {
  int e = p.is_zero() ? 0 : p.min_degree_in(v);
  if (power) *power = e;
  return e ? p.shift(v, -e) : p;
}

namespace {

// Bivariate gcd in (x, y) by evaluating y, univariate gcds in x and interpolation.
std::optional<MPoly> gcd_bivariate(const MPoly& A, const MPoly& B, std::size_t x, std::size_t y) {
  auto as_uni = [&](const MPoly& p) { return UPoly::from_mpoly(p, y); };
  auto content = [&](const MPoly& p) {
    UPoly c;
    for (auto& k : p.coeffs_in(x))
      if (!k.is_zero()) c = gcd(c, as_uni(k));
    return c;
  };
  UPoly ca = content(A), cb = content(B);
  UPoly c = gcd(ca, cb);
  MPoly Ap = div_or_throw(A, ca.to_mpoly(A.vars(), y));
  MPoly Bp = div_or_throw(B, cb.to_mpoly(B.vars(), y));
  UPoly la = as_uni(lc_in(Ap, x)), lb = as_uni(lc_in(Bp, x));
  UPoly gamma = gcd(la, lb);
  int bound = gamma.degree() + std::min(Ap.degree_in(y), Bp.degree_in(y));
  auto ca_x = Ap.coeffs_in(x);
  auto cb_x = Bp.coeffs_in(x);
  std::vector<UPoly> ua, ub;
  for (auto& k : ca_x) ua.push_back(as_uni(k));
  for (auto& k : cb_x) ub.push_back(as_uni(k));
  auto special = [](const std::vector<UPoly>& cs, const CycloNum& y0) {
    std::vector<CycloNum> v;
    for (auto& k : cs) v.push_back(k.eval(y0));
    return UPoly(v);
  };
  int best = std::min(Ap.degree_in(x), Bp.degree_in(x)) + 1;
  std::vector<CycloNum> pts;
  std::vector<UPoly> imgs;
  for (long t = 0; t < 4 * (bound + 8) + 64; ++t) {
    CycloNum y0(t);
    if (la.eval(y0).is_zero() || lb.eval(y0).is_zero()) continue;
    UPoly g = gcd(special(ua, y0), special(ub, y0));
    if (g.degree() > best) continue;
    if (g.degree() < best) {
      best = g.degree();
      pts.clear();
      imgs.clear();
    }
    if (best == 0) return c.to_mpoly(A.vars(), y).monic();
    pts.push_back(y0);
    imgs.push_back(g * gamma.eval(y0));
    if ((int)pts.size() == bound + 1) break;
  }
  if ((int)pts.size() < bound + 1) return std::nullopt;
  std::vector<MPoly> coeffs;
  for (int i = 0; i <= best; ++i) {
    std::vector<CycloNum> ys;
    for (auto& g : imgs) ys.push_back(g[i]);
    coeffs.push_back(interpolate(pts, ys).to_mpoly(A.vars(), y));
  }
  MPoly H = MPoly::from_coeffs_in(A.vars(), x, coeffs);
  MPoly cH = content(H).to_mpoly(A.vars(), y);
  H = div_or_throw(H, cH);
  if (!Ap.divide_exact(H) || !Bp.divide_exact(H)) return std::nullopt;
  return (c.to_mpoly(A.vars(), y) * H).monic();
}

}  // namespace

MPoly gcd_fast(const MPoly& p, const MPoly& q) {
  if (p.is_zero() || q.is_zero()) return gcd(p, q);
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (p.degree_in(v) > 0 || q.degree_in(v) > 0) active.push_back(v);
  if (active.size() <= 1) return gcd(p, q);
  if (active.size() == 2) {
    std::size_t x = active[0], y = active[1];
    if (p.degree_in(x) == 0 || q.degree_in(x) == 0) return gcd(p, q);
    auto g = gcd_bivariate(p, q, x, y);
    return g ? *g : gcd(p, q);
  }
  if (active.size() == 3 && p.is_homogeneous() && q.is_homogeneous()) {
    std::size_t z = active[2];
    int ep, eq;
    MPoly ps = strip_power(p, z, &ep), qs = strip_power(q, z, &eq);
    MPoly pa = ps.specialize(z, CycloNum(1)), qa = qs.specialize(z, CycloNum(1));
    MPoly g = gcd_fast(pa, qa);
    // Homogenize to the total degree of g.
    int d = g.total_degree();
    MPoly h(p.vars());
    for (auto& [m, c] : g.terms()) {
      Monomial n = m;
      int s = 0;
      for (int e : m) s += e;
      n[z] = d - s;
      h.add_term(n, c);
    }
    return h.shift(z, std::min(ep, eq)).monic();
  }
  return gcd(p, q);
}

namespace {

MPoly interpolate_mpoly(const std::vector<CycloNum>& xs, std::vector<MPoly> dd, std::size_t v,
                        const std::vector<std::string>& vars) {
  std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) * (xs[i] - xs[i - j]).inverse();
      if (i == j) break;
    }
  MPoly r(vars);
  MPoly var = MPoly::variable(vars, v);
  for (std::size_t k = n; k-- > 0;) {
    r = r * (var - MPoly::constant(vars, xs[k]));
    r += dd[k];
  }
  return r;
}

MPoly res_rec(const MPoly& p, const MPoly& q, std::size_t var, int m, int n) {
  std::optional<std::size_t> other;
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (v != var && (p.degree_in(v) > 0 || q.degree_in(v) > 0)) {
      other = v;
      break;
    }
  if (!other) {
    CycloNum r = resultant_formal(UPoly::from_mpoly(p, var), UPoly::from_mpoly(q, var), m, n);
    return MPoly::constant(p.vars(), r);
  }
  std::size_t v = *other;
  int bound = m * std::max(0, q.degree_in(v)) + n * std::max(0, p.degree_in(v));
  std::vector<CycloNum> xs;
  std::vector<MPoly> vals;
  for (int i = 0; i <= bound; ++i) {
    CycloNum c(i);
    xs.push_back(c);
    vals.push_back(res_rec(p.specialize(v, c), q.specialize(v, c), var, m, n));
  }
  return interpolate_mpoly(xs, std::move(vals), v, p.vars());
}

}  // namespace

MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var) {
  if (p.is_zero() || q.is_zero()) return MPoly(p.vars().empty() ? q.vars() : p.vars());
  return res_rec(p, q, var, p.degree_in(var), q.degree_in(var));
}

std::vector<UPoly> subresultant_coeffs(const MPoly& p, const MPoly& q, std::size_t var,
                                       std::size_t y, int j) {
  int m = p.degree_in(var), n = q.degree_in(var);
  if (j < 0 || j >= std::min(m, n)) throw std::invalid_argument("subresultant index out of range");
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (v != var && v != y && (p.degree_in(v) > 0 || q.degree_in(v) > 0))
      throw std::invalid_argument("subresultant_coeffs expects a bivariate input");
  int N = m + n - 2 * j;     // matrix size
  int width = m + n - j;     // powers x^{width-1} .. x^0
  int bound = (n - j) * std::max(0, p.degree_in(y)) + (m - j) * std::max(0, q.degree_in(y));
  auto pc = p.coeffs_in(var), qc = q.coeffs_in(var);
  std::vector<UPoly> pu, qu;
  for (auto& k : pc) pu.push_back(UPoly::from_mpoly(k, y));
  for (auto& k : qc) qu.push_back(UPoly::from_mpoly(k, y));
  std::vector<CycloNum> xs;
  std::vector<std::vector<CycloNum>> vals(j + 1);
  for (int t = 0; t <= bound; ++t) {
    CycloNum y0(t);
    std::vector<CycloNum> pv, qv;
    for (auto& k : pu) pv.push_back(k.eval(y0));
    for (auto& k : qu) qv.push_back(k.eval(y0));
    CMatrix rows(N, std::vector<CycloNum>(width));
    for (int r = 0; r < n - j; ++r)
      for (int e = 0; e <= m; ++e) rows[r][width - 1 - (e + (n - j - 1 - r))] = pv[e];
    for (int r = 0; r < m - j; ++r)
      for (int e = 0; e <= n; ++e) rows[n - j + r][width - 1 - (e + (m - j - 1 - r))] = qv[e];
    xs.push_back(y0);
    for (int i = 0; i <= j; ++i) {
      CMatrix M(N, std::vector<CycloNum>(N));
      for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N - 1; ++c) M[r][c] = rows[r][c];
        M[r][N - 1] = rows[r][width - 1 - i];
      }
      vals[i].push_back(det(std::move(M)));
    }
  }
  std::vector<UPoly> out;
  for (int i = 0; i <= j; ++i) out.push_back(interpolate(xs, vals[i]));
  return out;
}

std::optional<MPoly> poly_sqrt(const MPoly& p) {
  if (p.is_zero()) return p;
  Monomial m0 = p.leading_monomial();
  for (int& e : m0) {
    if (e % 2) return std::nullopt;
    e /= 2;
  }
  auto sc = sqrt_in_field(p.leading_coeff());
  if (!sc) return std::nullopt;
  MPoly s = MPoly::monomial(p.vars(), m0, *sc);
  MPoly r = p - s * s;
  CycloNum inv2 = (CycloNum(2) * *sc).inverse();
  GrlexGreater greater;
  Monomial last = m0;
  while (!r.is_zero()) {
    Monomial t = r.leading_monomial();
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] -= m0[i];
      if (t[i] < 0) return std::nullopt;
    }
    if (!greater(last, t)) return std::nullopt;
    MPoly T = MPoly::monomial(p.vars(), t, r.leading_coeff() * inv2);
    r -= (s * T) * CycloNum(2) + T * T;
    s += T;
    last = t;
  }
  return s;
}

MPoly saturation_part(const MPoly& p, const MPoly& c) {
  if (p.is_zero()) throw std::domain_error("saturation part of the zero polynomial");
  MPoly part = MPoly::constant(p.vars(), CycloNum(1));
  if (c.is_constant()) return part;
  MPoly r = p;
  for (;;) {
    MPoly h = gcd_fast(r, c);
    if (h.is_constant()) break;
    part = part * h;
    r = div_or_throw(r, h);
  }
  return part;
}

}  // namespace cl
