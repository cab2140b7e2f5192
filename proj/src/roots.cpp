#include "curvelattice/roots.hpp"

#include <algorithm>
#include <array>

#include "curvelattice/modular.hpp"

namespace cl {

namespace {

using Vec2 = std::array<Integer, 2>;

// Norm form of a + b w and its (doubled) polarization.
Integer qnorm(const Vec2& v) { return v[0] * v[0] - v[0] * v[1] + v[1] * v[1]; }
Integer qpolar2(const Vec2& u, const Vec2& v) {
  return 2 * u[0] * v[0] - u[0] * v[1] - u[1] * v[0] + 2 * u[1] * v[1];
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// Smallest-norm (a, b) with a + b*w = c (mod M), given w^2 + w + 1 = 0 (mod M).
Vec2 closest_eisenstein(const Integer& c, const Integer& w, const Integer& M) {
  Vec2 b1{M, 0}, b2{Integer(-w), 1};
  for (;;) {
    if (qnorm(b2) < qnorm(b1)) std::swap(b1, b2);
    Integer mu = round_rat(ratio(qpolar2(b1, b2), Integer(2 * qnorm(b1))));
    if (mu == 0) break;
    b2[0] -= mu * b1[0];
    b2[1] -= mu * b1[1];
  }
  // Solve (c, 0) = x b1 + y b2.
  Integer d = b1[0] * b2[1] - b1[1] * b2[0];
  Rat x = ratio(Integer(c * b2[1]), d), y = ratio(Integer(-c * b1[1]), d);
  Integer xr = round_rat(x), yr = round_rat(y);
  Vec2 best{c, 0};
  Integer bestn = -1;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      Integer xi = xr + i, yj = yr + j;
      Vec2 v{Integer(c - xi * b1[0] - yj * b2[0]), Integer(-xi * b1[1] - yj * b2[1])};
      Integer n = qnorm(v);
      if (bestn < 0 || n < bestn) {
        bestn = n;
        best = v;
      }
    }
  return best;
}

}  // namespace

std::vector<CycloNum> roots_in_field(const UPoly& p0) {
  std::vector<CycloNum> out;
  if (p0.degree() <= 0) return out;
  UPoly p = squarefree_part(p0);
  if (p.degree() == 1) return {-p[0] / p[1]};

  // Scale into Z[w][t] with a rational-integer leading coefficient L.
  Integer den = 1;
  for (auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.a().get_den().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.b().get_den().get_mpz_t());
  }
  UPoly P = p * CycloNum(Rat(den));
  P = P * P.lc().conj();
  Integer L = P.lc().a().get_num();
  if (L < 0) {
    P = -P;
    L = -L;
  }

  // |root| <= 1 + max|c_i|/L, so |L*root| <= L + max|c_i| =: G.
  Integer m2 = 0;
  for (auto& c : P.coeffs()) m2 = std::max(m2, Integer(c.norm().get_num()));
  Integer G = L + isqrt(m2) + 1;
  Integer need = 16 * G * G + 16;

  int n = P.degree();
  for (std::size_t pi = 0;; ++pi) {
    u64 pr = prime_1mod3(pi);
    u64 w0 = cube_root_of_unity(pr);
    auto Pp = reduce(P, pr, w0);
    if (!Pp || (int)Pp->size() != n + 1) continue;
    if (ngcd(*Pp, nderiv(*Pp, pr), pr).size() > 1) continue;

    std::mt19937_64 rng(pr);
    std::vector<u64> r0 = nroots(*Pp, pr, rng);
    if (r0.empty()) return out;

    Integer prime(static_cast<unsigned long>(pr));
    Integer M = prime;
    int iters = 0;
    while (M <= need) {
      M *= M;
      ++iters;
    }
    // Lift w, then the roots, by Newton iteration modulo M.
    Integer w(static_cast<unsigned long>(w0));
    for (int it = 0; it <= iters; ++it) {
      Integer f = w * w + w + 1, df = 2 * w + 1, inv;
      mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), M.get_mpz_t());
      w = mod_pos(Integer(w - f * inv), M);
    }
    std::vector<Integer> coef(n + 1);
    for (int i = 0; i <= n; ++i)
      coef[i] = mod_pos(Integer(P[i].a().get_num() + P[i].b().get_num() * w), M);
    auto evalM = [&](const Integer& x, bool deriv) {
      Integer r = 0;
      for (int i = n; i >= (deriv ? 1 : 0); --i) {
        Integer c = deriv ? Integer(coef[i] * i) : coef[i];
        r = mod_pos(Integer(r * x + c), M);
      }
      return r;
    };
    for (u64 rr : r0) {
      Integer r(static_cast<unsigned long>(rr));
      for (int it = 0; it <= iters; ++it) {
        Integer f = evalM(r, false), df = evalM(r, true), inv;
        if (mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), M.get_mpz_t()) == 0) break;
        r = mod_pos(Integer(r - f * inv), M);
      }
      Vec2 ab = closest_eisenstein(mod_pos(Integer(L * r), M), w, M);
      CycloNum beta(ratio(ab[0], L), ratio(ab[1], L));
      if (p.eval(beta).is_zero()) out.push_back(beta);
    }
    break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CycloNum> sqrt_in_field(const CycloNum& c) {
  if (c.is_zero()) return CycloNum();
  auto r = roots_in_field(UPoly(std::vector<CycloNum>{-c, CycloNum(), CycloNum(1)}));
  for (auto& s : r)
    if (s.in_positive_half_plane()) return s;
  return std::nullopt;
}

std::vector<CycloNum> cube_roots_in_field(const CycloNum& c) {
  if (c.is_zero()) return {CycloNum()};
  return roots_in_field(UPoly(std::vector<CycloNum>{-c, CycloNum(), CycloNum(), CycloNum(1)}));
}

}  // namespace cl
