#include "curvelattice/modular.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cl {

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

u64 prime_1mod3(std::size_t i) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard<std::mutex> lock(mu);
  u64 n = cache.empty() ? (1ull << 62) : cache.back() - 1;
  while (cache.size() <= i) {
    while (n % 3 != 1) --n;
    while (!is_prime_u64(n)) n -= 3;
    cache.push_back(n);
    n -= 3;
  }
  return cache[i];
}

u64 cube_root_of_unity(u64 p) {
  for (u64 g = 2;; ++g) {
    u64 w = pow_mod(g, (p - 1) / 3, p);
    if (w != 1) return w;
  }
}

std::optional<u64> reduce(const Rat& q, u64 p) {
  u64 d = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (d == 0) return std::nullopt;
  u64 n = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  return mul_mod(n, inv_mod(d, p), p);
}

std::optional<u64> reduce(const CycloNum& c, u64 p, u64 wp) {
  auto a = reduce(c.a(), p);
  if (!a) return std::nullopt;
  if (sgn(c.b()) == 0) return a;
  auto b = reduce(c.b(), p);
  if (!b) return std::nullopt;
  return add_mod(*a, mul_mod(*b, wp, p), p);
}

void ntrim(NPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

NPoly nadd(const NPoly& a, const NPoly& b, u64 p) {
  NPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add_mod(r[i], b[i], p);
  ntrim(r);
  return r;
}

NPoly nsub(const NPoly& a, const NPoly& b, u64 p) {
  NPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub_mod(r[i], b[i], p);
  ntrim(r);
  return r;
}

NPoly nmul(const NPoly& a, const NPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  // Each product is below 2^124; fold the accumulator before it can overflow.
  NPoly r(acc.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
      if (acc[i + j] >> 126) acc[i + j] %= p;
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<u64>(acc[k] % p);
  ntrim(r);
  return r;
}

NPoly nscale(const NPoly& a, u64 k, u64 p) {
  NPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], k, p);
  ntrim(r);
  return r;
}

namespace {

void ndivmod(const NPoly& a, const NPoly& m, u64 p, NPoly* q, NPoly* r) {
  if (m.empty()) throw std::domain_error("division by zero polynomial mod p");
  NPoly rem = a;
  std::size_t dm = m.size() - 1;
  NPoly quo(rem.size() > dm ? rem.size() - dm : 0, 0);
  u64 inv = inv_mod(m.back(), p);
  for (std::size_t i = rem.size(); i-- > dm;) {
    u64 c = rem[i];
    if (!c) continue;
    u64 f = mul_mod(c, inv, p);
    quo[i - dm] = f;
    for (std::size_t j = 0; j <= dm; ++j) rem[i - dm + j] = sub_mod(rem[i - dm + j], mul_mod(f, m[j], p), p);
  }
  if (rem.size() > dm) rem.resize(dm);
  ntrim(rem);
  ntrim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

}  // namespace

NPoly nmod(const NPoly& a, const NPoly& m, u64 p) {
  if (a.size() < m.size()) return a;
  NPoly r;
  ndivmod(a, m, p, nullptr, &r);
  return r;
}

NPoly ndiv(const NPoly& a, const NPoly& m, u64 p) {
  NPoly q;
  ndivmod(a, m, p, &q, nullptr);
  return q;
}

NPoly nmonic(const NPoly& a, u64 p) {
  if (a.empty()) return a;
  return nscale(a, inv_mod(a.back(), p), p);
}

NPoly ngcd(NPoly a, NPoly b, u64 p) {
  while (!b.empty()) {
    NPoly r = nmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return nmonic(a, p);
}

NPoly nderiv(const NPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  NPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul_mod(a[i], i % p, p);
  ntrim(r);
  return r;
}

NPoly npowmod(NPoly a, u64 e, const NPoly& m, u64 p) {
  NPoly r = nmod(NPoly{1}, m, p);
  a = nmod(a, m, p);
  while (e) {
    if (e & 1) r = nmod(nmul(r, a, p), m, p);
    e >>= 1;
    if (e) a = nmod(nmul(a, a, p), m, p);
  }
  return r;
}

u64 neval(const NPoly& a, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = add_mod(mul_mod(r, x, p), a[i], p);
  return r;
}

namespace {

void split_roots(const NPoly& f, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
  std::size_t d = f.size() - 1;
  if (d == 0) return;
  if (d == 1) {
    NPoly m = nmonic(f, p);
    out.push_back(sub_mod(0, m[0], p));
    return;
  }
  for (;;) {
    u64 delta = rng() % p;
    NPoly h = npowmod(NPoly{delta, 1}, (p - 1) / 2, f, p);
    h = nsub(h, NPoly{1}, p);
    NPoly g = ngcd(f, h, p);
    std::size_t dg = g.empty() ? 0 : g.size() - 1;
    if (dg > 0 && dg < d) {
      split_roots(g, p, rng, out);
      split_roots(ndiv(f, g, p), p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> nroots(const NPoly& a, u64 p, std::mt19937_64& rng) {
  std::vector<u64> out;
  if (a.size() <= 1) return out;
  NPoly f = nmonic(a, p);
  NPoly xp = npowmod(NPoly{0, 1}, p, f, p);
  NPoly g = ngcd(f, nsub(xp, NPoly{0, 1}, p), p);
  if (g.size() > 1) {
    if (g[0] == 0) {
      out.push_back(0);
      g = ndiv(g, NPoly{0, 1}, p);
    }
    split_roots(g, p, rng, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<NPoly> reduce(const UPoly& f, u64 p, u64 wp) {
  NPoly r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto v = reduce(f.coeffs()[i], p, wp);
    if (!v) return std::nullopt;
    r[i] = *v;
  }
  ntrim(r);
  return r;
}

std::optional<Rat> rational_reconstruct(const Integer& a0, const Integer& m) {
  Integer a = a0 % m;
  if (a < 0) a += m;
  Integer bound = isqrt(Integer(m / 2));
  Integer r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat q(r1, t1);
  q.canonicalize();
  return q;
}

// Multi-modular gcd over Q(w): each prime p = 1 mod 3 gives two images of the
// monic gcd (w -> wp and w -> wp^2), from which both coordinates are recovered.
UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UPoly(CycloNum(1));
  if (a.degree() <= 8 && b.degree() <= 8) return gcd_euclid(a, b);
  bool rational = a.is_rational() && b.is_rational();
  int best = std::min(a.degree(), b.degree()) + 1;
  std::vector<Integer> ca, cb;  // CRT images of the a- and b-coordinates
  Integer modulus = 1;
  UPoly last;
  int stable = 0;
  for (std::size_t pi = 0; pi < 100000; ++pi) {
    u64 p = prime_1mod3(pi);
    u64 w = cube_root_of_unity(p);
    u64 w2 = mul_mod(w, w, p);
    auto a1 = reduce(a, p, w), b1 = reduce(b, p, w);
    if (!a1 || !b1 || (int)a1->size() != a.degree() + 1 || (int)b1->size() != b.degree() + 1) continue;
    NPoly g1 = ngcd(*a1, *b1, p), g2 = g1;
    if (!rational) {
      auto a2 = reduce(a, p, w2), b2 = reduce(b, p, w2);
      if (!a2 || !b2 || (int)a2->size() != a.degree() + 1 || (int)b2->size() != b.degree() + 1) continue;
      g2 = ngcd(*a2, *b2, p);
      if (g1.size() != g2.size()) continue;
    }
    int dg = (int)g1.size() - 1;
    if (dg == 0) return UPoly(CycloNum(1));
    if (dg > best) continue;
    if (dg < best) {
      best = dg;
      ca.assign(dg + 1, Integer(0));
      cb.assign(dg + 1, Integer(0));
      modulus = 1;
      stable = 0;
      last = UPoly();
    }
    u64 inv_d = rational ? 0 : inv_mod(sub_mod(w, w2, p), p);
    Integer P(static_cast<unsigned long>(p));
    u64 mmod = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    u64 minv = inv_mod(mmod, p);
    for (int i = 0; i <= dg; ++i) {
      u64 bi = rational ? 0 : mul_mod(sub_mod(g1[i], g2[i], p), inv_d, p);
      u64 ai = sub_mod(g1[i], mul_mod(bi, w, p), p);
      for (int k = 0; k < 2; ++k) {
        Integer& acc = k == 0 ? ca[i] : cb[i];
        u64 val = k == 0 ? ai : bi;
        u64 cur = mpz_fdiv_ui(acc.get_mpz_t(), p);
        u64 t = mul_mod(sub_mod(val, cur, p), minv, p);
        acc += modulus * Integer(static_cast<unsigned long>(t));
      }
    }
    modulus *= P;
    std::vector<CycloNum> coeffs;
    bool ok = true;
    for (int i = 0; i <= dg && ok; ++i) {
      auto ra = rational_reconstruct(ca[i], modulus);
      auto rb = rational_reconstruct(cb[i], modulus);
      if (!ra || !rb) ok = false;
      else coeffs.emplace_back(*ra, *rb);
    }
    if (!ok) continue;
    UPoly g(coeffs);
    if (g == last) ++stable;
    else stable = 0;
    last = g;
    if (stable >= 1 && divides(g, a) && divides(g, b)) return g;
  }
  throw std::runtime_error("modular gcd did not converge");
}

namespace {

// Inverse of a modulo m over Z/p, or nullopt when they share a factor mod p.
std::optional<NPoly> ninvmod(const NPoly& a, const NPoly& m, u64 p) {
  NPoly r0 = m, r1 = nmod(a, m, p), s0, s1{1};
  while (!r1.empty()) {
    NPoly q = ndiv(r0, r1, p);
    NPoly r = nsub(r0, nmul(q, r1, p), p);
    NPoly s = nsub(s0, nmul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) return std::nullopt;
  return nmod(nscale(s0, inv_mod(r0[0], p), p), m, p);
}

}  // namespace

// Same image scheme as gcd(); the result is checked exactly before returning.
UPoly invmod(const UPoly& a0, const UPoly& m) {
  if (m.degree() <= 0) throw std::domain_error("modulus must have positive degree");
  UPoly a = a0 % m;
  if (m.degree() <= 4) return invmod_euclid(a, m);
  bool rational = a.is_rational() && m.is_rational();
  int n = m.degree();
  std::vector<Integer> ca(n, Integer(0)), cb(n, Integer(0));
  Integer modulus = 1;
  int failures = 0, used = 0, next_try = 1;
  for (std::size_t pi = 0; pi < 100000; ++pi) {
    u64 p = prime_1mod3(pi);
    u64 w = cube_root_of_unity(p);
    u64 w2 = mul_mod(w, w, p);
    auto a1 = reduce(a, p, w), m1 = reduce(m, p, w);
    if (!a1 || !m1 || (int)m1->size() != n + 1) continue;
    auto i1 = ninvmod(*a1, *m1, p);
    if (!i1) {
      if (++failures == 8 && gcd(a, m).degree() > 0) throw std::domain_error("not invertible modulo polynomial");
      continue;
    }
    NPoly i2 = *i1;
    if (!rational) {
      auto a2 = reduce(a, p, w2), m2 = reduce(m, p, w2);
      if (!a2 || !m2 || (int)m2->size() != n + 1) continue;
      auto j = ninvmod(*a2, *m2, p);
      if (!j) continue;
      i2 = *j;
    }
    i1->resize(n, 0);
    i2.resize(n, 0);
    u64 inv_d = rational ? 0 : inv_mod(sub_mod(w, w2, p), p);
    u64 minv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (int i = 0; i < n; ++i) {
      u64 bi = rational ? 0 : mul_mod(sub_mod((*i1)[i], i2[i], p), inv_d, p);
      u64 ai = sub_mod((*i1)[i], mul_mod(bi, w, p), p);
      for (int k = 0; k < 2; ++k) {
        Integer& acc = k == 0 ? ca[i] : cb[i];
        u64 cur = mpz_fdiv_ui(acc.get_mpz_t(), p);
        u64 t = mul_mod(sub_mod(k == 0 ? ai : bi, cur, p), minv, p);
        acc += modulus * Integer(static_cast<unsigned long>(t));
      }
    }
    modulus *= Integer(static_cast<unsigned long>(p));
    // Reconstruct on a doubling schedule; the exact check decides.
    if (++used < next_try) continue;
    next_try *= 2;
    std::vector<CycloNum> coeffs;
    bool ok = true;
    for (int i = n - 1; i >= 0 && ok; --i) {
      auto ra = rational_reconstruct(ca[i], modulus);
      auto rb = rational_reconstruct(cb[i], modulus);
      if (!ra || !rb) ok = false;
      else coeffs.emplace_back(*ra, *rb);
    }
    if (!ok) continue;
    std::reverse(coeffs.begin(), coeffs.end());
    UPoly v(coeffs);
    if (mulmod(a, v, m) == UPoly(CycloNum(1))) return v;
  }
  throw std::runtime_error("modular inverse did not converge");
}

}  // namespace cl
