#include "curvelattice/upoly.hpp"

#include <stdexcept>

#include "curvelattice/linalg.hpp"

namespace cl {

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(int deg, const CycloNum& c) {
  std::vector<CycloNum> v(deg + 1);
  v[deg] = c;
  return UPoly(std::move(v));
}

bool UPoly::is_rational() const {
  for (auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const CycloNum& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<CycloNum> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloNum UPoly::eval(const CycloNum& x) const {
  CycloNum r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<CycloNum> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * CycloNum((long)i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return *this * lc().inverse();
}

UPoly UPoly::conj() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = c.conj();
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r(CycloNum(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + UPoly(*it);
  return r;
}

std::string UPoly::str(const std::string& var) const {
  return to_mpoly({var}, 0).str();
}

MPoly UPoly::to_mpoly(const std::vector<std::string>& vars, std::size_t v) const {
  MPoly p(vars);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Monomial m(vars.size(), 0);
    m[v] = (int)i;
    p.add_term(m, c_[i]);
  }
  return p;
}

UPoly UPoly::from_mpoly(const MPoly& p, std::size_t v) {
  std::vector<CycloNum> c(std::max(0, p.degree_in(v) + 1));
  for (auto& [m, k] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != v && m[i]) throw std::invalid_argument("polynomial is not univariate");
    c[m[v]] = k;
  }
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<CycloNum> r = a.coeffs();
  std::vector<CycloNum> q(a.degree() - b.degree() + 1);
  CycloNum inv = b.lc().inverse();
  const auto& bc = b.coeffs();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    CycloNum f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly div_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const UPoly& b, const UPoly& a) { return (a % b).is_zero(); }

UPoly gcd_euclid(const UPoly& a0, const UPoly& b0) {
  UPoly a = a0, b = b0;
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UPoly(CycloNum(1));
  return div_exact(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  // Yun's algorithm.
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() <= 0) return out;
  UPoly f = p.monic();
  UPoly d = f.derivative();
  UPoly a = gcd(f, d);
  UPoly b = div_exact(f, a);
  UPoly c = div_exact(d, a);
  int i = 1;
  while (b.degree() > 0) {
    UPoly dd = c - b.derivative();
    UPoly g = gcd(b, dd);
    if (g.degree() > 0) out.push_back({g, i});
    b = div_exact(b, g);
    c = dd.is_zero() ? UPoly() : div_exact(dd, g);
    ++i;
  }
  return out;
}

namespace {

CycloNum res_actual(UPoly p, UPoly q) {
  CycloNum acc(1);
  for (;;) {
    int m = p.degree(), n = q.degree();
    if (n == 0) return acc * pow(q.lc(), m);
    if (m == 0) return acc * pow(p.lc(), n);
    UPoly r = p % q;
    if (r.is_zero()) return CycloNum();
    if ((m * n) % 2) acc = -acc;
    acc *= pow(q.lc(), m - r.degree());
    p = std::move(q);
    q = std::move(r);
  }
}

}  // namespace

CycloNum resultant_formal(const UPoly& p, const UPoly& q, int m, int n) {
  if (p.degree() > m || q.degree() > n) throw std::invalid_argument("formal degree too small");
  if (n == 0) return pow(q[0], m);
  if (m == 0) return pow(p[0], n);
  if (p.is_zero() || q.is_zero()) return CycloNum();
  int dp = m - p.degree(), dq = n - q.degree();
  if (dp > 0 && dq > 0) return CycloNum();
  CycloNum r = res_actual(p, q);
  if (dp > 0) {
    r *= pow(q.lc(), dp);
    if ((dp * n) % 2) r = -r;
  } else if (dq > 0) {
    r *= pow(p.lc(), dq);
  }
  return r;
}

CycloNum resultant(const UPoly& p, const UPoly& q) {
  return resultant_formal(p, q, std::max(0, p.degree()), std::max(0, q.degree()));
}

CycloNum resultant_sylvester(const UPoly& p, const UPoly& q, int m, int n) {
  int N = m + n;
  if (N == 0) return CycloNum(1);
  CMatrix S(N, std::vector<CycloNum>(N));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S[i][i + j] = p[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S[n + i][i + j] = q[n - j];
  return det(S);
}

UPoly interpolate(const std::vector<CycloNum>& xs, const std::vector<CycloNum>& ys) {
  std::size_t n = xs.size();
  std::vector<CycloNum> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly r;
  for (std::size_t k = n; k-- > 0;) {
    r = r * UPoly(std::vector<CycloNum>{-xs[k], CycloNum(1)});
    r += UPoly(dd[k]);
  }
  return r;
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return (a * b) % m; }

UPoly powmod(UPoly a, unsigned long e, const UPoly& m) {
  UPoly r = UPoly(CycloNum(1)) % m;
  a = a % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    e >>= 1;
    if (e) a = mulmod(a, a, m);
  }
  return r;
}

UPoly invmod_euclid(const UPoly& a, const UPoly& m) {
  // Extended Euclid tracking the coefficient of a.
  UPoly r0 = m, r1 = a % m, s0, s1(CycloNum(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("not invertible modulo polynomial");
  return (s0 * r0.lc().inverse()) % m;
}

}  // namespace cl
