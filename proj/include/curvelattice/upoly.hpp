#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvelattice/mpoly.hpp"

namespace cl {

// Dense univariate polynomial over Q(w); c[i] is the coefficient of t^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<CycloNum> c) : c_(std::move(c)) { trim(); }
  UPoly(const CycloNum& c) : c_{c} { trim(); }
  static UPoly monomial(int deg, const CycloNum& c);
  static UPoly x() { return monomial(1, CycloNum(1)); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<CycloNum>& coeffs() const { return c_; }
  CycloNum operator[](int i) const {
    return i >= 0 && i < (int)c_.size() ? c_[i] : CycloNum();
  }
  const CycloNum& lc() const { return c_.back(); }
  bool is_rational() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const CycloNum& k);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const CycloNum& k) { return a *= k; }
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  CycloNum eval(const CycloNum& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  UPoly conj() const;
  UPoly pow(unsigned e) const;
  UPoly compose(const UPoly& inner) const;

  std::string str(const std::string& var = "t") const;
  MPoly to_mpoly(const std::vector<std::string>& vars, std::size_t v) const;
  // p must only involve variable v.
  static UPoly from_mpoly(const MPoly& p, std::size_t v);

 private:
  void trim();
  std::vector<CycloNum> c_;
};

// Division over the field Q(w): a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
// Exact quotient; throws if b does not divide a.
UPoly div_exact(const UPoly& a, const UPoly& b);
bool divides(const UPoly& b, const UPoly& a);

// Euclidean gcd, monic (gcd(0,0) = 0). Reference implementation.
UPoly gcd_euclid(const UPoly& a, const UPoly& b);
// Multi-modular gcd with exact verification; agrees with gcd_euclid.
UPoly gcd(const UPoly& a, const UPoly& b);

UPoly squarefree_part(const UPoly& p);
// (factor, multiplicity) with factors monic, squarefree, pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

// Resultant with formal degrees m >= deg p, n >= deg q: the Sylvester determinant
// with the p-block of rows first.
CycloNum resultant_formal(const UPoly& p, const UPoly& q, int m, int n);
CycloNum resultant(const UPoly& p, const UPoly& q);
// Reference: Bareiss determinant of the Sylvester matrix.
CycloNum resultant_sylvester(const UPoly& p, const UPoly& q, int m, int n);

// Newton interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<CycloNum>& xs, const std::vector<CycloNum>& ys);

// Modular arithmetic in Q(w)[t]/(m).
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod(UPoly a, unsigned long e, const UPoly& m);
// Inverse of a modulo m when gcd(a, m) = 1 (multi-modular, verified).
UPoly invmod(const UPoly& a, const UPoly& m);
// Reference: extended Euclid.
UPoly invmod_euclid(const UPoly& a, const UPoly& m);

}  // namespace cl
