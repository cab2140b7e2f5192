#include "curvelattice/cyclo.hpp"

#include <stdexcept>

namespace cl {

CycloNum CycloNum::inverse() const {
  Rat n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(w)");
  CycloNum c = conj();
  return CycloNum(Rat(c.a_ / n), Rat(c.b_ / n));
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
CycloNum& CycloNum::operator*=(const CycloNum& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rat bd = b_ * o.b_;
  Rat na = a_ * o.a_ - bd;
  Rat nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) {
  if (sgn(o.b_) == 0) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero in Q(w)");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool CycloNum::in_positive_half_plane() const {
  // Re(a + b w) = a - b/2, Im = b * sqrt(3)/2.
  Rat re = a_ - b_ / 2;
  return sgn(re) > 0 || (sgn(re) == 0 && sgn(b_) > 0);
}

std::string CycloNum::str() const {
  if (sgn(b_) == 0) return to_string(a_);
  std::string wpart;
  Rat ab = abs(b_);
  wpart = ab == 1 ? "w" : to_string(ab) + "*w";
  if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + wpart;
  return to_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + wpart;
}

CycloNum pow(CycloNum x, unsigned e) {
  CycloNum r(1);
  while (e) {
    if (e & 1) r *= x;
    e >>= 1;
    if (e) x *= x;
  }
  return r;
}

}  // namespace cl
