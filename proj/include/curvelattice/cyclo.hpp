#pragma once

#include <string>

#include "curvelattice/rat.hpp"

namespace cl {

// a + b*w with w^2 + w + 1 = 0.
class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(long v) : a_(v), b_(0) {}
  CycloNum(Rat a) : a_(std::move(a)), b_(0) {}
  CycloNum(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static CycloNum omega() { return CycloNum(Rat(0), Rat(1)); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  // Complex conjugation: w -> w^2 = -1 - w.
  CycloNum conj() const { return CycloNum(Rat(a_ - b_), Rat(-b_)); }
  Rat norm() const { return Rat(a_ * a_ - a_ * b_ + b_ * b_); }
  CycloNum inverse() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);

  friend CycloNum operator+(CycloNum x, const CycloNum& y) { return x += y; }
  friend CycloNum operator-(CycloNum x, const CycloNum& y) { return x -= y; }
  friend CycloNum operator*(CycloNum x, const CycloNum& y) { return x *= y; }
  friend CycloNum operator/(CycloNum x, const CycloNum& y) { return x /= y; }
  CycloNum operator-() const { return CycloNum(Rat(-a_), Rat(-b_)); }

  friend bool operator==(const CycloNum& x, const CycloNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const CycloNum& x, const CycloNum& y) { return !(x == y); }
  // Arbitrary total order, used only for canonical sorting.
  friend bool operator<(const CycloNum& x, const CycloNum& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  // Sign used when rendering: the sign of a, or of b when a = 0.
  int display_sign() const { return sgn(a_) != 0 ? sgn(a_) : sgn(b_); }
  // Representatives with real part > 0, or real part 0 and imaginary part > 0.
  bool in_positive_half_plane() const;

  // "3/2", "w", "-w", "1 + 2*w" (no outer parentheses).
  std::string str() const;

 private:
  Rat a_{0};
  Rat b_{0};
};

CycloNum pow(CycloNum x, unsigned e);

}  // namespace cl
