#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvelattice/cyclo.hpp"

namespace cl {

using Monomial = std::vector<int>;

// Graded lexicographic order with the declared variable order; "greater" first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

inline constexpr int kZeroDegree = -1;  // degree of the zero polynomial

class MPoly {
 public:
  using Terms = std::map<Monomial, CycloNum, GrlexGreater>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly constant(const std::vector<std::string>& vars, const CycloNum& c);
  static MPoly variable(const std::vector<std::string>& vars, std::size_t i);
  static MPoly monomial(const std::vector<std::string>& vars, Monomial m, const CycloNum& c);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  CycloNum constant_term() const;
  std::optional<std::size_t> var_index(const std::string& name) const;

  int total_degree() const;
  int degree_in(std::size_t v) const;
  int min_degree_in(std::size_t v) const;  // largest e with v^e | p; kZeroDegree for 0
  bool is_homogeneous() const;
  int weighted_degree(const std::vector<int>& w) const;
  bool is_weighted_homogeneous(const std::vector<int>& w) const;

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const CycloNum& leading_coeff() const { return terms_.begin()->second; }
  CycloNum coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const CycloNum& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const CycloNum& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const CycloNum& c) { return a *= c; }
  friend MPoly operator*(const CycloNum& c, MPoly a) { return a *= c; }
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned e) const;
  MPoly derivative(std::size_t v) const;
  MPoly monic() const;  // leading coefficient 1 (zero stays zero)
  MPoly conj() const;   // w -> w^2 on coefficients
  // Multiply by v^shift (shift may be negative when divisible).
  MPoly shift(std::size_t v, int e) const;

  CycloNum eval(const std::vector<CycloNum>& point) const;
  // Substitute v = c; v stays in the variable list with exponent 0.
  MPoly specialize(std::size_t v, const CycloNum& c) const;
  // Replace variable i by images[i]; all images share one variable list.
  MPoly compose(const std::vector<MPoly>& images) const;
  // Same polynomial over another variable list (by name; missing names must not occur).
  MPoly rebase(const std::vector<std::string>& vars) const;

  // coeffs[i] = coefficient of v^i, as a polynomial not involving v.
  std::vector<MPoly> coeffs_in(std::size_t v) const;
  static MPoly from_coeffs_in(const std::vector<std::string>& vars, std::size_t v,
                              const std::vector<MPoly>& coeffs);

  // Exact quotient if d divides *this, else nullopt. d != 0.
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

// Integer-coefficient linear map applied to the variables: p(M * v).
MPoly linear_change(const MPoly& p, const std::vector<std::vector<CycloNum>>& M);

}  // namespace cl
