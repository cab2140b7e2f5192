#pragma once

#include <optional>
#include <vector>

#include "curvelattice/mpoly.hpp"
#include "curvelattice/upoly.hpp"

namespace cl {

// Monic gcd (leading coefficient 1 in grlex); gcd(0,0) = 0.
// Reference: content/primitive-part recursion with subresultant pseudo-remainders.
MPoly gcd(const MPoly& p, const MPoly& q);
// Evaluation/interpolation gcd for homogeneous or bivariate inputs; falls back
// to the reference for other shapes. Agrees with gcd().
MPoly gcd_fast(const MPoly& p, const MPoly& q);

// Res_var(p, q): Sylvester determinant (p-block first) with formal degrees
// deg_var p and deg_var q. Other variables are handled by evaluation and
// interpolation; the univariate base case runs the Euclidean remainder chain.
MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var);

// Coefficients (s_0, ..., s_j) of the j-th subresultant of p, q in var, with
// formal degrees m, n; the remaining variable set must be {y} (bivariate).
std::vector<UPoly> subresultant_coeffs(const MPoly& p, const MPoly& q, std::size_t var,
                                       std::size_t y, int j);

// s with s^2 = p, leading coefficient in the positive half-plane; nullopt otherwise.
std::optional<MPoly> poly_sqrt(const MPoly& p);

// Largest power of v dividing p, removed.
MPoly strip_power(const MPoly& p, std::size_t v, int* power = nullptr);

// Homogeneous (or general) p: product of the factors of p sharing a root with c,
// i.e. the part of p supported on the zero set of c.
MPoly saturation_part(const MPoly& p, const MPoly& c);

}  // namespace cl
