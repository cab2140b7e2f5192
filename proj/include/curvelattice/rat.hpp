#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>
#include <string_view>

namespace cl {

using Integer = mpz_class;
using Rat = mpq_class;  // mpq keeps lowest terms with a positive denominator

// Canonical n/d (d != 0). Prefer this over the two-argument mpq constructor,
// which does not reduce.
Rat ratio(const Integer& n, const Integer& d);

std::string to_string(const Integer& z);
std::string to_string(const Rat& q);

// Accepts "n" or "n/d" with an optional leading sign.
Rat parse_rat(std::string_view s);

Integer floor_div(const Integer& a, const Integer& b);
Integer round_rat(const Rat& q);  // nearest integer, ties toward +infinity
Integer floor_rat(const Rat& q);
Integer ceil_rat(const Rat& q);
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
bool is_square(const Rat& q);

bool is_probable_prime(const Integer& n);
// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, int>> factor(const Integer& n);

// Squarefree integer s with q = s * r^2 for some rational r (q != 0).
Integer squarefree_class(const Rat& q);

}  // namespace cl
