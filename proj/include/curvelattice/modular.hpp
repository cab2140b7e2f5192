#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "curvelattice/upoly.hpp"

namespace cl {

using u64 = std::uint64_t;

inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow_mod(u64 a, u64 e, u64 p);
u64 inv_mod(u64 a, u64 p);
bool is_prime_u64(u64 n);

// Primes p = 1 mod 3 below 2^62, in decreasing order; index i is stable.
u64 prime_1mod3(std::size_t i);
// A primitive cube root of unity mod p (p = 1 mod 3).
u64 cube_root_of_unity(u64 p);

// Image of a + b w under w -> wp; nullopt if a denominator vanishes mod p.
std::optional<u64> reduce(const CycloNum& c, u64 p, u64 wp);
std::optional<u64> reduce(const Rat& q, u64 p);

// Dense polynomial over Z/p, low degree first, no trailing zeros.
using NPoly = std::vector<u64>;

void ntrim(NPoly& a);
NPoly nadd(const NPoly& a, const NPoly& b, u64 p);
NPoly nsub(const NPoly& a, const NPoly& b, u64 p);
NPoly nmul(const NPoly& a, const NPoly& b, u64 p);
NPoly nscale(const NPoly& a, u64 k, u64 p);
NPoly nmod(const NPoly& a, const NPoly& m, u64 p);
NPoly ndiv(const NPoly& a, const NPoly& m, u64 p);
NPoly nmonic(const NPoly& a, u64 p);
NPoly ngcd(NPoly a, NPoly b, u64 p);
NPoly nderiv(const NPoly& a, u64 p);
NPoly npowmod(NPoly a, u64 e, const NPoly& m, u64 p);
u64 neval(const NPoly& a, u64 x, u64 p);
// Distinct roots in Z/p of a squarefree polynomial.
std::vector<u64> nroots(const NPoly& a, u64 p, std::mt19937_64& rng);

std::optional<NPoly> reduce(const UPoly& f, u64 p, u64 wp);

// Rational reconstruction of a mod m with |num|, den <= sqrt(m/2).
std::optional<Rat> rational_reconstruct(const Integer& a, const Integer& m);

}  // namespace cl
