#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvelattice/adjunction.hpp"
#include "curvelattice/linalg.hpp"
#include "curvelattice/mpoly.hpp"

namespace cl {

// (X, Y, Z) with Y^2 = X^3 + Z^6 g, deg g = 6k, deg Z = n, deg X = 2(k+n),
// deg Y = 3(k+n). Triples are kept in the canonical scaling with Z monic.
struct QuasiToricPoint {
  MPoly X, Y, Z, g;
  int k = 0;
  int n = 0;

  // Computes k, n and normalizes the scaling; does not verify.
  static QuasiToricPoint make(MPoly X, MPoly Y, MPoly Z, MPoly g);
  friend bool operator==(const QuasiToricPoint& a, const QuasiToricPoint& b) {
    return a.X == b.X && a.Y == b.Y && a.Z == b.Z && a.g == b.g;
  }
  std::string key() const;  // canonical text, used for sorting and dedup
};

struct Verification {
  bool ok = true;
  std::string violation;  // first failing clause when !ok
};

Verification verify_decomposition(const QuasiToricPoint& P);

// (X, Y, Z) -> (wX, Y, Z): the order-3 automorphism of the fibre.
QuasiToricPoint omega(const QuasiToricPoint& P);
QuasiToricPoint negate(const QuasiToricPoint& P);
// The six points (w^i X, +-Y, Z), in a fixed order starting with P.
std::vector<QuasiToricPoint> mu6_orbit(const QuasiToricPoint& P);

int height(const QuasiToricPoint& P);

struct PairingValue {
  int value = 0;
  bool self = false;  // P and Q are the same section; value is the height
};

// <P,Q> = k + n_P + n_Q - (P.Q). The intersection number (P.Q) is
// deg gcd(Z_Q^3 Y_P - Z_P^3 Y_Q, Z_Q^2 X_P - Z_P^2 X_Q) with the factors of
// C = gcd(Z_P, Z_Q) removed, plus the degree of the C-part of
// X_P Z_P Y_Q - X_Q Z_Q Y_P. Without a common factor of Z_P, Z_Q this is the
// plain gcd formula; the correction accounts for intersections over C = 0.
PairingValue pairing_value(const QuasiToricPoint& P, const QuasiToricPoint& Q);
int pairing(const QuasiToricPoint& P, const QuasiToricPoint& Q);

struct GramMatrix {
  IntMatrix entries;
  std::vector<QuasiToricPoint> basis;
  std::size_t size() const { return entries.size(); }
};

// Pairwise pairings; ConventionMismatch if symmetry, the diagonal or positive
// semidefiniteness fails.
GramMatrix gram(const std::vector<QuasiToricPoint>& points);

struct ToricSearch {
  // Points live on scale * g, which defines the same curve. The scale is a
  // square s^2 (s = 1 or a found mu) chosen to maximize the points over Q(w).
  CycloNum scale{1};
  std::vector<QuasiToricPoint> points;  // sorted by key, closed under mu6
  std::vector<MPoly> conics;            // conics through six cusps that were tried
  int field_exhausted = 0;              // solutions that need a field larger than Q(w)
  bool complete_in_field() const { return field_exhausted == 0; }
  std::string note;
};

// Toric decompositions (n = 0) of a sextic: for every conic q through six
// cusps, the mu with g - mu q^3 a perfect square, then X = -lambda q with
// lambda^3 = mu, Y = +-sqrt(g - mu q^3), Z = 1 (before rescaling).
ToricSearch find_toric_sextic(const CurveProfile& profile);

// Table 1 parameters: forms in (x, y); z plays the role of y0.
struct Table1Params {
  int k = 1;
  std::uint64_t seed = 0;
  MPoly u, f1p, f2p;
  std::vector<MPoly> f_free;  // f_i for i = 3 .. 2(k+1)
  std::vector<MPoly> g_free;  // g_i for i = 6 .. 3(k+1)
};

// Integer coefficients uniform in [-3, 3] from mt19937_64(seed); u != 0.
Table1Params sample_table1_params(int k, std::uint64_t seed);

struct Table1Result {
  MPoly f, g, F;  // f^3 - g^2 = z^6 F
  Table1Params params;
};

Table1Result table1_construct(const Table1Params& params);
// (X, Y, Z) = (f, g, z) on the curve -F: g^2 = f^3 + z^6 (-F).
QuasiToricPoint table1_point(const Table1Result& r);

}  // namespace cl
