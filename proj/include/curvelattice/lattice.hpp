#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvelattice/linalg.hpp"
#include "curvelattice/rat.hpp"

namespace cl {

inline constexpr std::size_t kMaxEnumerationRank = 8;

struct ShortVectors {
  Rat min_norm;
  std::size_t count = 0;
  std::vector<std::vector<long>> vectors;  // all v with v^T G v = min_norm, sorted
};

// Exact enumeration over the LDL^T decomposition, with the smallest diagonal
// entry as the initial norm bound. NotPositiveDefinite unless every pivot is
// positive; UsageError above kMaxEnumerationRank or for a non-symmetric G.
ShortVectors shortest_vectors(const QMatrix& G);

// (rank, determinant, minimal norm, kissing number).
struct LatticeEvidence {
  int rank = 0;
  Rat det;
  Rat min_norm;
  std::size_t kissing = 0;
  friend bool operator==(const LatticeEvidence&, const LatticeEvidence&) = default;
  std::string str() const;  // "(6, 27, 2, 18)"
};

LatticeEvidence evidence(const QMatrix& G);

// Matching of evidence against A2(k) (k <= 8), A2^m(k) (rank <= 8), D4, E6,
// E8. Tags read "A2", "A2(3)", "A2^3", "A2^2(2)", "D4", "E6", "E8" or
// "Unknown". A match is evidence, not an isometry proof.
struct LatticeId {
  std::string tag = "Unknown";
  LatticeEvidence evidence;
};

LatticeId identify(const QMatrix& G);

// Standard Gram matrices of the table lattices.
QMatrix a2_gram(long k = 1);
QMatrix orthogonal_sum(const QMatrix& a, const QMatrix& b);
QMatrix d4_gram();
QMatrix e6_gram();
QMatrix e8_gram();

// T Q T^T = diag(entries). `reduced` holds the squarefree integer class of
// each entry. Degenerate if Q is singular.
struct Diagonalization {
  std::vector<Rat> entries;
  std::vector<Integer> reduced;
  QMatrix transform;
};

Diagonalization diagonalize(const QMatrix& Q);

// Hilbert symbol (a, b)_p; p = 0 stands for the real place.
int hilbert_symbol(const Rat& a, const Rat& b, const Integer& p);
// Product of (d_i, d_j)_p over i < j.
int hasse_invariant(const std::vector<Rat>& diag, const Integer& p);

struct QEquivalence {
  bool equivalent = false;
  std::string reason;                    // first differing invariant, empty when equivalent
  std::optional<Integer> witness_prime;  // smallest odd prime with differing Hasse invariant, else 2
  int signature_a = 0, signature_b = 0;  // number of negative entries
  Integer disc_a, disc_b;                // squarefree discriminant classes
  std::map<Integer, std::pair<int, int>> hasse;  // prime -> (Hasse of a, Hasse of b)
};

// Rank, signature, discriminant square class and Hasse invariants at the
// primes dividing 2 and the diagonal entries of both forms.
QEquivalence q_equivalent(const QMatrix& a, const QMatrix& b);

// The lattice generated by vectors with PSD Gram G: an independent subset is
// chosen, all vectors are written in its coordinates, and a Hermite normal
// form gives a basis of their integer span.
struct GeneratedLattice {
  QMatrix gram;
  std::vector<std::size_t> independent;  // indices used as coordinates
  QMatrix basis;                         // rows: coordinates of the HNF basis
};

GeneratedLattice generated_lattice(const QMatrix& G);

}  // namespace cl
