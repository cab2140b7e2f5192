#pragma once

#include <cstdint>
#include <vector>

#include "curvelattice/cyclo.hpp"

namespace cl {

using CMatrix = std::vector<std::vector<CycloNum>>;
using QMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<long>>;

QMatrix to_qmatrix(const IntMatrix& m);

// Fraction-free (Bareiss) determinant over Q(w).
CycloNum det(CMatrix a);
std::size_t rank(CMatrix a);
// Basis of {v : a v = 0}; each vector scaled so its last nonzero entry is 1.
std::vector<std::vector<CycloNum>> nullspace(CMatrix a, std::size_t ncols);

Rat det(QMatrix a);
std::size_t rank(QMatrix a);
// Symmetric elimination: PSD iff every pivot is >= 0 and a zero pivot has a
// zero row.
bool is_positive_semidefinite(QMatrix a);

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p);

}  // namespace cl
