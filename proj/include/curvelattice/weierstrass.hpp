#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "curvelattice/mpoly.hpp"
#include "curvelattice/upoly.hpp"

namespace cl {

inline constexpr int kInfiniteValuation = INT_MAX;

// y^2 = x^3 + A x + B over P^1 with A, B sections of O(4k), O(6k); A and B
// are polynomials in the single variable t (the affine chart of the base).
struct WeierstrassData {
  MPoly A, B;
  int k = 1;

  // UsageError on bad shape or degrees, Degenerate when 4A^3 + 27B^2 = 0.
  static WeierstrassData make(MPoly A, MPoly B, int k);
};

// y^2 = x^3 + g restricted to the line P0 + t*Q0, with k = deg g / 6.
WeierstrassData from_curve(const MPoly& g, const std::array<long, 3>& P0, const std::array<long, 3>& Q0);
// Same with a line drawn from mt19937_64(seed), avoiding lines where the
// restriction drops degree.
WeierstrassData from_curve(const MPoly& g, std::uint64_t seed);

MPoly discriminant(const WeierstrassData& w);  // 4A^3 + 27B^2

// Valuations at one place. Finite places are grouped: `factor` is a
// squarefree polynomial all of whose roots carry the same valuations.
struct Place {
  std::string factor;  // polynomial in t, or "infinity"
  int degree = 1;      // number of geometric places in the group
  int vA = 0, vB = 0, vDisc = 0;  // kInfiniteValuation for A = 0 or B = 0
};

// Places where the discriminant vanishes, then infinity.
std::vector<Place> discriminant_places(const WeierstrassData& w);

bool is_minimal(const WeierstrassData& w);

struct FiberReport {
  bool irreducible = true;
  std::vector<Place> places;
  std::string failing_place;            // first place with a reducible fiber
  std::vector<std::string> deviations;  // convention resolutions that were needed
};

// v(Disc) <= 1, or v(Disc) = 2 with v(A) >= 1 (type II). The literal clause
// asks v(A) = 1; v(A) > 1, including A = 0, is accepted and recorded.
// NotMinimal if the model is not minimal.
FiberReport fiber_report(const WeierstrassData& w);
bool no_reducible_fibers(const WeierstrassData& w);

// <S,S> = 2 chi + 2 (S.Z) and <S,S'> = chi + (S.Z) + (S'.Z) - (S.S').
int height_from_intersections(int chi, int sz);
int pairing_from_intersections(int chi, int sz, int spz, int ssp);

}  // namespace cl
