#include "curvelattice/weierstrass.hpp"

#include <algorithm>
#include <random>

#include "curvelattice/errors.hpp"

namespace cl {

namespace {

const std::vector<std::string> kT{"t"};

UPoly as_upoly(const MPoly& p) { return UPoly::from_mpoly(p, 0); }

int valuation(const UPoly& p, const UPoly& factor) {
  if (p.is_zero()) return kInfiniteValuation;
  int v = 0;
  UPoly q = p;
  for (;;) {
    auto [quo, rem] = divmod(q, factor);
    if (!rem.is_zero()) return v;
    q = std::move(quo);
    ++v;
  }
}

int deficit(const UPoly& p, int bound) { return p.is_zero() ? kInfiniteValuation : bound - p.degree(); }

// Pairwise coprime squarefree polynomials whose products give every input's
// squarefree factors; each root then has the same valuations within a part.
std::vector<UPoly> coprime_basis(std::vector<UPoly> items) {
  std::vector<UPoly> basis;
  while (!items.empty()) {
    UPoly a = items.back().monic();
    items.pop_back();
    if (a.degree() <= 0) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      UPoly g = gcd(a, basis[i]);
      if (g.degree() <= 0) continue;
      UPoly b = basis[i];
      basis.erase(basis.begin() + static_cast<long>(i));
      items.push_back(g);
      items.push_back(div_exact(a, g));
      items.push_back(div_exact(b, g));
      split = true;
      break;
    }
    if (!split) basis.push_back(a);
  }
  std::sort(basis.begin(), basis.end(), [](const UPoly& x, const UPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.str() < y.str();
  });
  return basis;
}

}  // namespace

WeierstrassData WeierstrassData::make(MPoly A, MPoly B, int k) {
  if (k < 1) throw UsageError("k must be positive");
  for (const MPoly* p : {&A, &B})
    if (p->nvars() != 1) throw UsageError("A and B must be polynomials in one variable");
  A = A.rebase(kT);
  B = B.rebase(kT);
  if (A.total_degree() > 4 * k) throw UsageError("deg A exceeds 4k");
  if (B.total_degree() > 6 * k) throw UsageError("deg B exceeds 6k");
  WeierstrassData w{std::move(A), std::move(B), k};
  if (discriminant(w).is_zero()) throw Degenerate("4A^3 + 27B^2 vanishes identically");
  return w;
}

WeierstrassData from_curve(const MPoly& g, const std::array<long, 3>& P0, const std::array<long, 3>& Q0) {
  if (g.nvars() != 3 || !g.is_homogeneous() || g.total_degree() % 6 != 0 || g.total_degree() == 0)
    throw UsageError("expected a ternary form of degree 6k");
  std::vector<MPoly> img;
  for (int i = 0; i < 3; ++i)
    img.push_back(MPoly::constant(kT, CycloNum(P0[i])) + MPoly::variable(kT, 0) * CycloNum(Q0[i]));
  return WeierstrassData::make(MPoly(kT), g.compose(img), g.total_degree() / 6);
}

WeierstrassData from_curve(const MPoly& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::array<long, 3> P0{d(rng), d(rng), d(rng)}, Q0{d(rng), d(rng), d(rng)};
    if (g.eval({CycloNum(Q0[0]), CycloNum(Q0[1]), CycloNum(Q0[2])}).is_zero()) continue;
    long cx = P0[1] * Q0[2] - P0[2] * Q0[1], cy = P0[2] * Q0[0] - P0[0] * Q0[2], cz = P0[0] * Q0[1] - P0[1] * Q0[0];
    if (cx == 0 && cy == 0 && cz == 0) continue;  // not a line
    return from_curve(g, P0, Q0);
  }
  throw Degenerate("no admissible line found");
}

MPoly discriminant(const WeierstrassData& w) {
  return w.A.pow(3) * CycloNum(4) + w.B * w.B * CycloNum(27);
}

std::vector<Place> discriminant_places(const WeierstrassData& w) {
  UPoly A = as_upoly(w.A), B = as_upoly(w.B), D = as_upoly(discriminant(w));
  std::vector<UPoly> parts;
  for (const UPoly* p : {&A, &B, &D})
    if (!p->is_zero())
      for (auto& [f, m] : squarefree_decomposition(*p)) parts.push_back(f);
  std::vector<Place> out;
  for (auto& f : coprime_basis(parts)) {
    int vd = valuation(D, f);
    if (vd == 0) continue;
    out.push_back({f.str(), f.degree(), valuation(A, f), valuation(B, f), vd});
  }
  out.push_back({"infinity", 1, deficit(A, 4 * w.k), deficit(B, 6 * w.k), deficit(D, 12 * w.k)});
  return out;
}

bool is_minimal(const WeierstrassData& w) {
  for (auto& p : discriminant_places(w))
    if (p.vA >= 4 && p.vB >= 6) return false;
  return true;
}

FiberReport fiber_report(const WeierstrassData& w) {
  FiberReport r;
  r.places = discriminant_places(w);
  for (auto& p : r.places)
    if (p.vA >= 4 && p.vB >= 6) throw NotMinimal("v(A) >= 4 and v(B) >= 6 at " + p.factor);
  bool noted = false;
  for (auto& p : r.places) {
    bool ok = p.vDisc <= 1 || (p.vDisc == 2 && p.vA >= 1);
    if (ok && p.vDisc == 2 && p.vA != 1 && !noted) {
      r.deviations.push_back("v(Disc) = 2 with v(A) > 1 (type II) read as an irreducible fiber");
      noted = true;
    }
    if (!ok && r.irreducible) {
      r.irreducible = false;
      r.failing_place = p.factor;
    }
  }
  return r;
}

bool no_reducible_fibers(const WeierstrassData& w) { return fiber_report(w).irreducible; }

int height_from_intersections(int chi, int sz) {
  if (chi < 1 || sz < 0) throw UsageError("need chi >= 1 and (S.Z) >= 0");
  return 2 * chi + 2 * sz;
}

int pairing_from_intersections(int chi, int sz, int spz, int ssp) {
  if (chi < 1 || sz < 0 || spz < 0) throw UsageError("need chi >= 1 and nonnegative intersections");
  return chi + sz + spz - ssp;
}

}  // namespace cl
