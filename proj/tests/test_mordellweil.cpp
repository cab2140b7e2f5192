#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvelattice/errors.hpp"
#include "curvelattice/mordellweil.hpp"
#include "curvelattice/parse.hpp"

using namespace cl;

static const std::vector<std::string> XYZ{"x", "y", "z"}, XY{"x", "y"};
static MPoly P(const std::string& s) { return parse_poly(s, XYZ); }
static WeightedPoly F(const std::string& s, std::array<int, 2> w) { return WeightedPoly::make(parse_poly(s, XY), w); }
static const char* kNineCusp = "x^6 - 2*x^3*y^3 - 2*x^3*z^3 + y^6 - 2*y^3*z^3 + z^6";
static const char* kSixOnConic = "(y^2 - x*z)^3 + ((x - z)*(x - 4*z)*(x - 9*z))^2";
static const char* kThreeCuspQuartic = "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)";

static const CurveProfile& nine_cusp() {
  static CurveProfile p = CurveProfile::detect(P(kNineCusp));
  return p;
}

TEST_CASE("ranks from the cusp defect") {
  auto r = mw_rank(F("x^2 + y^3", {3, 2}), nine_cusp());
  CHECK(r.applicable);
  CHECK(r.rank == 6);
  CHECK(r.rank_from_defects == 6);
  CHECK(r.formulas_agree);
  CHECK(r.contributions == std::map<Rat, int>{{Rat(1, 6), 3}, {Rat(5, 6), 3}});
  CHECK(r.e == 6);
  CHECK(r.order_at_one == 0);
  // Scaled weights give the same answer.
  CHECK(mw_rank(F("x^2 + y^3", {6, 4}), nine_cusp()).rank == 6);

  auto six = mw_rank(F("x^2 + y^3", {3, 2}), CurveProfile::detect(P(kSixOnConic)));
  CHECK(six.rank == 2);
  CHECK(six.formulas_agree);
}

TEST_CASE("applicability") {
  auto smooth7 = CurveProfile::detect(P("x^7 + y^7 + z^7"));
  auto a = applicability(F("x^2 + y^3", {3, 2}), smooth7);
  CHECK_FALSE(a.applicable);
  CHECK(a.reason.find("does not divide") != std::string::npos);
  CHECK_THROWS_AS(mw_rank(F("x^2 + y^3", {3, 2}), smooth7), NotApplicable);

  // A declared condition at 1/6 creates the obstruction nu(1/6) * delta_{1/6}.
  auto pts = nine_cusp().points;
  pts[0].kind = PointKind::Custom;
  pts[0].custom = {{Rat(1, 6), {{0, 0, 0}}}};
  auto prof = CurveProfile::with_points(P(kNineCusp), pts);
  auto b = applicability(F("x^2 + y^3", {3, 2}), prof);
  CHECK_FALSE(b.applicable);
  REQUIRE(b.obstruction.count(Rat(1, 6)) == 1);
  CHECK(b.obstruction.at(Rat(1, 6)) > 0);
  CHECK(applicability(F("x^2 + y^3", {3, 2}), nine_cusp()).applicable);
}

TEST_CASE("rank-zero oracles") {
  auto r3 = mw_rank(F("x^3 + y^3", {1, 1}), nine_cusp());
  CHECK(r3.applicable);
  CHECK(r3.rank == 0);
  CHECK(r3.formulas_agree);

  auto quartic = CurveProfile::detect(P(kThreeCuspQuartic));
  CHECK(quartic.cusp_count() == 3);
  auto r4 = mw_rank(F("x^4 + y^2", {1, 2}), quartic);
  CHECK(r4.rank == 0);
  CHECK(r4.formulas_agree);
}

TEST_CASE("hyperelliptic rank") {
  auto six = CurveProfile::detect(P(kSixOnConic));
  auto h3 = mw_rank_hyperelliptic(3, six);
  CHECK(h3.rank == 2);
  CHECK(h3.formulas_agree);
  CHECK(mw_rank_hyperelliptic(2, six).rank == 0);
  auto h6 = mw_rank_hyperelliptic(6, nine_cusp());
  CHECK(h6.rank == 6);
  CHECK(h6.contributions == std::map<Rat, int>{{Rat(5, 6), 6}});
  CHECK(h6.formulas_agree);
  CHECK_THROWS_AS(mw_rank_hyperelliptic(4, nine_cusp()), NotApplicable);
  CHECK_THROWS_AS(mw_rank_hyperelliptic(3, CurveProfile::detect(P("x^3 + y^3 + z^3"))), DegreeParity);
  CHECK_THROWS_AS(mw_rank_hyperelliptic(1, six), UsageError);
}

TEST_CASE("rank properties on sub-profiles of the nine-cusp sextic") {
  std::mt19937_64 rng(53);
  const auto& all = nine_cusp().points;
  for (int t = 0; t < 25; ++t) {
    std::vector<ClassifiedPoint> sub;
    for (auto& p : all)
      if (rng() % 2) sub.push_back(p);
    auto prof = CurveProfile::with_points(P(kNineCusp), sub);
    auto r = mw_rank(F("x^2 + y^3", {3, 2}), prof);
    CHECK(r.formulas_agree);
    CHECK(r.rank >= 0);
    CHECK(r.rank % 2 == 0);
    CHECK(r.rank == 2 * defect(prof, Rat(5, 6)).delta);
    // Adding the remaining cusps never lowers the rank.
    CHECK(r.rank <= 6);
    CHECK(mw_rank_hyperelliptic(3, prof).rank == r.rank);
  }
}
