#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "curvelattice/adjunction.hpp"
#include "curvelattice/errors.hpp"
#include "curvelattice/parse.hpp"
#include "support.hpp"

using namespace cl;

static const std::vector<std::string> XYZ{"x", "y", "z"};
static MPoly P(const std::string& s) { return parse_poly(s, XYZ); }
static const char* kNineCusp = "x^6 - 2*x^3*y^3 - 2*x^3*z^3 + y^6 - 2*y^3*z^3 + z^6";
// Conic y^2 = xz meets the three lines x = z, 4z, 9z in six rational points.
static const char* kSixOnConic = "(y^2 - x*z)^3 + ((x - z)*(x - 4*z)*(x - 9*z))^2";

static ProjPoint pt(const std::string& a, const std::string& b, const std::string& c) {
  return ProjPoint(parse_cyclo(a), parse_cyclo(b), parse_cyclo(c));
}

static const CurveProfile& nine_cusp() {
  static CurveProfile p = CurveProfile::detect(P(kNineCusp));
  return p;
}

TEST_CASE("projective points are normalized") {
  CHECK(pt("2", "4", "2") == pt("1", "2", "1"));
  CHECK(pt("w", "1", "0").c[1] == CycloNum(1));
  CHECK_THROWS_AS(pt("0", "0", "0"), InvalidPoint);
}

TEST_CASE("smooth conic and nodal cubic") {
  CHECK(singular_points(P("x^2 + y*z")).empty());
  auto pts = singular_points(P("y^2*z - x^2*(x + z)"));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].point == pt("0", "0", "1"));
  CHECK(pts[0].kind == PointKind::Node);
}

TEST_CASE("nine-cusp sextic") {
  const auto& prof = nine_cusp();
  CHECK(prof.clusters.empty());
  REQUIRE(prof.points.size() == 9);
  CHECK(prof.cusp_count() == 9);
  for (auto& p : prof.points) CHECK(p.kind == PointKind::Cusp);
  for (auto want : {pt("0", "w", "1"), pt("0", "1", "1"), pt("1", "0", "1"), pt("w", "0", "1"),
                    pt("w^2", "1", "0"), pt("w", "1", "0")}) {
    bool found = std::any_of(prof.points.begin(), prof.points.end(),
                             [&](const ClassifiedPoint& c) { return c.point == want; });
    CHECK_MESSAGE(found, want.str());
  }
}

TEST_CASE("conditions at alpha") {
  const auto& prof = nine_cusp();
  CHECK(conditions_at(Rat(5, 6), prof.points).size() == 9);
  CHECK(conditions_at(Rat(1, 6), prof.points).empty());
  std::vector<ClassifiedPoint> nodes{{pt("0", "0", "1"), PointKind::Node, {}}};
  CHECK(conditions_at(Rat(1, 2), nodes).empty());
  std::vector<ClassifiedPoint> un{{pt("0", "0", "1"), PointKind::Unclassified, {}}};
  CHECK_THROWS_AS(conditions_at(Rat(1, 2), un), UnclassifiedPoint);
}

TEST_CASE("defects of the nine-cusp sextic") {
  DefectRow r = defect(nine_cusp(), Rat(5, 6));
  CHECK(r.l == 9);
  CHECK(r.h == 6);
  CHECK(r.delta == 3);
  CHECK(r.rank_method == "exact");
  DefectRow e = defect(nine_cusp(), Rat(1, 2));
  CHECK(e.l == 0);
  CHECK(e.h == 0);
  CHECK(e.delta == 0);
  CHECK_THROWS_AS(defect(nine_cusp(), Rat(1, 5)), UsageError);
}

TEST_CASE("six cusps on a conic") {
  auto prof = CurveProfile::detect(P(kSixOnConic));
  CHECK(prof.cusp_count() == 6);
  CHECK(prof.node_count() == 0);
  DefectRow r = defect(prof, Rat(5, 6));
  CHECK(r.l == 6);
  CHECK(r.h == 5);
  CHECK(r.delta == 1);
  auto a = alexander(prof);
  CHECK(a.str() == "t^2 - t + 1");
  CHECK(ord_at(a, Rat(5, 6)) == 1);
  CHECK(ord_at(a, Rat(1, 6)) == 1);
}

TEST_CASE("Alexander polynomial of the nine-cusp sextic") {
  auto a = alexander(nine_cusp());
  CHECK(a.str() == "(t^2 - t + 1)^3");
  CHECK(a.orders == std::map<Rat, int>{{Rat(1, 6), 3}, {Rat(5, 6), 3}});
  CHECK(ord_at(a, Rat(5, 6)) == 3);
  CHECK(ord_at(a, Rat(1, 2)) == 0);
  auto smooth = alexander(CurveProfile::detect(P("x^3 + y^3 + z^3")));
  CHECK(smooth.str() == "1");
  CHECK(ord_at(smooth, Rat(1, 3)) == 0);
}

TEST_CASE("component count contributes at t = 1") {
  auto prof = CurveProfile::detect(P("x*y*z"), 3, true);
  CHECK(prof.node_count() == 3);
  auto a = alexander(prof);
  CHECK(ord_at(a, Rat(0)) == 2);
  CHECK(a.str() == "(t - 1)^2");
}

TEST_CASE("tacnodes are left unclassified") {
  auto pts = singular_points(P("y^2*z^2 - x^4"));
  REQUIRE(pts.size() == 2);
  for (auto& p : pts) CHECK(p.kind == PointKind::Unclassified);
  auto prof = CurveProfile::detect(P("y^2*z^2 - x^4"));
  CHECK_THROWS_AS(alexander(prof), UnclassifiedPoint);
}

TEST_CASE("points outside Q(w) form a cluster") {
  MPoly g = P("(x^2 + y^2 - 2*z^2)*y");
  CHECK_THROWS_AS(singular_points(g), IncompleteLocus);
  auto loc = singular_locus(g);
  CHECK(loc.points.empty());
  REQUIRE(loc.clusters.size() == 1);
  CHECK(loc.clusters[0].size() == 2);
  CHECK(loc.clusters[0].kind == PointKind::Node);
}

TEST_CASE("explicit point lists are checked") {
  MPoly g = P("y^2*z - x^2*(x + z)");
  auto ok = CurveProfile::with_points(g, {{pt("0", "0", "1"), PointKind::Node, {}}});
  CHECK(ok.node_count() == 1);
  CHECK_THROWS_AS(CurveProfile::with_points(g, {{pt("1", "0", "0"), PointKind::Node, {}}}), InvalidPoint);
  CHECK_THROWS_AS(CurveProfile::with_points(g, {{pt("0", "0", "1"), PointKind::Cusp, {}}}), InvalidPoint);
}

TEST_CASE("custom conditions") {
  MPoly g = P(kNineCusp);
  std::vector<ClassifiedPoint> pts;
  for (auto& p : nine_cusp().points) pts.push_back({p.point, PointKind::Custom, {{Rat(2, 3), {{0, 0, 0}}}}});
  auto prof = CurveProfile::with_points(g, pts);
  DefectRow r = defect(prof, Rat(2, 3));  // nine points against the three linear forms
  CHECK(r.form_degree == 1);
  CHECK(r.l == 9);
  CHECK(r.h == 3);
  CHECK(r.delta == 6);
  std::vector<ClassifiedPoint> one{{pts[0].point, PointKind::Custom, {{Rat(2, 3), {{1, 0, 0}, {0, 1, 0}}}}}};
  CHECK(defect(CurveProfile::with_points(g, one), Rat(2, 3)).h == 2);  // d/dx, d/dy of linear forms
  CHECK(defect(prof, Rat(5, 6)).l == 0);
}

TEST_CASE("multimodular cluster rank agrees with exact rank") {
  // Repackage the nine rational cusps as one cluster over y = 0..8.
  const auto& prof = nine_cusp();
  std::vector<CycloNum> ys;
  std::array<std::vector<CycloNum>, 3> cs;
  UPoly T(CycloNum(1));
  for (std::size_t i = 0; i < prof.points.size(); ++i) {
    ys.push_back(CycloNum(long(i)));
    T = T * UPoly(std::vector<CycloNum>{CycloNum(-long(i)), CycloNum(1)});
    for (int k = 0; k < 3; ++k) cs[k].push_back(prof.points[i].point.c[k]);
  }
  PointCluster c;
  c.minpoly = T;
  for (int k = 0; k < 3; ++k) c.coords[k] = interpolate(ys, cs[k]);
  c.kind = PointKind::Cusp;
  CurveProfile q = prof;
  q.points.clear();
  q.clusters = {c};
  DefectRow r = defect(q, Rat(5, 6));
  CHECK(r.rank_method == "multimodular");
  CHECK(r.l == 9);
  CHECK(r.h == 6);
  CHECK(r.delta == 3);
}

TEST_CASE("generic torus sextic: cusps form a cluster with defect one") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 3; ++i) {
    MPoly q = cltest::rand_form(XYZ, 2, rng, false), c = cltest::rand_form(XYZ, 3, rng, false);
    auto prof = CurveProfile::detect(q.pow(3) + c * c);
    CHECK(prof.cusp_count() == 6);
    CHECK(prof.node_count() == 0);
    DefectRow r = defect(prof, Rat(5, 6));
    CHECK(r.delta == 1);
    CHECK(alexander(prof).str() == "t^2 - t + 1");
  }
}

TEST_CASE("defect invariants and Hilbert-function monotonicity") {
  std::mt19937_64 rng(43);
  const auto& prof = nine_cusp();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ClassifiedPoint> sub;
    for (auto& p : prof.points)
      if (rng() % 2) sub.push_back(p);
    auto fns = conditions_at(Rat(5, 6), sub);
    int prev = 0;
    for (int k = 0; k <= 5; ++k) {
      int h = conditions_rank(fns, k);
      CHECK(h >= prev);
      CHECK(h <= (int)fns.size());
      prev = h;
    }
    auto sp = CurveProfile::with_points(P(kNineCusp), sub);
    auto a = alexander(sp);
    for (auto& [alpha, row] : a.defects) {
      CHECK(row.delta >= 0);
      CHECK(row.delta <= row.l);
    }
    for (auto& [alpha, o] : a.orders) {
      if (alpha == 0) continue;
      CHECK(ord_at(a, Rat(1 - alpha)) == o);
      CHECK((alpha == Rat(1, 6) || alpha == Rat(5, 6)));
    }
  }
}
