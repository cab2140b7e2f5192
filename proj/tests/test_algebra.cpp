#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvelattice/errors.hpp"
#include "curvelattice/linalg.hpp"
#include "curvelattice/modular.hpp"
#include "curvelattice/parse.hpp"
#include "curvelattice/polyalg.hpp"
#include "curvelattice/roots.hpp"
#include "support.hpp"

using namespace cl;

static const std::vector<std::string> XYZ{"x", "y", "z"};

static MPoly P(const std::string& s, const std::vector<std::string>& v = XYZ) { return parse_poly(s, v); }

TEST_CASE("rational helpers") {
  CHECK(to_string(parse_rat("-6/4")) == "-3/2");
  CHECK(parse_rat("0/5") == 0);
  CHECK(parse_rat("0/5").get_den() == 1);
  CHECK(squarefree_class(Rat(9, 2)) == 2);
  CHECK(squarefree_class(Rat(-12)) == -3);
  CHECK(round_rat(Rat(-1, 2)) == 0);
  CHECK(round_rat(Rat(5, 3)) == 2);
  auto f = factor(Integer("1000000016000000063"));  // 1000000007 * 1000000009
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == 1000000007);
}

TEST_CASE("CycloNum arithmetic") {
  CycloNum w = CycloNum::omega();
  CHECK(w * w == CycloNum(Rat(-1), Rat(-1)));
  CHECK(w * w * w == CycloNum(1));
  CHECK(w * w + w + CycloNum(1) == CycloNum());
  CHECK(w.conj() == w * w);
  CHECK(CycloNum(Rat(2), Rat(1)).norm() == 3);
  CHECK(CycloNum(Rat(1), Rat(-1)).str() == "1 - w");
  CHECK(CycloNum(Rat(0), Rat(-3, 2)).str() == "-3/2*w");
}

TEST_CASE("CycloNum field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    CycloNum a = cltest::rand_cyclo(rng, -9, 9), b = cltest::rand_cyclo(rng, -9, 9),
             c = cltest::rand_cyclo(rng, -9, 9);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycloNum(1));
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("parse_poly examples") {
  MPoly s = P("x^6 - 2*x^3*y^3 - 2*x^3*z^3 + y^6 - 2*y^3*z^3 + z^6");
  CHECK(s.size() == 6);
  CHECK(s.total_degree() == 6);
  MPoly z = P("0");
  CHECK(z.is_zero());
  CHECK(z.total_degree() == kZeroDegree);
  MPoly m = P("(1/2)*w*x + (1/2)*w*x");
  REQUIRE(m.size() == 1);
  CHECK(m.leading_coeff() == CycloNum::omega());
  CHECK(m.str() == "w*x");
  CHECK(P("1/2*x").leading_coeff() == CycloNum(Rat(1, 2)));
  CHECK(P("-(x+y)^2").str() == "-x^2 - 2*x*y - y^2");
}

TEST_CASE("parse_poly errors carry positions") {
  try {
    P("x + q");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P("x + * y"), ParseError);
  CHECK_THROWS_AS(P("(x + y"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("3/0"), ParseError);
  CHECK_THROWS_AS(parse_poly("x", {"w"}), UsageError);
}

TEST_CASE("render then parse is the identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    MPoly p = cltest::rand_poly(XYZ, 4, rng);
    p *= CycloNum(ratio(1 + i % 3, 1 + i % 5));
    CHECK(P(p.str()) == p);
  }
}

TEST_CASE("weighted degree") {
  MPoly f = P("x^2 + y^3", {"x", "y"});
  CHECK(f.weighted_degree({3, 2}) == 6);
  CHECK(f.is_weighted_homogeneous({3, 2}));
  CHECK(f.weighted_degree({1, 1}) == 3);
  CHECK_FALSE(f.is_weighted_homogeneous({1, 1}));
  MPoly g = P("x^4 + y^2", {"x", "y"});
  CHECK(g.weighted_degree({1, 2}) == 4);
  CHECK(g.is_weighted_homogeneous({1, 2}));
  CHECK(P("0", {"x", "y"}).weighted_degree({1, 1}) == kZeroDegree);
}

TEST_CASE("multivariate gcd examples") {
  MPoly a = P("(x+y)^2*(x-z)"), b = P("(x+y)*z^2");
  CHECK(gcd(a, b) == P("x+y"));
  CHECK(gcd_fast(a, b) == P("x+y"));
  MPoly p = P("2*x*y + 4*z^2");
  CHECK(gcd(p, P("0")) == P("x*y + 2*z^2"));
  CHECK(gcd(P("0"), P("0")).is_zero());
}

TEST_CASE("gcd of generic cubics is 1, certified by a nonzero resultant") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    MPoly a = cltest::rand_form(XYZ, 3, rng), b = cltest::rand_form(XYZ, 3, rng);
    CHECK(gcd(a, b).is_constant());
    CHECK_FALSE(resultant(a, b, 0).is_zero());
  }
}

TEST_CASE("gcd divides both inputs and matches the fast path") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 12; ++i) {
    MPoly c = cltest::rand_form(XYZ, 1 + i % 3, rng);
    MPoly a = c * cltest::rand_form(XYZ, 2, rng), b = c * cltest::rand_form(XYZ, 1 + i % 2, rng);
    MPoly g = gcd(a, b);
    CHECK(a.divide_exact(g).has_value());
    CHECK(b.divide_exact(g).has_value());
    CHECK(g.total_degree() >= c.total_degree());
    CHECK(gcd_fast(a, b) == g);
  }
  for (int i = 0; i < 8; ++i) {
    std::vector<std::string> xy{"x", "y"};
    MPoly c = cltest::rand_poly(xy, 2, rng);
    MPoly a = c * cltest::rand_poly(xy, 3, rng), b = c * c * cltest::rand_poly(xy, 1, rng);
    CHECK(gcd_fast(a, b) == gcd(a, b));
  }
}

TEST_CASE("resultant examples and sign convention") {
  std::vector<std::string> xy{"x", "y"}, xt{"x", "t"};
  CHECK(resultant(P("x-y", xy), P("x+y", xy), 0) == P("2*y", xy));
  MPoly p = P("x^2 - y + 3*x*y", xy);
  CHECK(resultant(p, p, 0).is_zero());
  CHECK(resultant(P("x^2-t", xt), P("x-3", xt), 0) == P("9-t", xt));
}

TEST_CASE("univariate resultant chain agrees with the Sylvester determinant") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    UPoly a = cltest::rand_upoly(1 + i % 5, rng), b = cltest::rand_upoly(1 + (i / 5) % 4, rng);
    int m = a.degree() + i % 2, n = b.degree() + (i / 2) % 2;
    CHECK(resultant_formal(a, b, m, n) == resultant_sylvester(a, b, m, n));
  }
}

TEST_CASE("resultant vanishes iff gcd has positive degree") {
  std::mt19937_64 rng(13);
  std::vector<std::string> xy{"x", "y"};
  for (int i = 0; i < 10; ++i) {
    MPoly a = cltest::rand_poly(xy, 2, rng), b = cltest::rand_poly(xy, 2, rng);
    if (i % 2) {
      MPoly c = cltest::rand_poly(xy, 1, rng);
      if (c.degree_in(0) == 0) c += MPoly::variable(xy, 0);
      a = a * c;
      b = b * c;
    }
    if (a.degree_in(0) <= 0 || b.degree_in(0) <= 0) continue;
    bool vanish = resultant(a, b, 0).is_zero();
    CHECK(vanish == (gcd(a, b).degree_in(0) > 0));
  }
}

TEST_CASE("poly_sqrt") {
  MPoly s = P("x^2 + w*y*z");
  auto r = poly_sqrt(s * s);
  REQUIRE(r);
  CHECK(*r == s);
  CHECK_FALSE(poly_sqrt(P("x^2*y")));
  CHECK_FALSE(poly_sqrt(P("x^2 + y^2")));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    MPoly c = cltest::rand_form(XYZ, 3, rng);
    auto q = poly_sqrt(c * c);
    REQUIRE(q);
    CHECK((*q == c || *q == -c));
    CHECK(q->leading_coeff().in_positive_half_plane());
  }
}

TEST_CASE("univariate modular gcd matches Euclid") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 15; ++i) {
    UPoly c = cltest::rand_upoly(3 + i % 7, rng, i % 2);
    UPoly a = c * cltest::rand_upoly(6 + i % 5, rng, i % 2), b = c * cltest::rand_upoly(5 + i % 4, rng);
    CHECK(gcd(a, b) == gcd_euclid(a, b));
  }
}

TEST_CASE("modular inverse matches Euclid") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 12; ++i) {
    UPoly m = cltest::rand_upoly(5 + i, rng, i % 2), a = cltest::rand_upoly(3 + i % 6, rng, i % 3 == 0);
    if (gcd_euclid(a, m).degree() > 0) continue;
    UPoly v = invmod(a, m);
    CHECK(v == invmod_euclid(a, m));
    CHECK(mulmod(a, v, m) == UPoly(CycloNum(1)));
  }
  UPoly m = UPoly::x() * UPoly::x() * UPoly::x() * UPoly::x() * UPoly::x() * UPoly::x() - UPoly(CycloNum(1));
  CHECK_THROWS(invmod(UPoly::x() - UPoly(CycloNum(1)), m));
}

TEST_CASE("squarefree decomposition") {
  UPoly t = UPoly::x();
  UPoly a = t - UPoly(CycloNum(1)), b = t * t + t + UPoly(CycloNum(1));
  auto d = squarefree_decomposition(a * b.pow(3));
  REQUIRE(d.size() == 2);
  CHECK(d[0].first == a);
  CHECK(d[0].second == 1);
  CHECK(d[1].first == b);
  CHECK(d[1].second == 3);
}

TEST_CASE("roots in Q(w) are exact") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    std::vector<CycloNum> rs;
    UPoly p(CycloNum(Rat(3 + i % 4)));
    for (int k = 0; k < 1 + i % 5; ++k) {
      CycloNum r(ratio((int)(rng() % 41) - 20, (int)(1 + rng() % 7)), ratio((int)(rng() % 41) - 20, (int)(1 + rng() % 5)));
      rs.push_back(r);
      p = p * UPoly(std::vector<CycloNum>{-r, CycloNum(1)});
    }
    p = p * (UPoly::x().pow(2) + UPoly(CycloNum(2)));  // no roots in Q(w)
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    CHECK(roots_in_field(p) == rs);
  }
  auto s = sqrt_in_field(CycloNum(-3));
  REQUIRE(s);  // sqrt(-3) = 1 + 2w
  CHECK(*s * *s == CycloNum(-3));
  CHECK_FALSE(sqrt_in_field(CycloNum(2)));
  CHECK(cube_roots_in_field(CycloNum(8)).size() == 3);
  CHECK(cube_roots_in_field(CycloNum(2)).empty());
}

TEST_CASE("subresultant coefficients match a direct elimination") {
  std::vector<std::string> xy{"x", "y"};
  // fx and fy share exactly the root x = y at every y for these inputs.
  MPoly a = P("(x - y)*(x + 2*y + 1)", xy), b = P("(x - y)*(x - 3)", xy);
  auto s = subresultant_coeffs(a, b, 0, 1, 1);
  // S1 = s1 x + s0 must vanish at x = y.
  UPoly s1 = s[1], s0 = s[0];
  UPoly y = UPoly::x();
  CHECK((s1 * y + s0).is_zero());
  CHECK_FALSE(s1.is_zero());
}

TEST_CASE("linear algebra") {
  CMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  CHECK(det(m) == CycloNum(-3));
  CMatrix s{{1, 2, 3}, {2, 4, 6}};
  CHECK(rank(s) == 1);
  auto ns = nullspace(s, 3);
  CHECK(ns.size() == 2);
  CHECK(rank_mod({{1, 2}, {2, 4}}, 7) == 1);
}
