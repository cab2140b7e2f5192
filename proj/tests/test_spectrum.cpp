#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvelattice/errors.hpp"
#include "curvelattice/parse.hpp"
#include "curvelattice/spectrum.hpp"

using namespace cl;

static const std::vector<std::string> XY{"x", "y"};

static WeightedPoly W(const std::string& s, int w1, int w2) {
  return WeightedPoly::make(parse_poly(s, XY), {w1, w2});
}

// Random weighted-homogeneous f; nullopt when the draw is not isolated.
static std::optional<WeightedPoly> random_qh(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> wd(1, 5), cd(-4, 4), dd(2, 6);
  int w1 = wd(rng), w2 = wd(rng);
  int D = std::lcm(w1, w2) * dd(rng) / (1 + rng() % 2);
  MPoly f(XY);
  for (int a = 0; a * w1 <= D; ++a)
    if ((D - a * w1) % w2 == 0 && rng() % 3 != 0)
      f.add_term({a, (D - a * w1) / w2}, CycloNum(Rat(cd(rng)), Rat(cd(rng) * (int)(rng() % 2))));
  try {
    return WeightedPoly::make(f, {w1, w2});
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

TEST_CASE("milnor algebra of x^2 + y^3") {
  auto f = W("x^2 + y^3", 3, 2);
  CHECK(f.wdeg == 6);
  CHECK(f.milnor_number() == 2);
  CHECK(milnor_graded_dims(f) == std::map<int, int>{{0, 1}, {2, 1}});
}

TEST_CASE("milnor algebra of x^2 + y^e") {
  for (int e = 2; e <= 9; ++e) {
    auto f = W("x^2 + y^" + std::to_string(e), e, 2);
    std::map<int, int> want;
    for (int i = 1; i <= e - 1; ++i) want[2 * i - 2] = 1;
    CHECK(milnor_graded_dims(f) == want);
  }
}

TEST_CASE("milnor algebra of x^3 + y^3") {
  auto f = W("x^3 + y^3", 1, 1);
  CHECK(milnor_graded_dims(f) == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("spectrum examples") {
  CHECK(spectrum(W("x^2 + y^3", 3, 2)) == Spectrum{{Rat(-1, 6), 1}, {Rat(1, 6), 1}});
  for (int e = 3; e <= 10; ++e) {
    Spectrum want;
    for (int i = 1; i <= e - 1; ++i) want[ratio(i, e) - Rat(1, 2)] = 1;
    CHECK(spectrum(W("x^2 + y^" + std::to_string(e), e, 2)) == want);
  }
  CHECK(spectrum(W("x^3 + y^3", 1, 1)) == Spectrum{{Rat(-1, 3), 1}, {Rat(0), 2}, {Rat(1, 3), 1}});
}

TEST_CASE("spectrum does not depend on scaling the weights") {
  CHECK(spectrum(W("x^2 + y^3", 3, 2)) == spectrum(W("x^2 + y^3", 6, 4)));
  CHECK(spectrum(W("x^4 + y^2", 1, 2)) == spectrum(W("x^4 + y^2", 3, 6)));
}

TEST_CASE("eigenspace dimensions") {
  auto cusp = W("x^2 + y^3", 3, 2);
  CHECK(eigen_dim(cusp, Rat(1, 6)) == 1);
  CHECK(eigen_dim(cusp, Rat(5, 6)) == 1);
  CHECK(eigen_dim(cusp, Rat(1, 2)) == 0);
  CHECK(eigen_dim(W("x^3 + y^3", 1, 1), Rat(0)) == 2);
}

TEST_CASE("branch counts") {
  CHECK(branch_count(W("x^2 + y^3", 3, 2)) == 1);
  CHECK(branch_count(W("x^3 + y^3", 1, 1)) == 3);
  CHECK(branch_count(W("x^4 + y^2", 1, 2)) == 2);
  CHECK(branch_count(W("x^2*y + y^4", 3, 2)) == 2);
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(W("x^2 + y^3", 1, 1), UsageError);
  CHECK_THROWS_AS(W("x^2", 1, 1), NotIsolated);
  CHECK_THROWS_AS(W("x^2*y^2", 1, 1), NotIsolated);
  CHECK_THROWS_AS(W("(x + y)^2*x", 1, 1), NotIsolated);
}

TEST_CASE("spectrum invariants on random quasi-homogeneous input") {
  std::mt19937_64 rng(2024);
  int accepted = 0;
  while (accepted < 60) {
    auto f = random_qh(rng);
    if (!f) continue;
    ++accepted;
    Spectrum s = spectrum(*f);
    int total = 0;
    for (auto& [alpha, mult] : s) {
      total += mult;
      CHECK(alpha > -1);
      CHECK(alpha < 1);
      CHECK(nu(s, Rat(-alpha)) == mult);
    }
    CHECK(Rat(total) == f->milnor_number());
    CHECK(nu(s, Rat(0)) == branch_count(*f) - 1);
  }
}
