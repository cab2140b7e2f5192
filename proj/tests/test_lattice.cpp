#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvelattice/errors.hpp"
#include "curvelattice/lattice.hpp"

using namespace cl;

static QMatrix scaled(QMatrix g, const Rat& s) {
  for (auto& row : g)
    for (auto& x : row) x *= s;
  return g;
}

static QMatrix a2_cubed() { return orthogonal_sum(orthogonal_sum(a2_gram(), a2_gram()), a2_gram()); }

TEST_CASE("shortest vectors of the table lattices") {
  struct Row {
    QMatrix g;
    std::size_t count;
  };
  for (auto& [g, count] : std::vector<Row>{
           {a2_gram(), 6}, {d4_gram(), 24}, {e6_gram(), 72}, {e8_gram(), 240}, {a2_cubed(), 18}}) {
    auto sv = shortest_vectors(g);
    CHECK(sv.min_norm == 2);
    CHECK(sv.count == count);
    CHECK(sv.count % 2 == 0);
  }
  auto z = shortest_vectors({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(z.count == 4);
  // Each vector appears with its negative and has the minimal norm.
  auto sv = shortest_vectors(d4_gram());
  for (auto& v : sv.vectors) {
    auto w = v;
    for (auto& x : w) x = -x;
    CHECK(std::binary_search(sv.vectors.begin(), sv.vectors.end(), w));
  }
}

TEST_CASE("enumeration rejects bad input") {
  CHECK_THROWS_AS(shortest_vectors({{Rat(1), Rat(2)}, {Rat(2), Rat(1)}}), NotPositiveDefinite);
  CHECK_THROWS_AS(shortest_vectors({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}), UsageError);
  QMatrix big(9, std::vector<Rat>(9, Rat(0)));
  for (int i = 0; i < 9; ++i) big[i][i] = 2;
  CHECK_THROWS_AS(shortest_vectors(big), UsageError);
}

TEST_CASE("enumeration agrees with brute force on small random forms") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int t = 0; t < 30; ++t) {
    // G = B^T B for a random integer basis B.
    int B[3][3];
    for (auto& r : B)
      for (auto& x : r) x = d(rng);
    for (int i = 0; i < 3; ++i) B[i][i] += 4;
    QMatrix G(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) G[i][j] += B[k][i] * B[k][j];
    if (det(G) == 0) continue;
    auto sv = shortest_vectors(G);
    Rat best = -1;
    std::size_t count = 0;
    const int R = 6;
    for (int a = -R; a <= R; ++a)
      for (int b = -R; b <= R; ++b)
        for (int c = -R; c <= R; ++c) {
          if (!a && !b && !c) continue;
          int v[3] = {a, b, c};
          Rat q = 0;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q += G[i][j] * v[i] * v[j];
          if (best < 0 || q < best) {
            best = q;
            count = 0;
          }
          if (q == best) ++count;
        }
    CHECK(sv.min_norm == best);
    CHECK(sv.count == count);
  }
}

TEST_CASE("identify") {
  CHECK(identify({{Rat(6), Rat(-3)}, {Rat(-3), Rat(6)}}).tag == "A2(3)");
  CHECK(identify({{Rat(4), Rat(-2)}, {Rat(-2), Rat(4)}}).tag == "A2(2)");
  CHECK(identify(a2_gram()).tag == "A2");
  CHECK(identify({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}).tag == "Unknown");
  CHECK(identify(d4_gram()).tag == "D4");
  CHECK(identify(e8_gram()).tag == "E8");
  auto e6 = identify(e6_gram());
  CHECK(e6.tag == "E6");
  CHECK(e6.evidence.str() == "(6, 3, 2, 72)");
  auto a = identify(a2_cubed());
  CHECK(a.tag == "A2^3");
  CHECK(a.evidence.str() == "(6, 27, 2, 18)");
  CHECK(identify(orthogonal_sum(a2_gram(2), a2_gram(2))).tag == "A2^2(2)");
}

TEST_CASE("diagonalization") {
  auto check = [](const QMatrix& Q) {
    auto d = diagonalize(Q);
    std::size_t n = Q.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) s += d.transform[i][a] * Q[a][b] * d.transform[j][b];
        CHECK(s == (i == j ? d.entries[i] : Rat(0)));
      }
    return d;
  };
  auto d2 = check(a2_gram(2));
  CHECK(d2.reduced == std::vector<Integer>{1, 3});
  auto d3 = check(a2_gram(3));
  CHECK(d3.reduced == std::vector<Integer>{6, 2});
  QMatrix diag{{Rat(5), Rat(0)}, {Rat(0), Rat(-7)}};
  CHECK(check(diag).entries == std::vector<Rat>{5, -7});
  check({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});  // hyperbolic plane needs the off-diagonal pivot
  check(e8_gram());
  CHECK_THROWS_AS(diagonalize({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}), Degenerate);
}

TEST_CASE("Hilbert symbols") {
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(-1, -1, 3) == 1);
  CHECK(hilbert_symbol(2, 3, 3) == -1);
  CHECK(hilbert_symbol(Rat(1, 4), 3, 3) == 1);
  for (long b : {-6, -1, 2, 3, 5, 7, 12})
    for (long p : {0, 2, 3, 5, 7}) CHECK(hilbert_symbol(1, b, p) == 1);
  CHECK_THROWS_AS(hilbert_symbol(0, 1, 3), UsageError);
  CHECK_THROWS_AS(hilbert_symbol(1, 1, 4), UsageError);

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(-60, 60);
  for (int t = 0; t < 200; ++t) {
    long a = d(rng), b = d(rng), c = d(rng);
    if (!a || !b || !c) continue;
    // Product formula over the real place and the primes dividing 2ab.
    std::set<Integer> primes{Integer(2)};
    for (long x : {a, b})
      for (auto& [p, m] : factor(Integer(x))) primes.insert(p);
    int prod = hilbert_symbol(a, b, 0);
    for (auto& p : primes) prod *= hilbert_symbol(a, b, p);
    CHECK(prod == 1);
    for (long p : {0, 2, 3, 5, 7}) {
      CHECK(hilbert_symbol(a, b * c, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p));
      CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
      CHECK(hilbert_symbol(a, -a, p) == 1);
    }
  }
}

TEST_CASE("rational equivalence") {
  auto r = q_equivalent(a2_gram(2), a2_gram(3));
  CHECK_FALSE(r.equivalent);
  CHECK(r.reason == "hasse");
  REQUIRE(r.witness_prime.has_value());
  CHECK(*r.witness_prime == 3);
  CHECK(r.disc_a == r.disc_b);

  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<QMatrix> forms;
  while (forms.size() < 12) {
    QMatrix q(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) q[i][j] = q[j][i] = d(rng);
    if (det(q) != 0) forms.push_back(q);
  }
  for (auto& q : forms) {
    CHECK(q_equivalent(q, q).equivalent);
    CHECK(q_equivalent(q, scaled(q, 4)).equivalent);
    CHECK(q_equivalent(q, scaled(q, Rat(9, 25))).equivalent);
    // Congruent forms T Q T^T are equivalent.
    QMatrix T{{Rat(1), Rat(2), Rat(0)}, {Rat(0), Rat(1), Rat(-1)}, {Rat(3), Rat(0), Rat(1)}};
    QMatrix c(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) c[i][j] += T[i][a] * q[a][b] * T[j][b];
    CHECK(q_equivalent(q, c).equivalent);
  }
  for (auto& a : forms)
    for (auto& b : forms) {
      CHECK(q_equivalent(a, b).equivalent == q_equivalent(b, a).equivalent);
      for (auto& c : forms)
        if (q_equivalent(a, b).equivalent && q_equivalent(b, c).equivalent) CHECK(q_equivalent(a, c).equivalent);
    }
  CHECK(q_equivalent(a2_gram(), scaled(a2_gram(), -1)).reason == "signature");
  CHECK(q_equivalent(a2_gram(), d4_gram()).reason == "rank");
}

TEST_CASE("lattice generated by vectors") {
  // The 18 roots of A2^3 generate A2^3; adding a glue vector gives more.
  auto base = a2_cubed();
  auto sv = shortest_vectors(base);
  QMatrix G(sv.vectors.size(), std::vector<Rat>(sv.vectors.size(), Rat(0)));
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j)
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) G[i][j] += base[a][b] * sv.vectors[i][a] * sv.vectors[j][b];
  auto L = generated_lattice(G);
  CHECK(L.gram.size() == 6);
  CHECK(det(L.gram) == 27);
  CHECK(identify(L.gram).tag == "A2^3");

  // Index-2 sublattice: vectors 2e1, e2 in Z^2.
  auto S = generated_lattice({{Rat(4), Rat(0), Rat(2)}, {Rat(0), Rat(1), Rat(0)}, {Rat(2), Rat(0), Rat(1)}});
  CHECK(det(S.gram) == 1);
  CHECK_THROWS_AS(generated_lattice({{Rat(-1)}}), NotPositiveDefinite);
}
