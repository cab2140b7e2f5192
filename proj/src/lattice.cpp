#include "curvelattice/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "curvelattice/errors.hpp"

namespace cl {

namespace {

void require_square_symmetric(const QMatrix& G) {
  for (auto& row : G)
    if (row.size() != G.size()) throw UsageError("Gram matrix must be square");
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (G[i][j] != G[j][i]) throw UsageError("Gram matrix must be symmetric");
}

// G = L D L^T with unit lower-triangular L; NotPositiveDefinite on a pivot <= 0.
void ldl(const QMatrix& G, QMatrix& L, std::vector<Rat>& d) {
  std::size_t n = G.size();
  L.assign(n, std::vector<Rat>(n));
  d.assign(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rat s = G[i][i];
    for (std::size_t k = 0; k < i; ++k) s -= L[i][k] * L[i][k] * d[k];
    if (sgn(s) <= 0) throw NotPositiveDefinite("pivot " + std::to_string(i + 1) + " is " + to_string(Rat(s)));
    d[i] = s;
    L[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat t = G[j][i];
      for (std::size_t k = 0; k < i; ++k) t -= L[j][k] * L[i][k] * d[k];
      L[j][i] = t / d[i];
    }
  }
}

Rat quad(const QMatrix& G, const std::vector<long>& v) {
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[i] && v[j]) s += G[i][j] * v[i] * v[j];
  return s;
}

QMatrix cartan(int n, const std::vector<std::pair<int, int>>& edges) {
  QMatrix g(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  for (auto [a, b] : edges) g[a][b] = g[b][a] = -1;
  return g;
}

Integer padic_split(Integer& u, const Integer& p) {
  Integer a = 0;
  while (u % p == 0) {
    u /= p;
    ++a;
  }
  return a;
}

}  // namespace

ShortVectors shortest_vectors(const QMatrix& G) {
  require_square_symmetric(G);
  std::size_t n = G.size();
  if (n == 0) throw UsageError("empty Gram matrix");
  if (n > kMaxEnumerationRank) throw UsageError("enumeration is limited to rank " + std::to_string(kMaxEnumerationRank));
  QMatrix L;
  std::vector<Rat> d;
  ldl(G, L, d);

  Rat bound = G[0][0];
  for (std::size_t i = 1; i < n; ++i) bound = std::min(bound, G[i][i]);
  std::vector<long> v(n, 0);
  std::vector<std::vector<long>> found;
  // Q(v) = sum_i d_i (v_i + sum_{j>i} L_ji v_j)^2, coordinates fixed from the last.
  std::function<void(int, Rat)> rec = [&](int i, Rat used) {
    if (i < 0) {
      if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) return;
      if (used < bound) {
        bound = used;
        found.clear();
      }
      found.push_back(v);
      return;
    }
    Rat c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= L[j][i] * v[j];
    Rat room = bound - used;
    long start = floor_rat(c).get_si();
    auto cost = [&](long x) -> Rat { Rat t = Rat(x) - c; return d[i] * t * t; };
    for (long x = start; cost(x) <= room; --x) {
      v[i] = x;
      rec(i - 1, used + cost(x));
      room = bound - used;
    }
    for (long x = start + 1; cost(x) <= room; ++x) {
      v[i] = x;
      rec(i - 1, used + cost(x));
      room = bound - used;
    }
    v[i] = 0;
  };
  rec(static_cast<int>(n) - 1, Rat(0));
  std::vector<std::vector<long>> out;
  for (auto& w : found)
    if (quad(G, w) == bound) out.push_back(w);
  std::sort(out.begin(), out.end());
  return {bound, out.size(), out};
}

std::string LatticeEvidence::str() const {
  return "(" + std::to_string(rank) + ", " + to_string(det) + ", " + to_string(min_norm) + ", " +
         std::to_string(kissing) + ")";
}

LatticeEvidence evidence(const QMatrix& G) {
  ShortVectors sv = shortest_vectors(G);
  return {static_cast<int>(G.size()), det(G), sv.min_norm, sv.count};
}

LatticeId identify(const QMatrix& G) {
  LatticeId id;
  id.evidence = evidence(G);
  std::vector<std::pair<std::string, LatticeEvidence>> table{
      {"D4", {4, Rat(4), Rat(2), 24}}, {"E6", {6, Rat(3), Rat(2), 72}}, {"E8", {8, Rat(1), Rat(2), 240}}};
  for (int m = 1; 2 * m <= 8; ++m)
    for (long k = 1; k <= 8; ++k) {
      Integer det = 1;
      for (int i = 0; i < m; ++i) det *= 3 * k * k;
      std::string tag = "A2" + (m > 1 ? "^" + std::to_string(m) : "") + (k > 1 ? "(" + std::to_string(k) + ")" : "");
      table.push_back({tag, {2 * m, Rat(det), Rat(2 * k), static_cast<std::size_t>(6 * m)}});
    }
  for (auto& [tag, ev] : table)
    if (ev == id.evidence) id.tag = tag;
  return id;
}

QMatrix a2_gram(long k) {
  return {{Rat(2 * k), Rat(-k)}, {Rat(-k), Rat(2 * k)}};
}

QMatrix orthogonal_sum(const QMatrix& a, const QMatrix& b) {
  std::size_t n = a.size(), m = b.size();
  QMatrix g(n + m, std::vector<Rat>(n + m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = a[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b[i][j];
  return g;
}

QMatrix d4_gram() { return cartan(4, {{0, 1}, {1, 2}, {1, 3}}); }
QMatrix e6_gram() { return cartan(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}); }
QMatrix e8_gram() { return cartan(8, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}); }

Diagonalization diagonalize(const QMatrix& Q) {
  require_square_symmetric(Q);
  std::size_t n = Q.size();
  QMatrix A = Q, T(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) T[i][i] = 1;
  auto swap_idx = [&](std::size_t a, std::size_t b) {
    std::swap(A[a], A[b]);
    for (auto& row : A) std::swap(row[a], row[b]);
    std::swap(T[a], T[b]);
  };
  // row/col a += f * row/col b
  auto add_idx = [&](std::size_t a, std::size_t b, const Rat& f) {
    for (std::size_t j = 0; j < n; ++j) A[a][j] += f * A[b][j];
    for (std::size_t j = 0; j < n; ++j) A[j][a] += f * A[j][b];
    for (std::size_t j = 0; j < n; ++j) T[a][j] += f * T[b][j];
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(A[k][k]) == 0) {
      std::size_t j = k + 1;
      while (j < n && sgn(A[j][j]) == 0) ++j;
      if (j < n) {
        swap_idx(k, j);
      } else {
        j = k + 1;
        while (j < n && sgn(A[k][j]) == 0) ++j;
        if (j == n) throw Degenerate("quadratic form is degenerate");
        add_idx(k, j, Rat(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i)
      if (sgn(A[i][k]) != 0) add_idx(i, k, Rat(-A[i][k] / A[k][k]));
  }
  Diagonalization out;
  for (std::size_t i = 0; i < n; ++i) {
    out.entries.push_back(A[i][i]);
    out.reduced.push_back(squarefree_class(A[i][i]));
  }
  out.transform = std::move(T);
  return out;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Integer& p) {
  if (sgn(a) == 0 || sgn(b) == 0) throw UsageError("Hilbert symbol needs nonzero arguments");
  if (p == 0) return sgn(a) < 0 && sgn(b) < 0 ? -1 : 1;
  if (p < 2 || !is_probable_prime(p)) throw UsageError("Hilbert symbol needs a prime");
  Integer u = squarefree_class(a), v = squarefree_class(b);
  Integer al = padic_split(u, p), be = padic_split(v, p);
  int alpha = al.get_si() & 1, beta = be.get_si() & 1;
  int e = 0;
  if (p == 2) {
    auto eps = [](const Integer& x) { return mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 ? 1 : 0; };
    auto omg = [](const Integer& x) {
      unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), 8);
      return r == 3 || r == 5 ? 1 : 0;
    };
    e = eps(u) * eps(v) + alpha * omg(v) + beta * omg(u);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if (alpha && beta && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) s = -s;
  if (beta) s *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
  if (alpha) s *= mpz_legendre(v.get_mpz_t(), p.get_mpz_t());
  return s;
}

int hasse_invariant(const std::vector<Rat>& diag, const Integer& p) {
  int h = 1;
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) h *= hilbert_symbol(diag[i], diag[j], p);
  return h;
}

QEquivalence q_equivalent(const QMatrix& a, const QMatrix& b) {
  QEquivalence r;
  Diagonalization da = diagonalize(a), db = diagonalize(b);
  auto neg = [](const Diagonalization& d) {
    return static_cast<int>(std::count_if(d.entries.begin(), d.entries.end(), [](const Rat& x) { return sgn(x) < 0; }));
  };
  auto disc = [](const Diagonalization& d) {
    Rat p = 1;
    for (auto& e : d.entries) p *= e;
    return squarefree_class(p);
  };
  r.signature_a = neg(da);
  r.signature_b = neg(db);
  r.disc_a = disc(da);
  r.disc_b = disc(db);
  std::set<Integer> primes{Integer(2)};
  for (const auto* d : {&da, &db})
    for (auto& e : d->reduced)
      for (auto& [p, m] : factor(e)) primes.insert(p);
  for (auto& p : primes) r.hasse[p] = {hasse_invariant(da.entries, p), hasse_invariant(db.entries, p)};
  for (auto& [p, h] : r.hasse)
    if (h.first != h.second && (!r.witness_prime || (*r.witness_prime == 2 && p != 2))) r.witness_prime = p;

  if (a.size() != b.size()) r.reason = "rank";
  else if (r.signature_a != r.signature_b) r.reason = "signature";
  else if (r.disc_a != r.disc_b) r.reason = "discriminant";
  else if (r.witness_prime) r.reason = "hasse";
  r.equivalent = r.reason.empty();
  if (r.reason != "hasse") r.witness_prime.reset();
  return r;
}

GeneratedLattice generated_lattice(const QMatrix& G) {
  require_square_symmetric(G);
  if (!is_positive_semidefinite(G)) throw NotPositiveDefinite("Gram matrix is not positive semidefinite");
  std::size_t n = G.size();
  GeneratedLattice out;
  auto sub = [&](const std::vector<std::size_t>& idx) {
    QMatrix s(idx.size(), std::vector<Rat>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = G[idx[i]][idx[j]];
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto trial = out.independent;
    trial.push_back(i);
    if (sgn(det(sub(trial))) != 0) out.independent = trial;
  }
  std::size_t r = out.independent.size();
  if (r == 0) return out;
  QMatrix GB = sub(out.independent);

  // Inverse of GB by Gauss-Jordan.
  QMatrix inv(r, std::vector<Rat>(r, Rat(0))), w = GB;
  for (std::size_t i = 0; i < r; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (sgn(w[p][c]) == 0) ++p;
    std::swap(w[p], w[c]);
    std::swap(inv[p], inv[c]);
    Rat f = w[c][c];
    for (std::size_t j = 0; j < r; ++j) {
      w[c][j] /= f;
      inv[c][j] /= f;
    }
    for (std::size_t i = 0; i < r; ++i)
      if (i != c && sgn(w[i][c]) != 0) {
        Rat g = w[i][c];
        for (std::size_t j = 0; j < r; ++j) {
          w[i][j] -= g * w[c][j];
          inv[i][j] -= g * inv[c][j];
        }
      }
  }

  // Coordinates of every vector, scaled to integers by a common denominator.
  std::vector<std::vector<Rat>> coords(n, std::vector<Rat>(r, Rat(0)));
  Integer D = 1;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) coords[v][a] += inv[a][b] * G[out.independent[b]][v];
      mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), coords[v][a].get_den_mpz_t());
    }
  std::vector<std::vector<Integer>> M(n, std::vector<Integer>(r));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 0; a < r; ++a) M[v][a] = Rat(coords[v][a] * D).get_num();

  // Row Hermite normal form by repeated Euclidean reduction within columns.
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < n; ++c) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = row; i < n; ++i)
        if (M[i][c] != 0 && (best == n || abs(M[i][c]) < abs(M[best][c]))) best = i;
      if (best == n) break;
      std::swap(M[row], M[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < n; ++i) {
        if (M[i][c] == 0) continue;
        Integer q = floor_div(M[i][c], M[row][c]);
        for (std::size_t j = c; j < r; ++j) M[i][j] -= q * M[row][j];
        if (M[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (M[row][c] != 0) ++row;
  }

  out.basis.assign(row, std::vector<Rat>(r));
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t a = 0; a < r; ++a) out.basis[i][a] = ratio(M[i][a], D);

  auto gram_of = [&](const QMatrix& B) {
    QMatrix g(B.size(), std::vector<Rat>(B.size(), Rat(0)));
    for (std::size_t i = 0; i < B.size(); ++i)
      for (std::size_t j = 0; j < B.size(); ++j)
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b) g[i][j] += B[i][a] * GB[a][b] * B[j][b];
    return g;
  };
  // Pairwise size reduction keeps the basis short for enumeration.
  for (bool changed = true; changed;) {
    changed = false;
    QMatrix g = gram_of(out.basis);
    for (std::size_t i = 0; i < row && !changed; ++i)
      for (std::size_t j = 0; j < row && !changed; ++j) {
        if (i == j) continue;
        Integer q = round_rat(Rat(g[i][j] / g[j][j]));
        if (q == 0) continue;
        Rat nn = g[i][i] - 2 * Rat(q) * g[i][j] + Rat(q * q) * g[j][j];
        if (nn >= g[i][i]) continue;
        for (std::size_t a = 0; a < r; ++a) out.basis[i][a] -= Rat(q) * out.basis[j][a];
        changed = true;
      }
  }
  out.gram = gram_of(out.basis);
  return out;
}

}  // namespace cl
