#include "curvelattice/linalg.hpp"

#include "curvelattice/modular.hpp"

namespace cl {

namespace {

template <class T>
T bareiss(std::vector<std::vector<T>> a) {
  std::size_t n = a.size();
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == T(0)) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == T(0)) ++r;
      if (r == n) return T(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = v / prev;
      }
      a[i][k] = T(0);
    }
    prev = a[k][k];
  }
  T d = a[n - 1][n - 1];
  return sign < 0 ? T(-d) : d;
}

}  // namespace

CycloNum det(CMatrix a) { return bareiss(std::move(a)); }

Rat det(QMatrix a) { return bareiss(std::move(a)); }

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(CMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t s = r;
    while (s < a.size() && a[s][c].is_zero()) ++s;
    if (s == a.size()) continue;
    std::swap(a[r], a[s]);
    CycloNum inv = a[r][c].inverse();
    for (std::size_t j = c; j < ncols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      CycloNum f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank(CMatrix a) {
  if (a.empty()) return 0;
  return echelon(a, a[0].size()).size();
}

std::vector<std::vector<CycloNum>> nullspace(CMatrix a, std::size_t ncols) {
  auto piv = echelon(a, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<CycloNum>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<CycloNum> v(ncols);
    v[f] = CycloNum(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    CycloNum last;
    for (std::size_t j = ncols; j-- > 0;)
      if (!v[j].is_zero()) {
        last = v[j];
        break;
      }
    CycloNum inv = last.inverse();
    for (auto& x : v) x *= inv;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(QMatrix a) {
  std::size_t r = 0;
  if (a.empty()) return 0;
  std::size_t ncols = a[0].size();
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t s = r;
    while (s < a.size() && sgn(a[s][c]) == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[r], a[s]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

bool is_positive_semidefinite(QMatrix a) {
  std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) < 0) return false;
    if (sgn(a[k][k]) == 0) {
      for (std::size_t j = k; j < n; ++j)
        if (sgn(a[k][j]) != 0) return false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  std::size_t r = 0;
  if (a.empty()) return 0;
  std::size_t ncols = a[0].size();
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t s = r;
    while (s < a.size() && a[s][c] == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[r], a[s]);
    std::uint64_t inv = inv_mod(a[r][c], p);
    for (std::size_t j = c; j < ncols; ++j) a[r][j] = mul_mod(a[r][j], inv, p);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      std::uint64_t f = a[i][c];
      if (!f) continue;
      for (std::size_t j = c; j < ncols; ++j)
        a[i][j] = sub_mod(a[i][j], mul_mod(f, a[r][j], p), p);
    }
    ++r;
  }
  return r;
}

QMatrix to_qmatrix(const IntMatrix& m) {
  QMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long v : m[i]) q[i].push_back(Rat(v));
  return q;
}

}  // namespace cl
