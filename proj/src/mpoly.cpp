#include "curvelattice/mpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace cl {

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  return a > b;
}

MPoly MPoly::constant(const std::vector<std::string>& vars, const CycloNum& c) {
  MPoly p(vars);
  p.add_term(Monomial(vars.size(), 0), c);
  return p;
}

MPoly MPoly::variable(const std::vector<std::string>& vars, std::size_t i) {
  Monomial m(vars.size(), 0);
  m.at(i) = 1;
  return monomial(vars, m, CycloNum(1));
}

MPoly MPoly::monomial(const std::vector<std::string>& vars, Monomial m, const CycloNum& c) {
  if (m.size() != vars.size()) throw std::invalid_argument("monomial arity");
  MPoly p(vars);
  p.add_term(m, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e) return false;
  return true;
}

CycloNum MPoly::constant_term() const { return coeff(Monomial(vars_.size(), 0)); }

std::optional<std::size_t> MPoly::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return kZeroDegree;
  const Monomial& m = terms_.begin()->first;
  return std::accumulate(m.begin(), m.end(), 0);
}

int MPoly::degree_in(std::size_t v) const {
  if (terms_.empty()) return kZeroDegree;
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

int MPoly::min_degree_in(std::size_t v) const {
  if (terms_.empty()) return kZeroDegree;
  int d = terms_.begin()->first[v];
  for (auto& [m, c] : terms_) d = std::min(d, m[v]);
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = total_degree();
  for (auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0) != d) return false;
  return true;
}

int MPoly::weighted_degree(const std::vector<int>& w) const {
  if (w.size() != vars_.size()) throw std::invalid_argument("weight count must match variable count");
  if (terms_.empty()) return kZeroDegree;
  int d = 0;
  for (auto& [m, c] : terms_) {
    int s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += w[i] * m[i];
    d = std::max(d, s);
  }
  return d;
}

bool MPoly::is_weighted_homogeneous(const std::vector<int>& w) const {
  int d = weighted_degree(w);
  for (auto& [m, c] : terms_) {
    int s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += w[i] * m[i];
    if (s != d) return false;
  }
  return true;
}

CycloNum MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycloNum() : it->second;
}

void MPoly::add_term(const Monomial& m, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const CycloNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
  Monomial m(r.vars_.size());
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(vars_, CycloNum(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MPoly MPoly::derivative(std::size_t v) const {
  MPoly r(vars_);
  for (auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Monomial n = m;
    n[v] -= 1;
    r.add_term(n, c * CycloNum(m[v]));
  }
  return r;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coeff().inverse();
}

MPoly MPoly::conj() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = c.conj();
  return r;
}

MPoly MPoly::shift(std::size_t v, int e) const {
  MPoly r(vars_);
  for (auto& [m, c] : terms_) {
    Monomial n = m;
    n[v] += e;
    if (n[v] < 0) throw std::domain_error("negative exponent in shift");
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

CycloNum MPoly::eval(const std::vector<CycloNum>& pt) const {
  if (pt.size() != vars_.size()) throw std::invalid_argument("evaluation arity");
  std::vector<std::vector<CycloNum>> powers(pt.size());
  CycloNum r;
  for (auto& [m, c] : terms_) {
    CycloNum t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(CycloNum(1));
      while ((int)pw.size() <= m[i]) pw.push_back(pw.back() * pt[i]);
      t *= pw[m[i]];
    }
    r += t;
  }
  return r;
}

MPoly MPoly::specialize(std::size_t v, const CycloNum& c) const {
  MPoly r(vars_);
  std::vector<CycloNum> pw{CycloNum(1)};
  for (auto& [m, k] : terms_) {
    while ((int)pw.size() <= m[v]) pw.push_back(pw.back() * c);
    Monomial n = m;
    n[v] = 0;
    r.add_term(n, k * pw[m[v]]);
  }
  return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("compose arity");
  const auto& tv = images.empty() ? vars_ : images[0].vars();
  std::vector<std::vector<MPoly>> powers(images.size());
  MPoly r(tv);
  for (auto& [m, c] : terms_) {
    MPoly t = constant(tv, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(tv, CycloNum(1)));
      while ((int)pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[m[i]];
    }
    r += t;
  }
  return r;
}

MPoly MPoly::rebase(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    std::size_t j = 0;
    while (j < vars.size() && vars[j] != vars_[i]) ++j;
    if (j == vars.size()) {
      if (degree_in(i) > 0) throw std::invalid_argument("variable " + vars_[i] + " not in target list");
      j = SIZE_MAX;
    }
    map[i] = j;
  }
  MPoly r(vars);
  for (auto& [m, c] : terms_) {
    Monomial n(vars.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (map[i] != SIZE_MAX) n[map[i]] = m[i];
    r.add_term(n, c);
  }
  return r;
}

std::vector<MPoly> MPoly::coeffs_in(std::size_t v) const {
  int d = degree_in(v);
  std::vector<MPoly> out(d < 0 ? 0 : d + 1, MPoly(vars_));
  for (auto& [m, c] : terms_) {
    Monomial n = m;
    n[v] = 0;
    out[m[v]].terms_.emplace(std::move(n), c);
  }
  return out;
}

MPoly MPoly::from_coeffs_in(const std::vector<std::string>& vars, std::size_t v,
                            const std::vector<MPoly>& coeffs) {
  MPoly r(vars);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (auto& [m, c] : coeffs[i].terms_) {
      Monomial n = m;
      n[v] += (int)i;
      r.add_term(n, c);
    }
  return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly rem = *this, q(vars_.empty() ? d.vars_ : vars_);
  const Monomial& ld = d.leading_monomial();
  CycloNum inv = d.leading_coeff().inverse();
  Monomial t(ld.size());
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = lr[i] - ld[i];
      if (t[i] < 0) return std::nullopt;
    }
    CycloNum c = rem.leading_coeff() * inv;
    q.add_term(t, c);
    Monomial s(t.size());
    for (auto& [m, k] : d.terms_) {
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = m[i] + t[i];
      rem.add_term(s, -(k * c));
    }
  }
  return q;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    bool neg = c.display_sign() < 0;
    CycloNum a = neg ? -c : c;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coef;
    if (!a.is_rational() && sgn(a.a()) != 0) coef = "(" + a.str() + ")";
    else coef = a.str();
    std::string term;
    if (mono.empty()) term = coef;
    else if (a.is_one()) term = mono;
    else term = coef + "*" + mono;
    if (first) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

MPoly linear_change(const MPoly& p, const std::vector<std::vector<CycloNum>>& M) {
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    MPoly img(p.vars());
    for (std::size_t j = 0; j < p.nvars(); ++j) {
      Monomial m(p.nvars(), 0);
      m[j] = 1;
      img.add_term(m, M.at(i).at(j));
    }
    images.push_back(img);
  }
  return p.compose(images);
}

}  // namespace cl
