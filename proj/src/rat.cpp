#include "curvelattice/rat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "curvelattice/errors.hpp"

namespace cl {

Rat ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(std::string_view s) {
  std::string t(s);
  auto bad = [&] { throw UsageError("malformed rational '" + t + "'"); };
  if (t.empty()) bad();
  std::size_t slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto digits = [](const std::string& u, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !u.empty() && (u[0] == '-' || u[0] == '+')) i = 1;
    if (i >= u.size()) return false;
    return std::all_of(u.begin() + i, u.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(num, true) || !digits(den, false)) bad();
  if (num[0] == '+') num = num.substr(1);
  Integer n(num), d(den);
  if (d == 0) throw UsageError("zero denominator in '" + t + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

Integer ceil_rat(const Rat& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Integer round_rat(const Rat& q) { return floor_rat(Rat(q + Rat(1, 2))); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_square(const Rat& q) { return is_square(q.get_num()) && is_square(q.get_den()); }

bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) {
      Integer r = v * v + c;
      return Integer(r % n);
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n]++;
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor(const Integer& n0) {
  if (n0 == 0) throw std::domain_error("factor(0)");
  Integer n = abs(n0);
  std::map<Integer, int> out;
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Integer(p)]++;
      n /= p;
    }
  }
  factor_into(n, out);
  return {out.begin(), out.end()};
}

Integer squarefree_class(const Rat& q) {
  if (sgn(q) == 0) throw std::domain_error("square class of 0");
  Integer m = q.get_num() * q.get_den();
  Integer s = sgn(m) < 0 ? -1 : 1;
  for (auto& [p, e] : factor(m))
    if (e % 2) s *= p;
  return s;
}

}  // namespace cl
