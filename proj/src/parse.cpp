#include "curvelattice/parse.hpp"

#include <cctype>

#include "curvelattice/errors.hpp"

namespace cl {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MPoly run() {
    MPoly p = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    MPoly p = term();
    if (neg) p = -p;
    for (;;) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }

  MPoly term() {
    MPoly p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  MPoly factor() {
    MPoly b = base();
    if (accept('^')) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) throw ParseError("expected exponent", start);
      if (i_ - start > 6) throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start)))));
    }
    return b;
  }

  MPoly base() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      MPoly p = expr();
      if (!accept(')')) throw ParseError("expected ')'", i_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      Integer num(std::string(s_.substr(start, i_ - start)));
      Integer den = 1;
      std::size_t save = i_;
      skip();
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        skip();
        std::size_t ds = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (ds == i_) throw ParseError("expected denominator", ds);
        den = Integer(std::string(s_.substr(ds, i_ - ds)));
        if (den == 0) throw ParseError("zero denominator", ds);
      } else {
        i_ = save;
      }
      Rat q(num, den);
      q.canonicalize();
      return MPoly::constant(vars_, CycloNum(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string name(s_.substr(start, i_ - start));
      if (name == "w") return MPoly::constant(vars_, CycloNum::omega());
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) return MPoly::variable(vars_, k);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", i_);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t i_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  for (auto& v : vars) {
    if (v == "w") throw UsageError("'w' is reserved for the cube root of unity");
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw UsageError("invalid variable name '" + v + "'");
  }
  return Parser(text, vars).run();
}

CycloNum parse_cyclo(std::string_view text) {
  MPoly p = parse_poly(text, {});
  return p.constant_term();
}

std::vector<std::string> parse_var_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace cl
