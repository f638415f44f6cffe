#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "lk/specialization.hpp"

namespace lk {

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// expr := term (('+'|'-') term)*
// term := unary (('*'|'/') unary)*
// unary := '-' unary | '+' unary | power
// power := atom ('^' ['-'] integer)?
// atom := integer | 'r' | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(std::string s) : s_(std::move(s)) {}

  RatFunc1 parse() {
    RatFunc1 v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  std::string s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("cannot parse '" + s_ + "' at offset " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    const std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected an integer");
    return s_.substr(b, i_ - b);
  }

  RatFunc1 expr() {
    RatFunc1 v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  RatFunc1 term() {
    RatFunc1 v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        RatFunc1 d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  RatFunc1 unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFunc1 power() {
    RatFunc1 base = atom();
    if (!eat('^')) return base;
    const bool neg = eat('-');
    const std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    int e = std::stoi(d);
    if (neg) {
      if (base.is_zero()) fail("zero to a negative power");
      e = -e;
    }
    return base.pow(e);
  }
  RatFunc1 atom() {
    skip();
    if (eat('(')) {
      RatFunc1 v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (i_ < s_.size() && s_[i_] == 'r') {
      ++i_;
      return RatFunc1::r();
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) return RatFunc1(Rational(mpz_class(digits())));
    if (i_ >= s_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, s_[i_]) + "'");
  }
};

}  // namespace detail

// Rational expression in r.
inline RatFunc1 parse_r_expr(const std::string& s) { return detail::ExprParser(s).parse(); }

// "cyclotomic:M" or a polynomial in r, made monic.
inline std::shared_ptr<const QuotientRing> parse_modulus(const std::string& s) {
  const std::string tag = "cyclotomic:";
  if (s.rfind(tag, 0) == 0) {
    const std::string rest = s.substr(tag.size());
    if (rest.empty() || rest.size() > 4 || rest.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad cyclotomic index in '" + s + "'");
    const int m = std::stoi(rest);
    if (m < 1) throw parse_error("cyclotomic index must be >= 1");
    return Cyclo::cyclotomic_ring(static_cast<unsigned>(m));
  }
  const RatFunc1 p = parse_r_expr(s);
  if (!p.den().is_constant()) throw parse_error("modulus '" + s + "' is not a polynomial");
  UPoly q = p.num();
  if (q.degree() < 1) throw parse_error("modulus '" + s + "' must have degree >= 1");
  return Cyclo::ring(q.monic(), s);
}

// "generic", or an l-expression with an optional modulus.
inline Specialization parse_specialization(const std::string& l_expr, const std::string& modulus = {}) {
  std::string t = l_expr;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  if (t == "generic") {
    if (!modulus.empty()) throw parse_error("a modulus needs a specialized l");
    return Specialization::generic();
  }
  RatFunc1 f = parse_r_expr(t);
  if (f.is_zero()) throw pole_error("l = 0 makes 1/l undefined");
  if (modulus.empty()) return Specialization::l_to(std::move(f));
  return Specialization::l_to(std::move(f), parse_modulus(modulus));
}

}  // namespace lk
