#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lk/rational.hpp"

namespace lk {

// Dense univariate polynomial over Q. Coefficient k multiplies r^k.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c) : UPoly(Rational(c)) {}
  UPoly(const Rational& c) {
    if (sgn(c) != 0) c_.push_back(c);
  }
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static UPoly monomial(const Rational& c, std::size_t k) {
    UPoly p;
    if (sgn(c) == 0) return p;
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = c;
    return p;
  }
  static UPoly var() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const Rational& coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : detail::rational_zero();
  }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) != 0; }));
  }
  int low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (sgn(c_[k]) != 0) return static_cast<int>(k);
    return -1;
  }
  bool is_monomial() const { return !is_zero() && term_count() == 1; }

  UPoly shift_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    UPoly p;
    p.c_.assign(k, Rational(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
  }
  UPoly shift_down(std::size_t k) const {
    UPoly p;
    if (k >= c_.size()) return p;
    p.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
    return p;
  }

  UPoly operator-() const {
    UPoly p = *this;
    for (auto& q : p.c_) q = -q;
    return p;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      c_.clear();
      return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        p.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    p.trim();
    return p;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly pow(unsigned e) const {
    UPoly result(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  Rational eval(const Rational& t) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / lead();
    return *this * inv;
  }

  // Positive rational c with this/c integral, coprime, positive leading coefficient.
  Rational content() const {
    if (is_zero()) return Rational(1);
    Integer num_g(0), den_l(1);
    for (const auto& q : c_) {
      if (sgn(q) == 0) continue;
      mpz_gcd(num_g.get_mpz_t(), num_g.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(den_l.get_mpz_t(), den_l.get_mpz_t(), q.get_den_mpz_t());
    }
    Rational c(num_g, den_l);
    c.canonicalize();
    if (sgn(lead()) < 0) c = -c;
    return c;
  }
  UPoly primitive() const {
    if (is_zero()) return *this;
    return *this * (1 / content());
  }

  std::string str(const char* var = "r") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      detail::append_term(out, c_[k], {{var, k}}, first);
      first = false;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational inv = 1 / b.lead();
  for (int k = da; k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    Rational f = top * inv;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    q[static_cast<std::size_t>(k - db)] = f;
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

inline UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

inline UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

// Pseudo-remainder: lc(b)^k * a mod b with integral arithmetic.
inline UPoly prem(UPoly a, const UPoly& b) {
  const int db = b.degree();
  const Rational& lb = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    UPoly t = b.shift_up(static_cast<std::size_t>(a.degree() - db)) * a.lead();
    a *= lb;
    a -= t;
  }
  return a;
}

// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(const UPoly& x, const UPoly& y) {
  if (x.is_zero()) return y.monic();
  if (y.is_zero()) return x.monic();
  const int low = std::min(x.low_degree(), y.low_degree());
  UPoly a = x.shift_down(static_cast<std::size_t>(x.low_degree()));
  UPoly b = y.shift_down(static_cast<std::size_t>(y.low_degree()));
  if (a.is_constant() || b.is_constant()) return UPoly::monomial(1, static_cast<std::size_t>(low));
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UPoly r = prem(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive();
    if (!b.is_zero() && b.is_constant()) {
      a = UPoly(1);
      break;
    }
  }
  return a.monic().shift_up(static_cast<std::size_t>(low));
}

// Returns (g, s) with s*a = g mod m, g = gcd(a, m) monic.
inline std::pair<UPoly, UPoly> inverse_mod(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = a % m;
  UPoly s0, s1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {UPoly(), UPoly()};
  Rational inv = 1 / r0.lead();
  return {r0 * inv, (s0 * inv) % m};
}

}  // namespace lk
