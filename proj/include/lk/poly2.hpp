#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lk/upoly.hpp"

namespace lk {

// Polynomial in l with coefficients in Q[r]. Entry a multiplies l^a.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(long c) : Poly2(UPoly(c)) {}
  Poly2(const Rational& c) : Poly2(UPoly(c)) {}
  Poly2(const UPoly& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Poly2(std::vector<UPoly> c) : c_(std::move(c)) { trim(); }

  static Poly2 monomial(const Rational& c, std::size_t a, std::size_t b) {
    Poly2 p;
    if (sgn(c) == 0) return p;
    p.c_.assign(a + 1, UPoly());
    p.c_[a] = UPoly::monomial(c, b);
    return p;
  }
  static Poly2 l() { return monomial(1, 1, 0); }
  static Poly2 r() { return monomial(1, 0, 1); }

  bool is_zero() const { return c_.empty(); }
  int deg_l() const { return static_cast<int>(c_.size()) - 1; }
  int deg_r() const {
    int d = -1;
    for (const auto& u : c_) d = std::max(d, u.degree());
    return d;
  }
  const UPoly& coeff(std::size_t a) const {
    static const UPoly zero;
    return a < c_.size() ? c_[a] : zero;
  }
  const std::vector<UPoly>& coeffs() const { return c_; }
  const UPoly& lead_l() const { return c_.back(); }
  // Leading coefficient in lex order on (deg_l, deg_r).
  const Rational& lead() const { return c_.back().lead(); }

  bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].is_constant()); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool free_of_l() const { return c_.size() <= 1; }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& u : c_) n += u.term_count();
    return n;
  }
  bool is_monomial() const { return term_count() == 1; }

  int low_l() const {
    for (std::size_t a = 0; a < c_.size(); ++a)
      if (!c_[a].is_zero()) return static_cast<int>(a);
    return -1;
  }
  int low_r() const {
    int d = -1;
    for (const auto& u : c_) {
      if (u.is_zero()) continue;
      int k = u.low_degree();
      d = d < 0 ? k : std::min(d, k);
    }
    return d;
  }

  // Divides by l^a r^b; caller guarantees divisibility.
  Poly2 shift_down(std::size_t a, std::size_t b) const {
    Poly2 p;
    if (a >= c_.size()) return p;
    p.c_.reserve(c_.size() - a);
    for (std::size_t k = a; k < c_.size(); ++k) p.c_.push_back(c_[k].shift_down(b));
    p.trim();
    return p;
  }
  Poly2 shift_up(std::size_t a, std::size_t b) const {
    if (is_zero()) return *this;
    Poly2 p;
    p.c_.assign(a, UPoly());
    for (const auto& u : c_) p.c_.push_back(u.shift_up(b));
    return p;
  }

  Poly2 operator-() const {
    Poly2 p = *this;
    for (auto& u : p.c_) u = -u;
    return p;
  }
  Poly2& operator+=(const Poly2& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly2& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      c_.clear();
      return *this;
    }
    for (auto& u : c_) u *= s;
    return *this;
  }
  Poly2& operator*=(const UPoly& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& u : c_) u *= s;
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Rational& s) { return a *= s; }
  friend Poly2 operator*(Poly2 a, const UPoly& s) { return a *= s; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 p;
    if (a.is_zero() || b.is_zero()) return p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, UPoly());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        p.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    p.trim();
    return p;
  }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  Poly2 pow(unsigned e) const {
    Poly2 result(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  // gcd of the Q[r] coefficients, monic.
  UPoly content_l() const {
    UPoly g;
    for (const auto& u : c_) {
      if (u.is_zero()) continue;
      g = gcd(g, u);
      if (g.is_one()) break;
    }
    return g;
  }

  // Divides every coefficient by a univariate factor; caller guarantees exactness.
  Poly2 div_coeffs(const UPoly& d) const {
    Poly2 p;
    p.c_.reserve(c_.size());
    for (const auto& u : c_) p.c_.push_back(u.is_zero() ? u : exact_div(u, d));
    return p;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t a = 0; a < c_.size(); ++a) {
      const auto& u = c_[a];
      for (std::size_t b = 0; b < u.size(); ++b) {
        const Rational& q = u.coeff(b);
        if (sgn(q) == 0) continue;
        detail::append_term(out, q, {{"l", a}, {"r", b}}, first);
        first = false;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<UPoly> c_;
};

// Pseudo-remainder in l over Q[r].
inline Poly2 prem(Poly2 a, const Poly2& b) {
  const int db = b.deg_l();
  const UPoly& lb = b.lead_l();
  while (!a.is_zero() && a.deg_l() >= db) {
    Poly2 t = b.shift_up(static_cast<std::size_t>(a.deg_l() - db), 0) * a.lead_l();
    a *= lb;
    a -= t;
  }
  return a;
}

inline Poly2 primitive_l(const Poly2& p) {
  if (p.is_zero()) return p;
  UPoly c = p.content_l();
  Poly2 q = c.is_one() ? p : p.div_coeffs(c);
  return q * (1 / q.lead_l().content());
}

// Exact quotient a / b; throws if b does not divide a.
inline Poly2 exact_div(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.free_of_l()) return a.div_coeffs(b.coeff(0));
  const int db = b.deg_l();
  std::vector<UPoly> q;
  Poly2 rem = a;
  while (!rem.is_zero()) {
    const int d = rem.deg_l() - db;
    if (d < 0) throw std::logic_error("inexact polynomial division");
    UPoly c = exact_div(rem.lead_l(), b.lead_l());
    if (q.size() <= static_cast<std::size_t>(d)) q.resize(static_cast<std::size_t>(d) + 1);
    q[static_cast<std::size_t>(d)] = c;
    rem -= b.shift_up(static_cast<std::size_t>(d), 0) * c;
  }
  return Poly2(std::move(q));
}

// gcd normalized to lex-leading coefficient 1.
inline Poly2 gcd(const Poly2& x, const Poly2& y) {
  auto normalize = [](Poly2 p) { return p.is_zero() ? p : p * (1 / p.lead()); };
  if (x.is_zero()) return normalize(y);
  if (y.is_zero()) return normalize(x);
  const std::size_t la = static_cast<std::size_t>(std::min(x.low_l(), y.low_l()));
  const std::size_t lr = static_cast<std::size_t>(std::min(x.low_r(), y.low_r()));
  Poly2 a = x.shift_down(static_cast<std::size_t>(x.low_l()), static_cast<std::size_t>(x.low_r()));
  Poly2 b = y.shift_down(static_cast<std::size_t>(y.low_l()), static_cast<std::size_t>(y.low_r()));
  Poly2 mono = Poly2::monomial(1, la, lr);
  if (a.is_constant() || b.is_constant()) return mono;
  if (a.free_of_l() || b.free_of_l()) {
    UPoly g = gcd(a.content_l(), b.content_l());
    return normalize(Poly2(g) * mono);
  }
  UPoly g_cont = gcd(a.content_l(), b.content_l());
  a = primitive_l(a);
  b = primitive_l(b);
  if (a.deg_l() < b.deg_l()) std::swap(a, b);
  while (!b.is_zero() && !b.free_of_l()) {
    Poly2 r = prem(a, b);
    a = std::move(b);
    b = primitive_l(r);
  }
  // A nonzero l-free remainder means the primitive parts are coprime.
  Poly2 g = b.is_zero() ? a : Poly2(1);
  return normalize(g * g_cont * mono);
}

}  // namespace lk
