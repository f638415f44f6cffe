#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "lk/poly2.hpp"
#include "lk/upoly.hpp"

namespace lk {

// Element of Q(l, r): reduced fraction with lex-monic denominator.
class RatFunc2 {
 public:
  RatFunc2() : num_(), den_(1) {}
  RatFunc2(long c) : num_(c), den_(1) {}
  RatFunc2(const Rational& c) : num_(c), den_(1) {}
  RatFunc2(const Poly2& p) : num_(p), den_(1) {}
  RatFunc2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero in Q(l,r)");
    normalize();
  }

  static RatFunc2 l() { return RatFunc2(Poly2::l()); }
  static RatFunc2 r() { return RatFunc2(Poly2::r()); }

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  std::size_t term_count() const { return num_.term_count() + den_.term_count(); }
  bool free_of_l() const { return num_.free_of_l() && den_.free_of_l(); }

  RatFunc2 operator-() const {
    RatFunc2 t = *this;
    t.num_ = -t.num_;
    return t;
  }
  friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc2(a.num_ + b.num_, a.den_);
    return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) { return a + (-b); }
  friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc2();
    if (a.den_.is_one() && b.den_.is_one()) {
      RatFunc2 t;
      t.num_ = a.num_ * b.num_;
      return t;
    }
    return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q(l,r)");
    return RatFunc2(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc2& operator+=(const RatFunc2& o) { return *this = *this + o; }
  RatFunc2& operator-=(const RatFunc2& o) { return *this = *this - o; }
  RatFunc2& operator*=(const RatFunc2& o) { return *this = *this * o; }
  RatFunc2& operator/=(const RatFunc2& o) { return *this = *this / o; }
  RatFunc2 inverse() const { return RatFunc2(1) / *this; }

  friend bool operator==(const RatFunc2& a, const RatFunc2& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc2& a, const RatFunc2& b) { return !(a == b); }

  RatFunc2 pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc2 t;
    t.num_ = num_.pow(static_cast<unsigned>(e));
    t.den_ = den_.pow(static_cast<unsigned>(e));
    return t;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly2(1);
      return;
    }
    if (!den_.is_constant()) {
      const int ml = std::min(num_.low_l(), den_.low_l());
      const int mr = std::min(num_.low_r(), den_.low_r());
      if (ml > 0 || mr > 0) {
        num_ = num_.shift_down(static_cast<std::size_t>(ml), static_cast<std::size_t>(mr));
        den_ = den_.shift_down(static_cast<std::size_t>(ml), static_cast<std::size_t>(mr));
      }
      if (!den_.is_monomial() && !num_.is_monomial()) {
        Poly2 g = gcd(num_, den_);
        if (!g.is_constant()) {
          num_ = exact_div(num_, g);
          den_ = exact_div(den_, g);
        }
      }
    }
    const Rational& c = den_.lead();
    if (c != 1) {
      Rational inv = 1 / c;
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly2 num_;
  Poly2 den_;
};

// Element of Q(r): reduced fraction with monic denominator.
class RatFunc1 {
 public:
  RatFunc1() : num_(), den_(1) {}
  RatFunc1(long c) : num_(c), den_(1) {}
  RatFunc1(const Rational& c) : num_(c), den_(1) {}
  RatFunc1(const UPoly& p) : num_(p), den_(1) {}
  RatFunc1(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero in Q(r)");
    normalize();
  }

  static RatFunc1 r() { return RatFunc1(UPoly::var()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  std::size_t term_count() const { return num_.term_count() + den_.term_count(); }

  RatFunc1 operator-() const {
    RatFunc1 t = *this;
    t.num_ = -t.num_;
    return t;
  }
  friend RatFunc1 operator+(const RatFunc1& a, const RatFunc1& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc1(a.num_ + b.num_, a.den_);
    return RatFunc1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc1 operator-(const RatFunc1& a, const RatFunc1& b) { return a + (-b); }
  friend RatFunc1 operator*(const RatFunc1& a, const RatFunc1& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc1();
    if (a.den_.is_one() && b.den_.is_one()) {
      RatFunc1 t;
      t.num_ = a.num_ * b.num_;
      return t;
    }
    return RatFunc1(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc1 operator/(const RatFunc1& a, const RatFunc1& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q(r)");
    return RatFunc1(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc1& operator+=(const RatFunc1& o) { return *this = *this + o; }
  RatFunc1& operator-=(const RatFunc1& o) { return *this = *this - o; }
  RatFunc1& operator*=(const RatFunc1& o) { return *this = *this * o; }
  RatFunc1& operator/=(const RatFunc1& o) { return *this = *this / o; }
  RatFunc1 inverse() const { return RatFunc1(1) / *this; }

  friend bool operator==(const RatFunc1& a, const RatFunc1& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc1& a, const RatFunc1& b) { return !(a == b); }

  RatFunc1 pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc1 t;
    t.num_ = num_.pow(static_cast<unsigned>(e));
    t.den_ = den_.pow(static_cast<unsigned>(e));
    return t;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = UPoly(1);
      return;
    }
    if (!den_.is_constant()) {
      const int low = std::min(num_.low_degree(), den_.low_degree());
      if (low > 0) {
        num_ = num_.shift_down(static_cast<std::size_t>(low));
        den_ = den_.shift_down(static_cast<std::size_t>(low));
      }
      if (!den_.is_monomial() && !num_.is_monomial()) {
        UPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
          num_ = exact_div(num_, g);
          den_ = exact_div(den_, g);
        }
      }
    }
    const Rational& c = den_.lead();
    if (c != 1) {
      Rational inv = 1 / c;
      num_ *= inv;
      den_ *= inv;
    }
  }

  UPoly num_;
  UPoly den_;
};

}  // namespace lk
