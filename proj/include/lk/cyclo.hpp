#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "lk/ratfunc.hpp"
#include "lk/upoly.hpp"

namespace lk {

// Phi_m(r) = (r^m - 1) / prod_{d | m, d < m} Phi_d(r).
inline UPoly cyclotomic(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<unsigned, UPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  UPoly p = UPoly::monomial(1, m) - UPoly(1);
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = exact_div(p, cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, p);
  return p;
}

class non_invertible_error : public std::domain_error {
 public:
  non_invertible_error(const std::string& what, UPoly g) : std::domain_error(what), gcd_(std::move(g)) {}
  const UPoly& gcd() const { return gcd_; }

 private:
  UPoly gcd_;
};

struct QuotientRing {
  UPoly modulus;
  std::string label;
};

// Element of Q[r]/(modulus). Elements without a ring are constants.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long c) : v_(c) {}
  Cyclo(const Rational& c) : v_(c) {}
  Cyclo(UPoly v, std::shared_ptr<const QuotientRing> ring) : v_(std::move(v)), ring_(std::move(ring)) {
    if (ring_) v_ = v_ % ring_->modulus;
  }

  static std::shared_ptr<const QuotientRing> ring(const UPoly& modulus, std::string label = {}) {
    if (modulus.degree() < 1) throw std::invalid_argument("quotient modulus must have degree >= 1");
    return std::make_shared<const QuotientRing>(QuotientRing{modulus.monic(), std::move(label)});
  }
  static std::shared_ptr<const QuotientRing> cyclotomic_ring(unsigned m) {
    return ring(cyclotomic(m), "cyclotomic:" + std::to_string(m));
  }
  static Cyclo r(const std::shared_ptr<const QuotientRing>& ring) { return Cyclo(UPoly::var(), ring); }

  const UPoly& value() const { return v_; }
  const std::shared_ptr<const QuotientRing>& ring_ptr() const { return ring_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_.is_one(); }
  std::size_t term_count() const { return v_.term_count(); }

  Cyclo operator-() const { return Cyclo(-v_, ring_, raw{}); }
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) { return Cyclo(a.v_ + b.v_, pick(a, b), raw{}); }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return Cyclo(a.v_ - b.v_, pick(a, b), raw{}); }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto rg = pick(a, b);
    UPoly p = a.v_ * b.v_;
    if (rg && p.degree() >= rg->modulus.degree()) p = p % rg->modulus;
    return Cyclo(std::move(p), rg, raw{});
  }
  Cyclo inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in quotient ring");
    if (v_.is_constant()) return Cyclo(UPoly(1 / v_.lead()), ring_, raw{});
    auto [g, s] = inverse_mod(v_, ring_->modulus);
    if (!g.is_one())
      throw non_invertible_error("element " + v_.str() + " is not invertible modulo " + ring_->modulus.str() +
                                     ": gcd = " + g.str(),
                                 g);
    return Cyclo(std::move(s), ring_, raw{});
  }
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) {
    Cyclo inv = b.inverse();
    return a * inv;
  }
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result(1), base = *this;
    result.ring_ = ring_;
    unsigned u = static_cast<unsigned>(e);
    while (u) {
      if (u & 1u) result *= base;
      u >>= 1u;
      if (u) base *= base;
    }
    return result;
  }

  std::string str() const { return v_.str(); }

 private:
  struct raw {};
  Cyclo(UPoly v, std::shared_ptr<const QuotientRing> ring, raw) : v_(std::move(v)), ring_(std::move(ring)) {}
  static std::shared_ptr<const QuotientRing> pick(const Cyclo& a, const Cyclo& b) {
    return a.ring_ ? a.ring_ : b.ring_;
  }

  UPoly v_;
  std::shared_ptr<const QuotientRing> ring_;
};

// Reduces a Q(r) element into Q[r]/(modulus).
inline Cyclo to_quotient(const RatFunc1& a, const std::shared_ptr<const QuotientRing>& ring) {
  Cyclo num(a.num(), ring), den(a.den(), ring);
  if (den.is_zero()) {
    UPoly g = gcd(a.den(), ring->modulus);
    throw non_invertible_error("pole: denominator " + a.den().str() + " vanishes modulo " + ring->modulus.str() +
                                   " (common factor " + g.str() + ")",
                               g);
  }
  return num / den;
}

}  // namespace lk
