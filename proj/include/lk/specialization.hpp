#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "lk/cyclo.hpp"
#include "lk/ratfunc.hpp"

namespace lk {

class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Generic, l -> f(r), or l -> f(r) inside Q[r]/(modulus).
struct Specialization {
  enum class Kind { Generic, LTo, LToAndQuotient };
  Kind kind = Kind::Generic;
  RatFunc1 f;
  std::shared_ptr<const QuotientRing> ring;

  static Specialization generic() { return {}; }
  static Specialization l_to(RatFunc1 f) { return {Kind::LTo, std::move(f), nullptr}; }
  static Specialization l_to(RatFunc1 f, std::shared_ptr<const QuotientRing> ring) {
    return {Kind::LToAndQuotient, std::move(f), std::move(ring)};
  }
  static Specialization l_to_cyclotomic(RatFunc1 f, unsigned m) {
    return l_to(std::move(f), Cyclo::cyclotomic_ring(m));
  }

  std::string str() const {
    switch (kind) {
      case Kind::Generic: return "generic";
      case Kind::LTo: return "l=" + f.str();
      case Kind::LToAndQuotient:
        return "l=" + f.str() + " mod " + (ring->label.empty() ? ring->modulus.str() : ring->label);
    }
    return {};
  }
};

// Coefficient-field parameters driving every builder.
template <class F>
struct Params {
  F l;
  F r;
  F m() const { return F(1) / r - r; }
  F x() const { return F(1) - (l - F(1) / l) / m(); }
};

inline Params<RatFunc2> generic_params() { return {RatFunc2::l(), RatFunc2::r()}; }
inline Params<RatFunc1> params_at(const RatFunc1& f) { return {f, RatFunc1::r()}; }
inline Params<Cyclo> params_at(const RatFunc1& f, const std::shared_ptr<const QuotientRing>& ring) {
  Params<Cyclo> p{to_quotient(f, ring), Cyclo::r(ring)};
  if (p.l.is_zero()) throw pole_error("l vanishes modulo " + ring->modulus.str());
  if ((Cyclo(1) - p.r * p.r).is_zero())
    throw pole_error("m = 1/r - r vanishes modulo " + ring->modulus.str());
  return p;
}

namespace detail {

// Sum_a A_a(r) p^a q^(D-a) for A = sum_a A_a l^a.
inline UPoly homogenized_eval(const Poly2& A, const UPoly& p, const UPoly& q, int D) {
  UPoly acc;
  const auto& c = A.coeffs();
  for (int a = 0; a < static_cast<int>(c.size()); ++a) {
    if (c[static_cast<std::size_t>(a)].is_zero()) continue;
    acc += c[static_cast<std::size_t>(a)] * p.pow(static_cast<unsigned>(a)) * q.pow(static_cast<unsigned>(D - a));
  }
  return acc;
}

inline std::string vanishing_factor(const Poly2& den, const RatFunc1& f) {
  for (int k = 0; k <= 64; ++k) {
    for (int eps : {1, -1}) {
      // l - eps r^k and r^k l - eps
      Poly2 c1 = Poly2::l() - Poly2::monomial(eps, 0, static_cast<std::size_t>(k));
      Poly2 c2 = Poly2::monomial(1, 1, static_cast<std::size_t>(k)) - Poly2(eps);
      for (const Poly2& c : {c1, c2}) {
        Poly2 g = gcd(den, c);
        if (g.is_constant()) continue;
        auto cf = detail::homogenized_eval(c, f.num(), f.den(), 1);
        if (cf.is_zero()) return c.str();
      }
    }
  }
  return den.str();
}

}  // namespace detail

inline RatFunc1 specialize_l(const RatFunc2& a, const RatFunc1& f) {
  const int dn = a.num().deg_l(), dd = a.den().deg_l();
  const int D = std::max(dn, dd);
  UPoly N = detail::homogenized_eval(a.num(), f.num(), f.den(), D);
  UPoly Dv = detail::homogenized_eval(a.den(), f.num(), f.den(), D);
  if (Dv.is_zero())
    throw pole_error("pole: factor " + detail::vanishing_factor(a.den(), f) + " vanishes at l=" + f.str());
  return RatFunc1(std::move(N), std::move(Dv));
}

inline Cyclo specialize_l(const RatFunc2& a, const RatFunc1& f, const std::shared_ptr<const QuotientRing>& ring) {
  const int dn = a.num().deg_l(), dd = a.den().deg_l();
  const int D = std::max(dn, dd);
  UPoly N = detail::homogenized_eval(a.num(), f.num(), f.den(), D);
  UPoly Dv = detail::homogenized_eval(a.den(), f.num(), f.den(), D);
  if (Dv.is_zero())
    throw pole_error("pole: factor " + detail::vanishing_factor(a.den(), f) + " vanishes at l=" + f.str());
  Cyclo dq(Dv, ring);
  if (dq.is_zero()) {
    UPoly g = gcd(Dv, ring->modulus);
    throw pole_error("pole: denominator " + Dv.str() + " vanishes modulo " + ring->modulus.str() + " (common factor " +
                     g.str() + ")");
  }
  // Homogenizing factor q^D cancels between N and Dv.
  return Cyclo(N, ring) / dq;
}

inline Cyclo reduce(const RatFunc1& a, const std::shared_ptr<const QuotientRing>& ring) { return to_quotient(a, ring); }

using AnyField = std::variant<RatFunc2, RatFunc1, Cyclo>;

inline AnyField specialize(const RatFunc2& a, const Specialization& s) {
  switch (s.kind) {
    case Specialization::Kind::Generic: return a;
    case Specialization::Kind::LTo: return specialize_l(a, s.f);
    case Specialization::Kind::LToAndQuotient: return specialize_l(a, s.f, s.ring);
  }
  return a;
}

struct SemisimpleVerdict {
  bool semisimple = true;
  int witness_k = 0;
};

// (r^2)^k != 1 for 1 <= k <= n in the target field.
inline SemisimpleVerdict is_semisimple_point(const Specialization& s, int n) {
  if (s.kind != Specialization::Kind::LToAndQuotient) return {};
  Cyclo r2 = Cyclo::r(s.ring) * Cyclo::r(s.ring);
  Cyclo acc = r2;
  for (int k = 1; k <= n; ++k) {
    if (acc.is_one()) return {false, k};
    acc *= r2;
  }
  return {};
}

}  // namespace lk
