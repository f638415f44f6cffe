#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lk/matrix.hpp"
#include "lk/poly2.hpp"
#include "lk/ratfunc.hpp"

namespace lk {
namespace detail {

inline Poly2 lcm(const Poly2& a, const Poly2& b) {
  if (a.is_one()) return b;
  if (b.is_one() || a == b) return a;
  return exact_div(a * b, gcd(a, b));
}

inline Integer coefficient_lcm(const Poly2& p) {
  Integer d(1);
  for (const auto& u : p.coeffs())
    for (const auto& q : u.coeffs())
      if (sgn(q) != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

inline Integer one_norm(const Poly2& p) {
  Integer s(0);
  for (const auto& u : p.coeffs())
    for (const auto& q : u.coeffs()) s += abs(q.get_num());
  return s;
}

// Value of p at r = 2^B, l = 2^(B*stride); p must have integer coefficients.
inline Integer pack(const Poly2& p, std::size_t B, std::size_t stride) {
  Integer acc(0), t;
  const auto& c = p.coeffs();
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c[a].size(); ++b) {
      const Rational& q = c[a].coeff(b);
      if (sgn(q) == 0) continue;
      mpz_mul_2exp(t.get_mpz_t(), q.get_num_mpz_t(), B * (a * stride + b));
      acc += t;
    }
  return acc;
}

// Inverse of pack for coefficients bounded by 2^(B-1) in absolute value; B is a multiple of 64.
inline Poly2 unpack(const Integer& value, std::size_t B, std::size_t stride) {
  if (value == 0) return Poly2();
  const bool neg = value < 0;
  Integer v = abs(value);
  const std::size_t limbs_per_slot = B / 64;
  std::size_t count = 0;
  std::vector<std::uint64_t> limbs((mpz_sizeinbase(v.get_mpz_t(), 2) + 63) / 64 + 1, 0);
  mpz_export(limbs.data(), &count, -1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
  limbs.resize(count);
  const std::size_t slots = (count + limbs_per_slot - 1) / limbs_per_slot + 1;
  limbs.resize(slots * limbs_per_slot, 0);
  std::vector<UPoly> rows;
  std::vector<std::vector<Rational>> dense;
  Integer half, full, d;
  mpz_setbit(full.get_mpz_t(), B);
  mpz_setbit(half.get_mpz_t(), B - 1);
  bool carry = false;
  for (std::size_t k = 0; k < slots; ++k) {
    mpz_import(d.get_mpz_t(), limbs_per_slot, -1, sizeof(std::uint64_t), 0, 0, limbs.data() + k * limbs_per_slot);
    if (carry) d += 1;
    carry = false;
    if (d >= half) {
      d -= full;
      carry = true;
    }
    if (d == 0) continue;
    const std::size_t a = k / stride, b = k % stride;
    if (dense.size() <= a) dense.resize(a + 1);
    if (dense[a].size() <= b) dense[a].resize(b + 1, Rational(0));
    dense[a][b] = neg ? Rational(-d) : Rational(d);
  }
  if (carry) throw std::logic_error("kronecker unpack overflow");
  for (auto& v2 : dense) rows.push_back(UPoly(std::move(v2)));
  return Poly2(std::move(rows));
}

// Fraction-free Bareiss determinant of an integer matrix.
inline Integer det_integer(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return Integer(1);
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Integer(0);
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer d = a[n - 1][n - 1];
  return sign < 0 ? Integer(-d) : d;
}

// Determinant of a square matrix over Z[l, r] via a Kronecker evaluation point.
inline Poly2 det_integer_poly2(const std::vector<std::vector<Poly2>>& P) {
  const std::size_t n = P.size();
  if (n == 0) return Poly2(1);
  std::size_t Dl = 0, Dr = 0;
  Integer bound(1);
  for (const auto& row : P) {
    int ml = 0, mr = 0;
    Integer s(0);
    for (const auto& p : row) {
      ml = std::max(ml, p.deg_l());
      mr = std::max(mr, p.deg_r());
      s += one_norm(p);
    }
    Dl += static_cast<std::size_t>(ml);
    Dr += static_cast<std::size_t>(mr);
    bound *= s;
  }
  if (bound == 0) return Poly2();
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;
  const std::size_t B = (bits + 63) / 64 * 64;
  const std::size_t stride = Dr + 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = pack(P[i][j], B, stride);
  (void)Dl;
  return unpack(det_integer(std::move(a)), B, stride);
}

}  // namespace detail

// Clears each row's denominator LCM, runs fraction-free elimination over Z[l, r], divides back.
inline RatFunc2 det_bareiss(const Matrix<RatFunc2>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = M.rows();
  std::vector<std::vector<Poly2>> P(n);
  Poly2 scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Poly2 L(1);
    for (std::size_t j = 0; j < n; ++j)
      if (!M(i, j).is_zero()) L = detail::lcm(L, M(i, j).den());
    Integer c(1);
    P[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (M(i, j).is_zero()) continue;
      P[i][j] = M(i, j).num() * exact_div(L, M(i, j).den());
      Integer cj = detail::coefficient_lcm(P[i][j]);
      mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), cj.get_mpz_t());
    }
    for (auto& p : P[i]) p *= Rational(c);
    scale *= L * Rational(c);
  }
  return RatFunc2(detail::det_integer_poly2(P), scale);
}

inline RatFunc1 det_bareiss(const Matrix<RatFunc1>& M) {
  Matrix<RatFunc2> lifted = M.map([](const RatFunc1& a) { return RatFunc2(Poly2(a.num()), Poly2(a.den())); });
  RatFunc2 d = det_bareiss(lifted);
  return RatFunc1(d.num().coeff(0), d.den().coeff(0));
}

}  // namespace lk
