#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lk/parse.hpp"
#include "lk/specialization.hpp"

using namespace lk;

namespace {

const RatFunc2 L = RatFunc2::l();
const RatFunc2 R = RatFunc2::r();

Poly2 random_poly2(std::mt19937& g) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
  Poly2 p;
  for (int t = 0; t < 3; ++t) p += Poly2::monomial(coef(g), static_cast<std::size_t>(deg(g)), static_cast<std::size_t>(deg(g)));
  return p;
}

RatFunc2 random_ratfunc(std::mt19937& g) {
  Poly2 d;
  while (d.is_zero()) d = random_poly2(g);
  return RatFunc2(random_poly2(g), d);
}

int totient(int m) {
  int t = 0;
  for (int k = 1; k <= m; ++k) t += std::gcd(k, m) == 1 ? 1 : 0;
  return t;
}

// Multiplicative order of r^2 by plain polynomial remainders.
int order_of_r2(const UPoly& modulus, int cap) {
  const UPoly r2 = UPoly::monomial(1, 2);
  UPoly acc = r2 % modulus;
  for (int k = 1; k <= cap; ++k) {
    if (acc.is_one()) return k;
    acc = (acc * r2) % modulus;
  }
  return 0;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational a(6, 4);
  a.canonicalize();
  EXPECT_EQ(a.get_num(), 3);
  EXPECT_EQ(a.get_den(), 2);
  Rational b(-2, -4);
  b.canonicalize();
  EXPECT_EQ(b, Rational(1, 2));
}

TEST(UPoly, DivisionAndGcd) {
  const UPoly r = UPoly::var();
  const UPoly a = (r - UPoly(1)) * (r + UPoly(2)) * (r * r + UPoly(1));
  const UPoly b = (r - UPoly(1)) * (r * r + UPoly(1)) * (r + UPoly(5));
  EXPECT_EQ(gcd(a, b), ((r - UPoly(1)) * (r * r + UPoly(1))).monic());
  auto [q, rem] = divmod(a, r - UPoly(1));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(q * (r - UPoly(1)), a);
  EXPECT_THROW(exact_div(a, r - UPoly(3)), std::logic_error);
}

TEST(Poly2, GcdInTwoVariables) {
  const Poly2 l = Poly2::l(), r = Poly2::r();
  const Poly2 common = l - r;
  const Poly2 a = common * (l + r * r);
  const Poly2 b = common * (l - Poly2(1)) * r;
  Poly2 g = gcd(a, b);
  EXPECT_EQ(g, common);
  EXPECT_EQ(exact_div(a, g), l + r * r);
}

TEST(FieldOps, KnownValues) {
  const RatFunc2 m = RatFunc2(1) / R - R;
  EXPECT_EQ(m.str(), "(1 - r^2)/(r)");

  const RatFunc1 r = RatFunc1::r();
  const auto p = params_at(-r.pow(3));
  EXPECT_EQ(p.x(), -(r.pow(4) + RatFunc1(1)) / r.pow(2));

  const RatFunc2 a = (L * L - R) / (L * R.pow(3));
  EXPECT_TRUE((a * a.inverse()).is_one());
}

TEST(FieldOps, CanonicalIdempotentAndCrossMultiplication) {
  std::mt19937 g(7);
  for (int t = 0; t < 60; ++t) {
    const RatFunc2 a = random_ratfunc(g);
    const RatFunc2 again(a.num(), a.den());
    EXPECT_EQ(again, a);
    EXPECT_EQ(again.str(), a.str());
    const RatFunc2 b = random_ratfunc(g);
    EXPECT_EQ(a == b, a.num() * b.den() == b.num() * a.den());
    if (!a.den().is_zero() && !a.den().is_one()) {
      const auto& lead = a.den().lead();
      EXPECT_EQ(lead, Rational(1));
    }
  }
}

TEST(FieldOps, FieldAxioms) {
  std::mt19937 g(11);
  for (int t = 0; t < 40; ++t) {
    const RatFunc2 a = random_ratfunc(g), b = random_ratfunc(g), c = random_ratfunc(g);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, RatFunc2(0));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(FieldOps, DivisionByZeroThrows) {
  EXPECT_THROW(L / RatFunc2(0), std::domain_error);
  EXPECT_THROW(RatFunc1(0).inverse(), std::domain_error);
}

TEST(Specialize, Examples) {
  const RatFunc1 r = RatFunc1::r();
  const auto g = generic_params();
  EXPECT_EQ(specialize_l(g.x(), r), RatFunc1(2));
  EXPECT_EQ(std::get<RatFunc2>(specialize(L * R, Specialization::generic())), L * R);
  const auto s = Specialization::l_to_cyclotomic(-r.pow(3), 16);
  EXPECT_TRUE((std::get<Cyclo>(specialize(R.pow(8), s)) + Cyclo(1)).is_zero());
}

TEST(Specialize, IsRingHomomorphism) {
  std::mt19937 g(3);
  const RatFunc1 f = RatFunc1::r().pow(2) + RatFunc1(3);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 25; ++t) {
    const RatFunc2 a = random_ratfunc(g), b = random_ratfunc(g);
    try {
      const RatFunc1 sa = specialize_l(a, f), sb = specialize_l(b, f);
      EXPECT_EQ(specialize_l(a + b, f), sa + sb);
      EXPECT_EQ(specialize_l(a * b, f), sa * sb);
      ++checked;
    } catch (const pole_error&) {
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Specialize, PoleNamesFactor) {
  const RatFunc2 a = RatFunc2(1) / (L - R);
  try {
    specialize_l(a, RatFunc1::r());
    FAIL() << "expected pole_error";
  } catch (const pole_error& e) {
    EXPECT_NE(std::string(e.what()).find("vanishes"), std::string::npos);
  }
}

TEST(Cyclotomic, Examples) {
  const UPoly r = UPoly::var();
  EXPECT_EQ(cyclotomic(1), r - UPoly(1));
  EXPECT_EQ(cyclotomic(12), r.pow(4) - r.pow(2) + UPoly(1));
  EXPECT_EQ(cyclotomic(16), r.pow(8) + UPoly(1));
}

TEST(Cyclotomic, ProductOverDivisorsIsRmMinusOne) {
  const UPoly r = UPoly::var();
  for (int m = 1; m <= 64; ++m) {
    UPoly prod(1);
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) prod *= cyclotomic(static_cast<unsigned>(d));
    EXPECT_EQ(prod, r.pow(static_cast<unsigned>(m)) - UPoly(1)) << "m=" << m;
    EXPECT_EQ(cyclotomic(static_cast<unsigned>(m)).degree(), totient(m)) << "m=" << m;
    EXPECT_TRUE((r.pow(static_cast<unsigned>(m)) - UPoly(1)) % cyclotomic(static_cast<unsigned>(m)) == UPoly());
  }
}

TEST(Cyclotomic, OrderOfRInQuotient) {
  for (unsigned m : {3u, 5u, 8u, 12u, 16u, 20u, 24u}) {
    const auto ring = Cyclo::cyclotomic_ring(m);
    const Cyclo r = Cyclo::r(ring);
    EXPECT_TRUE(r.pow(static_cast<int>(m)).is_one());
    for (unsigned d = 1; d < m; ++d) EXPECT_FALSE(r.pow(static_cast<int>(d)).is_one()) << m << " " << d;
  }
}

TEST(Cyclotomic, InverseAndNonInvertible) {
  const auto ring = Cyclo::cyclotomic_ring(16);
  const Cyclo a = Cyclo::r(ring) + Cyclo(2);
  EXPECT_TRUE((a * a.inverse()).is_one());

  const UPoly r = UPoly::var();
  const auto bad = Cyclo::ring(r * r - UPoly(1), "r^2-1");
  const Cyclo b = Cyclo::r(bad) - Cyclo(1);
  try {
    b.inverse();
    FAIL() << "expected non_invertible_error";
  } catch (const non_invertible_error& e) {
    EXPECT_EQ(e.gcd(), r - UPoly(1));
  }
}

TEST(Semisimple, MatchesMultiplicativeOrderOracle) {
  const RatFunc1 r = RatFunc1::r();
  EXPECT_TRUE(is_semisimple_point(Specialization::generic(), 100).semisimple);
  for (unsigned m : {12u, 16u, 20u, 24u}) {
    const int ord = order_of_r2(cyclotomic(m), 64);
    ASSERT_GT(ord, 0);
    const auto s = Specialization::l_to_cyclotomic(-r.pow(3), m);
    EXPECT_TRUE(is_semisimple_point(s, ord - 1).semisimple);
    const auto v = is_semisimple_point(s, ord);
    EXPECT_FALSE(v.semisimple);
    EXPECT_EQ(v.witness_k, ord);
  }
  const auto s16 = Specialization::l_to_cyclotomic(-r.pow(3), 16);
  EXPECT_TRUE(is_semisimple_point(s16, 7).semisimple);
  EXPECT_EQ(is_semisimple_point(s16, 8).witness_k, 8);
  EXPECT_TRUE(is_semisimple_point(Specialization::l_to_cyclotomic(-r.pow(3), 12), 5).semisimple);
}

TEST(Parse, Expressions) {
  const RatFunc1 r = RatFunc1::r();
  EXPECT_EQ(parse_r_expr("1/r^3"), RatFunc1(1) / r.pow(3));
  EXPECT_EQ(parse_r_expr("-r^3"), -r.pow(3));
  EXPECT_EQ(parse_r_expr("-(1/r)"), -RatFunc1(1) / r);
  EXPECT_EQ(parse_r_expr("r^-2 + 2*(r - 1)"), RatFunc1(1) / r.pow(2) + RatFunc1(2) * (r - RatFunc1(1)));
  EXPECT_THROW(parse_r_expr("1/(r-r)"), parse_error);
  EXPECT_THROW(parse_r_expr("l + 1"), parse_error);
  EXPECT_THROW(parse_r_expr("(r"), parse_error);
  EXPECT_EQ(parse_specialization("generic").kind, Specialization::Kind::Generic);
  EXPECT_EQ(parse_specialization("r", "cyclotomic:16").ring->modulus, cyclotomic(16));
  EXPECT_THROW(parse_specialization("0"), pole_error);
  EXPECT_THROW(parse_modulus("cyclotomic:x"), parse_error);
}
