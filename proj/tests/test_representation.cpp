#include <gtest/gtest.h>

#include "lk/bareiss.hpp"
#include "lk/representation.hpp"

using namespace lk;

namespace {

using F = RatFunc2;
const F l = F::l(), r = F::r(), m = F(1) / r - r, il = F(1) / l, z = F(0), o = F(1);

Matrix<F> lit(const std::vector<std::vector<F>>& rows) { return Matrix<F>::from_rows(rows); }

// Displays for n = 3, 4, 5.
Matrix<F> G1_3() { return lit({{il, m, z}, {z, -m, o}, {z, o, z}}); }
Matrix<F> G2_3() { return lit({{z, z, o}, {z, il, m * il}, {o, z, -m}}); }

Matrix<F> G1_4() {
  return lit({{il, m, z, z, m * r, z},
              {z, -m, o, z, z, z},
              {z, o, z, z, z, z},
              {z, z, z, r, z, z},
              {z, z, z, z, -m, o},
              {z, z, z, z, o, z}});
}
Matrix<F> G2_4() {
  return lit({{z, z, o, z, z, z},
              {z, il, m * il, m, z, z},
              {o, z, -m, z, z, z},
              {z, z, z, -m, o, z},
              {z, z, z, o, z, z},
              {z, z, z, z, z, r}});
}
Matrix<F> G3_4() {
  return lit({{r, z, z, z, z, z},
              {z, z, z, z, o, z},
              {z, z, z, z, z, o},
              {z, z, z, il, m * il, m * il / r},
              {z, o, z, z, -m, z},
              {z, z, o, z, z, -m}});
}

Matrix<F> G1_5() {
  return lit({{il, m, z, z, m * r, z, z, z, m * r * r, z},
              {z, -m, o, z, z, z, z, z, z, z},
              {z, o, z, z, z, z, z, z, z, z},
              {z, z, z, r, z, z, z, z, z, z},
              {z, z, z, z, -m, o, z, z, z, z},
              {z, z, z, z, o, z, z, z, z, z},
              {z, z, z, z, z, z, r, z, z, z},
              {z, z, z, z, z, z, z, r, z, z},
              {z, z, z, z, z, z, z, z, -m, o},
              {z, z, z, z, z, z, z, z, o, z}});
}
Matrix<F> G2_5() {
  return lit({{z, z, o, z, z, z, z, z, z, z},
              {z, il, m * il, m, z, z, z, m * r, z, z},
              {o, z, -m, z, z, z, z, z, z, z},
              {z, z, z, -m, o, z, z, z, z, z},
              {z, z, z, o, z, z, z, z, z, z},
              {z, z, z, z, z, r, z, z, z, z},
              {z, z, z, z, z, z, r, z, z, z},
              {z, z, z, z, z, z, z, -m, o, z},
              {z, z, z, z, z, z, z, o, z, z},
              {z, z, z, z, z, z, z, z, z, r}});
}
Matrix<F> G3_5() {
  return lit({{r, z, z, z, z, z, z, z, z, z},
              {z, z, z, z, o, z, z, z, z, z},
              {z, z, z, z, z, o, z, z, z, z},
              {z, z, z, il, m * il, m * il / r, m, z, z, z},
              {z, o, z, z, -m, z, z, z, z, z},
              {z, z, o, z, z, -m, z, z, z, z},
              {z, z, z, z, z, z, -m, o, z, z},
              {z, z, z, z, z, z, o, z, z, z},
              {z, z, z, z, z, z, z, z, r, z},
              {z, z, z, z, z, z, z, z, z, r}});
}
Matrix<F> G4_5() {
  return lit({{r, z, z, z, z, z, z, z, z, z},
              {z, r, z, z, z, z, z, z, z, z},
              {z, z, r, z, z, z, z, z, z, z},
              {z, z, z, z, z, z, z, o, z, z},
              {z, z, z, z, z, z, z, z, o, z},
              {z, z, z, z, z, z, z, z, z, o},
              {z, z, z, z, z, z, il, m * il, m * il / r, m * il / (r * r)},
              {z, z, z, o, z, z, z, -m, z, z},
              {z, z, z, z, o, z, z, z, -m, z},
              {z, z, z, z, z, o, z, z, z, -m}});
}

}  // namespace

TEST(Representation, GoldenMatricesN3) {
  const auto L = build_matrices(3, generic_params());
  EXPECT_EQ(L.g(1), G1_3());
  EXPECT_EQ(L.g(2), G2_3());
}

TEST(Representation, GoldenMatricesN4) {
  const auto L = build_matrices(4, generic_params());
  EXPECT_EQ(L.g(1), G1_4());
  EXPECT_EQ(L.g(2), G2_4());
  EXPECT_EQ(L.g(3), G3_4());
}

TEST(Representation, GoldenMatricesN5) {
  const auto L = build_matrices(5, generic_params());
  EXPECT_EQ(L.g(1), G1_5());
  EXPECT_EQ(L.g(2), G2_5());
  EXPECT_EQ(L.g(3), G3_5());
  EXPECT_EQ(L.g(4), G4_5());
}

TEST(Representation, DeterminantOfGN5) {
  const auto L = build_matrices(5, generic_params());
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(det_gauss(L.g(i)), -r.pow(3) / l) << "i=" << i;
    EXPECT_EQ(det_bareiss(L.g(i)), -r.pow(3) / l) << "i=" << i;
  }
}

TEST(Representation, ConventionG1E1) {
  const auto L = build_matrices(3, generic_params());
  EXPECT_EQ(L.g(1) * L.e(1), il * L.e(1));
}

TEST(Representation, EAndInverseFormulas) {
  const auto p = generic_params();
  for (int n = 3; n <= 5; ++n) {
    const auto L = build_matrices(n, p);
    const auto I = Matrix<F>::identity(L.dim());
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(L.e(i), (l / m) * (L.g(i) * L.g(i) + m * L.g(i) - I));
      EXPECT_EQ(L.g(i) * L.ginv(i), I);
      EXPECT_EQ(L.ginv(i) * L.g(i), I);
    }
  }
}

class Relations : public ::testing::TestWithParam<int> {};

TEST_P(Relations, AllPassGeneric) {
  const auto rep = verify_relations(build_matrices(GetParam(), generic_params()));
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_TRUE(rep.all_passed());
}

INSTANTIATE_TEST_SUITE_P(N, Relations, ::testing::Values(3, 4, 5, 6));

TEST(Representation, RelationsAtSpecializations) {
  const RatFunc1 rr = RatFunc1::r();
  EXPECT_TRUE(verify_relations(build_matrices(5, params_at(-rr.pow(3)))).all_passed());
  EXPECT_TRUE(verify_relations(build_matrices(4, params_at(-rr.pow(3), Cyclo::cyclotomic_ring(16)))).all_passed());
}

TEST(Representation, RecursiveMatchesClosedForm) {
  for (int n = 4; n <= 6; ++n) {
    const auto a = build_matrices(n, generic_params());
    const auto b = build_matrices_recursive(n, generic_params());
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(a.g(i), b.g(i)) << "n=" << n << " i=" << i;
      EXPECT_EQ(a.e(i), b.e(i)) << "n=" << n << " i=" << i;
    }
  }
  const auto p = params_at(RatFunc1::r());
  const auto a = build_matrices(7, p);
  const auto b = build_matrices_recursive(7, p);
  for (int i = 1; i < 7; ++i) EXPECT_EQ(a.g(i), b.g(i)) << "n=7 i=" << i;
}

TEST(Representation, SpecializationPathsAgree) {
  const RatFunc1 rr = RatFunc1::r();
  const RatFunc1 f = -rr.pow(3);
  const auto gen = build_matrices(4, generic_params());
  const auto direct = build_matrices(4, params_at(f));
  const auto mapped = map_matrices(gen, params_at(f), [&](const F& a) { return specialize_l(a, f); });
  for (int i = 1; i < 4; ++i) {
    EXPECT_EQ(mapped.g(i), direct.g(i));
    EXPECT_EQ(mapped.e(i), direct.e(i));
  }
  const auto ring = Cyclo::cyclotomic_ring(16);
  const auto cyc = build_matrices(4, params_at(f, ring));
  const auto cmapped = map_matrices(gen, params_at(f, ring), [&](const F& a) { return specialize_l(a, f, ring); });
  for (int i = 1; i < 4; ++i) EXPECT_EQ(cmapped.g(i), cyc.g(i));
}

TEST(Representation, ActionColumnsAreSparseImages) {
  const auto p = generic_params();
  const int n = 5;
  const auto L = build_matrices(n, p);
  for (int i = 1; i < n; ++i)
    for (int b = 1; b <= dim_for(n); ++b) {
      const auto col = nu_action(n, i, root_at(b, n), p);
      std::vector<F> dense(L.dim());
      for (const auto& [w, v] : col) dense[static_cast<std::size_t>(w.position() - 1)] += v;
      for (std::size_t a = 0; a < L.dim(); ++a) EXPECT_EQ(L.g(i)(a, static_cast<std::size_t>(b - 1)), dense[a]);
    }
}

TEST(Representation, BadNodeThrows) { EXPECT_THROW(nu_action(4, 4, RootIndex{1, 2}, generic_params()), std::out_of_range); }
