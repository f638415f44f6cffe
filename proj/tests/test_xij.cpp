#include <gtest/gtest.h>

#include "lk/xij.hpp"

using namespace lk;

namespace {

using F = RatFunc2;
const F l = F::l(), r = F::r(), il = F(1) / l, ir = F(1) / r, z = F(0), o = F(1);
const F x = generic_params().x();

Matrix<F> t_matrix_of(int n) { return sum_matrix(build_matrices(n, generic_params())); }

Matrix<F> S3() { return Matrix<F>::from_rows({{x, o, l}, {o, x, il}, {il, l, x}}); }

Matrix<F> S4() {
  return Matrix<F>::from_rows({{x, o, l, z, r, l * r},
                               {o, x, il, o, l, z},
                               {il, l, x, r, (ir - r) * (r - l), l},
                               {z, o, ir, x, il, il * ir},
                               {ir, il, (r - ir) * (ir - il), l, x, il},
                               {il * ir, z, il, l * r, l, x}});
}

Matrix<F> S5() {
  const F r2 = r * r, ir2 = ir * ir;
  const F cr1 = (r - ir) * (l - r), cr2 = (r2 - o) * (l - r);
  const F cl1 = (ir - r) * (il - ir), cl2 = (ir2 - o) * (il - ir);
  return Matrix<F>::from_rows({
      {x, o, l, z, r, l * r, z, z, r2, l * r2},
      {o, x, il, o, l, z, z, r, l * r, z},
      {il, l, x, r, cr1, l, z, r2, cr2, l * r},
      {z, o, ir, x, il, il * ir, o, l, z, z},
      {ir, il, cl1, l, x, il, r, cr1, l, z},
      {il * ir, z, il, l * r, l, x, r2, cr2, cr1, l},
      {z, z, z, o, ir, ir2, x, il, il * ir, il * ir2},
      {z, ir, ir2, il, cl1, cl2, l, x, il, il * ir},
      {ir2, il * ir, cl2, z, il, cl1, l * r, l, x, il},
      {il * ir2, z, il * ir, z, z, il, l * r2, l * r, l, x},
  });
}

}  // namespace

TEST(Xij, DirectRulesMatchConjugation) {
  for (int n = 3; n <= 6; ++n) {
    const auto p = generic_params();
    const auto L = build_matrices(n, p);
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) {
        const auto X = xij_by_conjugation(L, i, j);
        for (int b = 1; b <= dim_for(n); ++b)
          EXPECT_EQ(X.row[static_cast<std::size_t>(b - 1)], xij_direct_coeff(n, i, j, root_at(b, n), p))
              << "n=" << n << " X_" << i << j << " sigma=" << root_at(b, n).str();
      }
  }
}

TEST(Xij, SingleNonzeroRow) {
  for (int n = 3; n <= 6; ++n) {
    const auto L = build_matrices(n, generic_params());
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) {
        const auto M = xij_matrix(L, i, j);
        const std::size_t target = static_cast<std::size_t>(RootIndex{i, j}.position() - 1);
        int nonzero_rows = 0;
        for (std::size_t a = 0; a < M.rows(); ++a) {
          bool any = false;
          for (std::size_t b = 0; b < M.cols(); ++b) any = any || !M(a, b).is_zero();
          if (any) {
            ++nonzero_rows;
            EXPECT_EQ(a, target);
          }
        }
        EXPECT_EQ(nonzero_rows, 1) << "n=" << n << " X_" << i << j;
      }
  }
}

TEST(Xij, SumMatrixDisplays) {
  EXPECT_EQ(t_matrix_of(3), S3());
  EXPECT_EQ(t_matrix_of(4), S4());
  EXPECT_EQ(t_matrix_of(5), S5());
}

TEST(Xij, KnownValues) {
  const auto p = generic_params();
  const auto L3 = build_matrices(3, p);
  const auto X12 = xij_by_conjugation(L3, 1, 2);
  EXPECT_EQ(X12.row, (std::vector<F>{x, o, l}));

  const auto L4 = build_matrices(4, p);
  const auto X24 = xij_by_conjugation(L4, 2, 4);
  EXPECT_EQ(X24.row[static_cast<std::size_t>(RootIndex{1, 3}.position() - 1)], (r - ir) * (ir - il));

  EXPECT_EQ(xij_direct_coeff(5, 1, 3, {2, 5}, p), (r * r - o) * (l - r));
  EXPECT_EQ(xij_direct_coeff(5, 3, 4, {4, 5}, p), o);
  EXPECT_EQ(xij_direct_coeff(5, 2, 4, {2, 4}, p), x);

  const RatFunc1 rr = RatFunc1::r();
  const auto q = params_at(-RatFunc1(1) / rr);
  const RatFunc1 ir1 = RatFunc1(1) / rr;
  EXPECT_EQ(xij_direct_coeff(5, 3, 5, {2, 4}, q), (ir1 - rr) * (-ir1 - rr));
}

TEST(Xij, DiagonalIsX) {
  for (int n = 3; n <= 6; ++n) {
    const auto T = sum_matrix_direct(n, generic_params());
    for (std::size_t a = 0; a < T.rows(); ++a) EXPECT_EQ(T(a, a), x);
  }
  const auto T = sum_matrix_direct(5, params_at(RatFunc1::r()));
  for (std::size_t a = 0; a < T.rows(); ++a) EXPECT_EQ(T(a, a), RatFunc1(2));
}

TEST(Xij, AtLeastSixOffDiagonalPerRowAndColumnN5) {
  const auto T = sum_matrix_direct(5, generic_params());
  for (std::size_t a = 0; a < 10; ++a) {
    int row = 0, col = 0;
    for (std::size_t b = 0; b < 10; ++b) {
      if (a == b) continue;
      row += T(a, b).is_zero() ? 0 : 1;
      col += T(b, a).is_zero() ? 0 : 1;
    }
    EXPECT_GE(row, 6);
    EXPECT_GE(col, 6);
  }
}

TEST(Xij, InvalidIndices) {
  EXPECT_THROW(xij_direct_coeff(4, 3, 2, {1, 2}, generic_params()), std::out_of_range);
  const auto L = build_matrices(3, generic_params());
  EXPECT_THROW(xij_matrix(L, 1, 4), std::out_of_range);
}
