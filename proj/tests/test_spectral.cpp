#include <gtest/gtest.h>

#include <cstdlib>
#include <map>

#include "lk/spectral.hpp"

using namespace lk;

namespace {

const RatFunc1 r = RatFunc1::r();
RatFunc1 rp(int k) { return r.pow(k); }
Specialization at(const RatFunc1& f) { return Specialization::l_to(f); }

// Root l = eps r^k -> multiplicity.
using Mults = std::map<std::pair<int, int>, int>;

Mults mults(const LocusReport& rep) {
  Mults m;
  for (const auto& f : rep.factors) m[{f.eps, f.k}] = f.multiplicity;
  return m;
}

}  // namespace

TEST(Locus, Multiplicities3) {
  const auto rep = reducibility_locus(3);
  EXPECT_EQ(mults(rep), (Mults{{{-1, 3}, 1}, {{-1, 0}, 2}, {{1, 0}, 2}, {{1, -3}, 1}}));
  EXPECT_EQ(rep.residual_l_degree(), 0);
  EXPECT_TRUE(rep.reconstructs());
}

TEST(Locus, Multiplicities4) {
  const auto rep = reducibility_locus(4);
  EXPECT_EQ(mults(rep), (Mults{{{1, 1}, 2}, {{-1, 3}, 3}, {{1, -1}, 3}, {{-1, -1}, 3}, {{1, -5}, 1}}));
  EXPECT_EQ(rep.residual_l_degree(), 0);
  EXPECT_TRUE(rep.reconstructs());
}

TEST(Locus, Multiplicities5) {
  const auto rep = reducibility_locus(5);
  EXPECT_EQ(mults(rep), (Mults{{{1, 1}, 5}, {{-1, 3}, 6}, {{1, -2}, 4}, {{-1, -2}, 4}, {{1, -7}, 1}}));
  EXPECT_EQ(rep.residual_l_degree(), 0);
  EXPECT_TRUE(rep.reconstructs());
}

TEST(Locus, Multiplicities6) {
  const auto rep = reducibility_locus(6);
  EXPECT_EQ(mults(rep), (Mults{{{1, 1}, 9}, {{-1, 3}, 10}, {{1, -3}, 5}, {{-1, -3}, 5}, {{1, -9}, 1}}));
  EXPECT_EQ(rep.residual_l_degree(), 0);
  EXPECT_TRUE(rep.reconstructs());
}

TEST(Locus, MinusR3MultiplicityFollowsBinomial) {
  for (int n = 4; n <= 6; ++n) {
    const auto rep = reducibility_locus(n);
    EXPECT_EQ(rep.multiplicity_of(-1, 3), (n - 1) * (n - 2) / 2);
    EXPECT_FALSE(rep.multiplicity_of(1, 3).has_value());
    EXPECT_EQ(rep.multiplicity_of(1, 1), n * (n - 3) / 2);
  }
}

TEST(Locus, ResidualIsReportedNotFatal) {
  const RatFunc2 L = RatFunc2::l(), R = RatFunc2::r();
  const RatFunc2 d = (L - R) * (L * L + R + RatFunc2(1)) / (L * R);
  const auto rep = locus_from_det(3, d);
  EXPECT_EQ(rep.factors.size(), 1u);
  EXPECT_EQ(rep.residual_l_degree(), 2);
  EXPECT_TRUE(rep.reconstructs());
}

TEST(Det, BareissMatchesGaussOracle) {
  for (int n = 3; n <= 4; ++n) {
    const auto T = t_matrix(n, generic_params());
    EXPECT_EQ(det_bareiss(T), det_gauss(T)) << "n=" << n;
  }
  for (const auto& f : {r, -rp(3), rp(2), rp(-2) + RatFunc1(1)}) {
    const auto T = t_matrix(5, params_at(f));
    EXPECT_EQ(det_bareiss(T), det_gauss(T)) << f.str();
  }
}

TEST(Det, KnownValues) {
  EXPECT_TRUE(is_zero(det_T(4, at(r))));
  EXPECT_FALSE(is_zero(det_T(5, at(rp(2)))));
  const RatFunc2 g = std::get<RatFunc2>(det_T(3, Specialization::generic()));
  EXPECT_EQ(specialize_l(g, rp(2)), std::get<RatFunc1>(det_T(3, at(rp(2)))));
}

TEST(Det, SizeGuard) {
  EXPECT_EQ(size_guard(), 6);
  EXPECT_THROW(det_T(7, Specialization::generic()), size_guard_error);
  ::setenv("LK_SIZE_GUARD", "3", 1);
  EXPECT_EQ(size_guard(), 3);
  EXPECT_THROW(det_T(4, Specialization::generic()), size_guard_error);
  ::unsetenv("LK_SIZE_GUARD");
  EXPECT_NO_THROW(det_T(7, at(rp(2))));
}

TEST(Det, PointChecksN7) {
  const int n = 7;
  for (const auto& f : {r, -rp(3), rp(3 - n), -rp(3 - n), rp(3 - 2 * n)})
    EXPECT_TRUE(is_zero(det_T(n, at(f)))) << f.str();
  EXPECT_FALSE(is_zero(det_T(n, at(rp(2)))));
}

TEST(Kernel, Examples) {
  const auto k5 = kernel(5, at(r));
  EXPECT_EQ(k5.dim, 5);
  EXPECT_EQ(kernel(6, at(-rp(3))).dim, 10);
  EXPECT_EQ(kernel(4, Specialization::l_to_cyclotomic(-rp(3), 16)).dim, 4);
  EXPECT_THROW(kernel(4, Specialization::generic()), unsupported_error);
}

TEST(Kernel, BasisIsReducedAndAnnihilated) {
  for (const auto& [n, f] : std::vector<std::pair<int, RatFunc1>>{{4, r}, {5, -rp(3)}, {5, rp(-2)}, {6, rp(-9)}}) {
    const auto T = t_matrix(n, params_at(f));
    const auto basis = kernel_basis(n, params_at(f));
    EXPECT_EQ(static_cast<int>(basis.size() + rank(T)), dim_for(n));
    std::vector<std::size_t> pivots;
    for (const auto& v : basis) {
      EXPECT_TRUE(is_zero_vector(T * v));
      std::size_t p = 0;
      while (v[p].is_zero()) ++p;
      EXPECT_TRUE(v[p].is_one());
      pivots.push_back(p);
    }
    for (std::size_t k = 1; k < pivots.size(); ++k) EXPECT_LT(pivots[k - 1], pivots[k]);
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (a != b) EXPECT_TRUE(basis[b][pivots[a]].is_zero());
  }
}

TEST(Kernel, InvariantUnderGenerators) {
  for (const auto& [n, f] : std::vector<std::pair<int, RatFunc1>>{{4, -rp(3)}, {5, r}, {5, rp(-7)}, {6, -rp(-3)}}) {
    const auto p = params_at(f);
    const auto L = build_matrices(n, p);
    const auto T = sum_matrix(L);
    for (const auto& v : kernel_basis(n, p))
      for (int k = 1; k < n; ++k) EXPECT_TRUE(is_zero_vector(T * (L.g(k) * v))) << "n=" << n << " k=" << k;
  }
  const auto ring = Cyclo::cyclotomic_ring(20);
  const auto p = params_at(-rp(3), ring);
  const auto L = build_matrices(5, p);
  const auto T = sum_matrix(L);
  for (const auto& v : nullspace(T))
    for (int k = 1; k < 5; ++k) EXPECT_TRUE(is_zero_vector(T * (L.g(k) * v)));
}

TEST(Submatrix, Fixtures) {
  EXPECT_EQ(std::get<RatFunc1>(submatrix_det(5, at(r), {1, 2, 3, 4, 7}, {1, 2, 3, 4, 7})),
            (rp(2) + RatFunc1(1)).pow(2) / rp(2));
  EXPECT_TRUE(is_zero(submatrix_det(6, at(r), {1, 2, 3, 4, 7}, {1, 2, 3, 4, 12})));
  EXPECT_EQ(std::get<RatFunc1>(submatrix_det(6, at(-rp(3)), {1, 3, 4, 7}, {1, 3, 4, 12})), rp(9));
  EXPECT_THROW(submatrix_det(5, at(r), {1, 2}, {1}), std::invalid_argument);
}

TEST(Submatrix, RankWitnessIsFirstInvertible) {
  const auto w = rank_witness(5, at(r), 5);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->rows, (std::vector<int>{1, 2, 3, 4, 7}));
  EXPECT_EQ(w->cols, (std::vector<int>{1, 2, 3, 4, 7}));
  EXPECT_EQ(w->det, to_string(submatrix_det(5, at(r), w->rows, w->cols)));
  // rank T(5) at l = r is 5, so no 6x6 minor is invertible.
  EXPECT_FALSE(rank_witness(5, at(r), 6).has_value());
}

TEST(Sn, ClosedFormAgainstDirectMinor) {
  for (int n = 5; n <= 8; ++n) {
    EXPECT_TRUE(det_Sn_formula_check(n)) << "n=" << n;
    auto [R, C] = sn_indices(n);
    EXPECT_EQ(std::get<RatFunc1>(submatrix_det(n, at(-rp(3)), R, C)), det_sn_closed_form(n)) << "n=" << n;
  }
  EXPECT_EQ(det_sn_closed_form(5),
            (RatFunc1(1) + rp(4) + rp(8) + rp(12) + rp(16)) / rp(8));
  EXPECT_EQ(sn_indices(6).first, (std::vector<int>{1, 3, 4, 7, 11}));
  EXPECT_EQ(sn_indices(6).second, (std::vector<int>{1, 3, 4, 7, 12}));
}
