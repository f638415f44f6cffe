#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lk/representation.hpp"

namespace lk {

// nu(X_ij) compressed to its single nonzero row, at position(w_ij).
template <class F>
struct XOperator {
  int i = 0, j = 0;
  std::vector<F> row;
};

class structure_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Full matrix of g_{j-1} ... g_{i+1} e_i g_{i+1}^{-1} ... g_{j-1}^{-1}.
template <class F>
Matrix<F> xij_matrix(const LKMatrices<F>& L, int i, int j) {
  if (i < 1 || i >= j || j > L.n) throw std::out_of_range("invalid X_ij indices");
  Matrix<F> M = L.e(i);
  for (int k = i + 1; k <= j - 1; ++k) M = L.g(k) * M * L.ginv(k);
  return M;
}

template <class F>
XOperator<F> xij_by_conjugation(const LKMatrices<F>& L, int i, int j) {
  const Matrix<F> M = xij_matrix(L, i, j);
  const std::size_t target = static_cast<std::size_t>(RootIndex{i, j}.position() - 1);
  for (std::size_t a = 0; a < M.rows(); ++a) {
    if (a == target) continue;
    for (std::size_t b = 0; b < M.cols(); ++b)
      if (!M(a, b).is_zero())
        throw structure_error("X_" + std::to_string(i) + "," + std::to_string(j) + " has a nonzero entry outside row " +
                              std::to_string(target + 1));
  }
  return {i, j, M.row(target)};
}

// Coefficient of w_ij in X_ij . w_st, by case dispatch on the relative position of (s, t).
template <class F>
F xij_direct_coeff(int n, int i, int j, const RootIndex& sigma, const Params<F>& p) {
  if (i < 1 || i >= j || j > n) throw std::out_of_range("invalid X_ij indices");
  const int s = sigma.i, t = sigma.j;
  const F& l = p.l;
  const F& r = p.r;
  if (s == i && t == j) return p.x();
  if (t == j && s > i) return l * r.pow(s - i - 1);                          // (MR)_k
  if (s == i && t < j) return F(1) / (l * r.pow(j - t - 1));                 // (ML)_k
  if (s == i && t > j) return l * r.pow(t - j - 1);                          // (TR)_k
  if (t == j && s < i) return F(1) / (l * r.pow(i - s - 1));                 // (TL)_k
  if (s == j) return r.pow((t - j - 1) + (j - i - 1));                       // (SR)_k
  if (t == i) return F(1) / r.pow((i - s - 1) + (j - i - 1));                // (SL)_k
  if (s > i && s < j && t > j) {                                             // (CR)_(s',t')
    const int e = (t - j) + (s - i);
    return (r.pow(e - 1) - r.pow(e - 3)) * (l - r);
  }
  if (s < i && t > i && t < j) {                                             // (CL)_(s',t')
    const int e = (i - s) + (j - t);
    return (F(1) / r.pow(e - 1) - F(1) / r.pow(e - 3)) * (F(1) / l - F(1) / r);
  }
  return F(0);
}

template <class F>
Matrix<F> sum_matrix(const LKMatrices<F>& L) {
  const std::size_t d = L.dim();
  Matrix<F> T(d, d);
  for (int j = 2; j <= L.n; ++j)
    for (int i = 1; i < j; ++i) {
      auto X = xij_by_conjugation(L, i, j);
      const std::size_t a = static_cast<std::size_t>(RootIndex{i, j}.position() - 1);
      for (std::size_t b = 0; b < d; ++b) T(a, b) = X.row[b];
    }
  return T;
}

// T(n) assembled from the direct coefficient rules.
template <class F>
Matrix<F> sum_matrix_direct(int n, const Params<F>& p) {
  const std::size_t d = static_cast<std::size_t>(dim_for(n));
  Matrix<F> T(d, d);
  for (int a = 1; a <= static_cast<int>(d); ++a) {
    const RootIndex w = root_at(a, n);
    for (int b = 1; b <= static_cast<int>(d); ++b)
      T(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) =
          xij_direct_coeff(n, w.i, w.j, root_at(b, n), p);
  }
  return T;
}

}  // namespace lk
