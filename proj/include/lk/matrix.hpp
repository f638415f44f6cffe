#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lk {

// Dense row-major matrix over a coefficient field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
  }
  std::vector<F> col(std::size_t j) const {
    std::vector<F> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k)
      if (!b.a_[k].is_zero()) c.a_[k] += b.a_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k)
      if (!b.a_[k].is_zero()) c.a_[k] -= b.a_[k];
    return c;
  }
  friend Matrix operator*(const F& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.a_)
      if (!x.is_zero()) x = s * x;
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& y = b(k, j);
          if (y.is_zero()) continue;
          c(i, j) += x * y;
        }
      }
    return c;
  }
  friend std::vector<F> operator*(const Matrix& a, const std::vector<F>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<F> out(a.rows_, F(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // 0-based row and column index lists.
  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix s(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs.at(i), cs.at(j));
    return s;
  }

  template <class Fn>
  auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const F&>()))> {
    Matrix<decltype(fn(std::declval<const F&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

  std::vector<std::vector<std::string>> strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).str());
    return out;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

template <class F>
bool is_zero_vector(const std::vector<F>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Row-reduces in place to reduced echelon form; returns pivot columns.
// Pivot choice: leftmost column, then the candidate with the fewest terms.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t best = a.rows();
    std::size_t best_terms = 0;
    for (std::size_t i = row; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      std::size_t t = a(i, c).term_count();
      if (best == a.rows() || t < best_terms) {
        best = i;
        best_terms = t;
      }
    }
    if (best == a.rows()) continue;
    if (best != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(best, j), a(row, j));
    const F inv = F(1) / a(row, c);
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, c).is_zero()) continue;
      const F f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> a) {
  return rref_in_place(a).size();
}

// Determinant by Gaussian elimination over the field.
template <class F>
F det_gauss(Matrix<F> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  F d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n, best_terms = 0;
    for (std::size_t i = c; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      std::size_t t = a(i, c).term_count();
      if (best == n || t < best_terms) {
        best = i;
        best_terms = t;
      }
    }
    if (best == n) return F(0);
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(best, j), a(c, j));
      d = -d;
    }
    d = d * a(c, c);
    const F inv = F(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const F f = a(i, c) * inv;
      for (std::size_t j = c + 1; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

// Nullspace basis, returned in reduced echelon form (pivots 1, pivot columns increasing).
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> a) {
  auto pivots = rref_in_place(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(n, F(0));
    v[f] = F(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (!a(k, f).is_zero()) v[pivots[k]] = -a(k, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  Matrix<F> b = Matrix<F>::from_rows(basis);
  auto bp = rref_in_place(b);
  std::vector<std::vector<F>> out;
  for (std::size_t k = 0; k < bp.size(); ++k) out.push_back(b.row(k));
  return out;
}

}  // namespace lk
