#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lk/matrix.hpp"
#include "lk/roots.hpp"
#include "lk/specialization.hpp"

namespace lk {

template <class F>
using SparseColumn = std::vector<std::pair<RootIndex, F>>;

template <class F>
struct LKMatrices {
  int n = 0;
  Params<F> params;
  std::vector<Matrix<F>> G;     // G[i-1] = nu(g_i)
  std::vector<Matrix<F>> E;     // E[i-1] = nu(e_i)
  std::vector<Matrix<F>> Ginv;  // Ginv[i-1] = nu(g_i)^{-1}

  std::size_t dim() const { return static_cast<std::size_t>(dim_for(n)); }
  const Matrix<F>& g(int i) const { return G.at(static_cast<std::size_t>(i - 1)); }
  const Matrix<F>& e(int i) const { return E.at(static_cast<std::size_t>(i - 1)); }
  const Matrix<F>& ginv(int i) const { return Ginv.at(static_cast<std::size_t>(i - 1)); }
};

namespace detail {

template <class F>
void add_entry(SparseColumn<F>& col, const RootIndex& b, const F& v) {
  if (!v.is_zero()) col.emplace_back(b, v);
}

inline void check_node(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("node " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
}

}  // namespace detail

// nu_i(x_beta).
template <class F>
SparseColumn<F> nu_action(int n, int i, const RootIndex& b, const Params<F>& p) {
  detail::check_node(n, i);
  const RootIndex a = simple_root(i);
  const F m = p.m();
  const int ht = b.height();
  SparseColumn<F> col;
  switch (inner2(b, i)) {
    case 0: detail::add_entry(col, b, p.r); break;
    case 2: detail::add_entry(col, b, F(1) / p.l); break;
    case 1: {
      const RootIndex c = shift(b, i, Dir::Minus);
      detail::add_entry(col, c, F(1));
      if (precedes(c, a)) {
        detail::add_entry(col, a, m / (p.l * p.r.pow(ht - 2)));
        detail::add_entry(col, b, -m);
      }
      break;
    }
    case -1: {
      const RootIndex c = shift(b, i, Dir::Plus);
      detail::add_entry(col, c, F(1));
      if (precedes(a, b)) {
        detail::add_entry(col, a, m * p.r.pow(ht - 1));
        detail::add_entry(col, b, -m);
      }
      break;
    }
  }
  return col;
}

// nu(e_i)(x_beta): always a multiple of x_{alpha_i}.
template <class F>
SparseColumn<F> nu_e_action(int n, int i, const RootIndex& b, const Params<F>& p) {
  detail::check_node(n, i);
  const RootIndex a = simple_root(i);
  const int ht = b.height();
  SparseColumn<F> col;
  switch (inner2(b, i)) {
    case 0: break;
    case 2: detail::add_entry(col, a, p.x()); break;
    case 1:
      if (precedes(a, shift(b, i, Dir::Minus)))
        detail::add_entry(col, a, p.l * p.r.pow(ht - 2));
      else
        detail::add_entry(col, a, F(1) / (p.l * p.r.pow(ht - 2)));
      break;
    case -1:
      if (precedes(a, b))
        detail::add_entry(col, a, p.r.pow(ht - 1));
      else
        detail::add_entry(col, a, F(1) / p.r.pow(ht - 1));
      break;
  }
  return col;
}

// nu_i^{-1}(x_beta).
template <class F>
SparseColumn<F> nu_inv_action(int n, int i, const RootIndex& b, const Params<F>& p) {
  detail::check_node(n, i);
  const RootIndex a = simple_root(i);
  const F m = p.m();
  const int ht = b.height();
  SparseColumn<F> col;
  switch (inner2(b, i)) {
    case 0: detail::add_entry(col, b, F(1) / p.r); break;
    case 2: detail::add_entry(col, b, p.l); break;
    case 1: {
      const RootIndex c = shift(b, i, Dir::Minus);
      detail::add_entry(col, c, F(1));
      if (precedes(a, c)) {
        detail::add_entry(col, a, -(m * p.l * p.r.pow(ht - 2)));
        detail::add_entry(col, b, m);
      }
      break;
    }
    case -1: {
      const RootIndex c = shift(b, i, Dir::Plus);
      detail::add_entry(col, c, F(1));
      if (!precedes(a, b)) {
        detail::add_entry(col, a, -(m / p.r.pow(ht - 1)));
        detail::add_entry(col, b, m);
      }
      break;
    }
  }
  return col;
}

template <class F>
Matrix<F> matrix_from_action(int n, int i, const Params<F>& p,
                             SparseColumn<F> (*action)(int, int, const RootIndex&, const Params<F>&)) {
  const int d = dim_for(n);
  Matrix<F> M(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int pos = 1; pos <= d; ++pos) {
    const RootIndex b = root_at(pos, n);
    for (auto& [row, v] : action(n, i, b, p))
      M(static_cast<std::size_t>(row.position() - 1), static_cast<std::size_t>(pos - 1)) += v;
  }
  return M;
}

// Closed-form construction: column position(beta) of G_i holds nu_i(x_beta).
template <class F>
LKMatrices<F> build_matrices(int n, const Params<F>& p) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  LKMatrices<F> L{n, p, {}, {}, {}};
  for (int i = 1; i < n; ++i) {
    L.G.push_back(matrix_from_action<F>(n, i, p, &nu_action<F>));
    L.E.push_back(matrix_from_action<F>(n, i, p, &nu_e_action<F>));
    L.Ginv.push_back(matrix_from_action<F>(n, i, p, &nu_inv_action<F>));
  }
  return L;
}

// E_i = (l/m)(G_i^2 + m G_i - I).
template <class F>
Matrix<F> e_from_g(const Matrix<F>& G, const Params<F>& p) {
  const F m = p.m();
  const auto I = Matrix<F>::identity(G.rows());
  return (p.l / m) * (G * G + m * G - I);
}

// G_i^{-1} = G_i + m I - m E_i.
template <class F>
Matrix<F> ginv_from(const Matrix<F>& G, const Matrix<F>& E, const Params<F>& p) {
  const F m = p.m();
  return G + m * Matrix<F>::identity(G.rows()) - m * E;
}

namespace detail {

template <class F>
Matrix<F> base_g3(int i, const Params<F>& p) {
  const F m = p.m(), il = F(1) / p.l, z(0), one(1);
  if (i == 1) return Matrix<F>::from_rows({{il, m, z}, {z, -m, one}, {z, one, z}});
  return Matrix<F>::from_rows({{z, z, one}, {z, il, m / p.l}, {one, z, -m}});
}

// Matrix of the first kind: G_i(n) from G_i(n-1), i <= n-2.
template <class F>
Matrix<F> first_kind(const Matrix<F>& prev, int n, int i, const Params<F>& p) {
  const F m = p.m();
  const std::size_t d = static_cast<std::size_t>(dim_for(n));
  const std::size_t base = static_cast<std::size_t>(binom2(n - 1));
  Matrix<F> M(d, d);
  for (std::size_t a = 0; a < base; ++a)
    for (std::size_t b = 0; b < base; ++b) M(a, b) = prev(a, b);
  auto idx = [&](int k) { return base + static_cast<std::size_t>(n - k) - 1; };  // w_{k,n}
  for (int k = 1; k <= n - 1; ++k)
    if (k != i && k != i + 1) M(idx(k), idx(k)) = p.r;
  M(idx(i + 1), idx(i)) = F(1);
  M(idx(i), idx(i + 1)) = F(1);
  M(idx(i + 1), idx(i + 1)) = -m;
  M(static_cast<std::size_t>(binom2(i)), idx(i + 1)) = m * p.r.pow(n - i - 2);
  return M;
}

// Matrix of the second kind: G_{n-1}(n).
template <class F>
Matrix<F> second_kind(int n, const Params<F>& p) {
  const F m = p.m();
  const std::size_t d = static_cast<std::size_t>(dim_for(n));
  const std::size_t inner = static_cast<std::size_t>(binom2(n - 2));
  const std::size_t base = static_cast<std::size_t>(binom2(n - 1));
  Matrix<F> M(d, d);
  for (std::size_t a = 0; a < inner; ++a) M(a, a) = p.r;
  auto idx_prev = [&](int k) { return inner + static_cast<std::size_t>(n - 1 - k) - 1; };  // w_{k,n-1}
  auto idx = [&](int k) { return base + static_cast<std::size_t>(n - k) - 1; };             // w_{k,n}
  for (int k = 1; k <= n - 2; ++k) {
    M(idx(k), idx_prev(k)) = F(1);
    M(idx_prev(k), idx(k)) = F(1);
    M(idx(k), idx(k)) = -m;
  }
  M(base, base) = F(1) / p.l;
  for (int j = 2; j <= n - 1; ++j) M(base, base + static_cast<std::size_t>(j) - 1) = m / (p.l * p.r.pow(j - 2));
  return M;
}

}  // namespace detail

// Recursive block construction seeded by the n = 3 matrices.
template <class F>
LKMatrices<F> build_matrices_recursive(int n, const Params<F>& p) {
  if (n < 3) throw std::invalid_argument("recursive builder needs n >= 3");
  std::vector<Matrix<F>> G = {detail::base_g3<F>(1, p), detail::base_g3<F>(2, p)};
  for (int k = 4; k <= n; ++k) {
    std::vector<Matrix<F>> next;
    for (int i = 1; i <= k - 2; ++i) next.push_back(detail::first_kind(G[static_cast<std::size_t>(i - 1)], k, i, p));
    next.push_back(detail::second_kind(k, p));
    G = std::move(next);
  }
  LKMatrices<F> L{n, p, std::move(G), {}, {}};
  for (const auto& g : L.G) {
    L.E.push_back(e_from_g(g, p));
    L.Ginv.push_back(ginv_from(g, L.E.back(), p));
  }
  return L;
}

struct RelationCheck {
  std::string name;
  bool passed = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.passed ? 0 : 1;
    return k;
  }
};

template <class F>
RelationReport verify_relations(const LKMatrices<F>& L) {
  RelationReport rep;
  const int n = L.n;
  const F l = L.params.l, il = F(1) / L.params.l, m = L.params.m(), x = L.params.x();
  const auto I = Matrix<F>::identity(L.dim());
  auto add = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };
  auto tag = [](const char* base, int i, int j = 0) {
    std::string s = std::string(base) + " i=" + std::to_string(i);
    if (j) s += " j=" + std::to_string(j);
    return s;
  };
  for (int i = 1; i < n; ++i) {
    const auto &G = L.g(i), &E = L.e(i), &Gi = L.ginv(i);
    const Matrix<F> GG = G * G;
    add(tag("e = l/m (g^2 + m g - 1)", i), E == (l / m) * (GG + m * G - I));
    add(tag("g e = l^-1 e", i), G * E == il * E);
    add(tag("e g = l^-1 e", i), E * G == il * E);
    add(tag("g^2 = 1 - m g + m l^-1 e", i), GG == I - m * G + (m * il) * E);
    add(tag("g^-1 = g + m - m e", i), Gi == G + m * I - m * E && G * Gi == I);
    add(tag("e^2 = x e", i), E * E == x * E);
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) >= 2) {
        if (j > i) add(tag("g_i g_j = g_j g_i", i, j), G * L.g(j) == L.g(j) * G);
        add(tag("e_i e_j = 0", i, j), (E * L.e(j)).is_zero());
      }
    }
    if (i + 1 < n) {
      const auto &G1 = L.g(i + 1), &E1 = L.e(i + 1);
      add(tag("g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}", i), G * G1 * G == G1 * G * G1);
      add(tag("e_i g_{i+1} e_i = l e_i", i), E * G1 * E == l * E);
      add(tag("g_i g_{i+1} e_i = e_{i+1} e_i", i), G * G1 * E == E1 * E);
      add(tag("g_i e_{i+1} e_i = g_{i+1} e_i + m(e_i - e_{i+1} e_i)", i),
          G * E1 * E == G1 * E + m * (E - E1 * E));
    }
    if (i > 1) {
      const auto &G0 = L.g(i - 1), &E0 = L.e(i - 1);
      add(tag("e_i g_{i-1} e_i = l e_i", i), E * G0 * E == l * E);
      add(tag("g_i g_{i-1} e_i = e_{i-1} e_i", i), G * G0 * E == E0 * E);
      add(tag("g_i e_{i-1} e_i = g_{i-1} e_i + m(e_i - e_{i-1} e_i)", i),
          G * E0 * E == G0 * E + m * (E - E0 * E));
    }
  }
  return rep;
}

// Entrywise specialization of a generic family.
template <class F, class Fn>
LKMatrices<F> map_matrices(const LKMatrices<RatFunc2>& L, const Params<F>& p, Fn&& fn) {
  LKMatrices<F> out{L.n, p, {}, {}, {}};
  for (const auto& g : L.G) out.G.push_back(g.map(fn));
  for (const auto& e : L.E) out.E.push_back(e.map(fn));
  for (const auto& g : L.Ginv) out.Ginv.push_back(g.map(fn));
  return out;
}

}  // namespace lk
