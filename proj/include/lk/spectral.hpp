#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lk/bareiss.hpp"
#include "lk/xij.hpp"

namespace lk {

class size_guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest n accepted for Generic determinants; LK_SIZE_GUARD overrides.
inline int size_guard() {
  if (const char* v = std::getenv("LK_SIZE_GUARD")) {
    char* end = nullptr;
    long g = std::strtol(v, &end, 10);
    if (end && *end == '\0' && g > 0) return static_cast<int>(g);
  }
  return 6;
}

inline std::string to_string(const AnyField& a) {
  return std::visit([](const auto& x) { return x.str(); }, a);
}
inline bool is_zero(const AnyField& a) {
  return std::visit([](const auto& x) { return x.is_zero(); }, a);
}

template <class F>
Matrix<F> t_matrix(int n, const Params<F>& p) {
  return sum_matrix(build_matrices(n, p));
}

// Calls fn(params) with the coefficient field selected by s.
template <class Fn>
decltype(auto) with_field(const Specialization& s, Fn&& fn) {
  switch (s.kind) {
    case Specialization::Kind::Generic: return fn(generic_params());
    case Specialization::Kind::LTo: return fn(params_at(s.f));
    default: return fn(params_at(s.f, s.ring));
  }
}

template <class F>
F det_field(const Matrix<F>& M) {
  if constexpr (std::is_same_v<F, Cyclo>)
    return det_gauss(M);
  else
    return det_bareiss(M);
}

inline AnyField det_T(int n, const Specialization& s) {
  if (n < 3) throw std::invalid_argument("det_T needs n >= 3");
  if (s.kind == Specialization::Kind::Generic && n > size_guard())
    throw size_guard_error("generic determinant for n=" + std::to_string(n) + " exceeds the size guard " +
                           std::to_string(size_guard()) + " (set LK_SIZE_GUARD to override)");
  return with_field(s, [&](const auto& p) -> AnyField { return det_field(t_matrix(n, p)); });
}

struct LocusFactor {
  int eps = 1;  // root l = eps * r^k
  int k = 0;
  int multiplicity = 0;

  RatFunc1 root() const { return RatFunc1(eps) * RatFunc1::r().pow(k); }
  // Monic-in-l factor l - eps r^k.
  RatFunc2 factor() const { return RatFunc2::l() - RatFunc2(eps) * RatFunc2::r().pow(k); }
  std::string str() const { return factor().str(); }
};

struct LocusReport {
  int n = 0;
  RatFunc2 det;
  std::vector<LocusFactor> factors;
  Poly2 residual = Poly2(1);
  int l_denominator_power = 0;
  RatFunc1 scalar = RatFunc1(1);

  int residual_l_degree() const { return residual.deg_l(); }
  int total_multiplicity() const {
    int t = 0;
    for (const auto& f : factors) t += f.multiplicity;
    return t;
  }
  std::optional<int> multiplicity_of(int eps, int k) const {
    for (const auto& f : factors)
      if (f.eps == eps && f.k == k) return f.multiplicity;
    return std::nullopt;
  }
  // det = prod factor^mult * residual * scalar / l^power.
  bool reconstructs() const {
    RatFunc2 acc(residual);
    for (const auto& f : factors) acc *= f.factor().pow(f.multiplicity);
    acc *= RatFunc2(Poly2(scalar.num()), Poly2(scalar.den()));
    acc /= RatFunc2::l().pow(l_denominator_power);
    return acc == det;
  }
};

namespace detail {

inline std::optional<Poly2> try_exact_div(const Poly2& a, const Poly2& b) {
  try {
    return exact_div(a, b);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

}  // namespace detail

inline LocusReport locus_from_det(int n, const RatFunc2& d) {
  LocusReport rep;
  rep.n = n;
  rep.det = d;
  const Poly2& den = d.den();
  rep.l_denominator_power = std::max(0, den.low_l());
  Poly2 den_rest = den.shift_down(static_cast<std::size_t>(rep.l_denominator_power), 0);
  if (!den_rest.free_of_l()) throw std::logic_error("determinant denominator is not of the form l^p * f(r)");
  Poly2 num = d.num();
  std::size_t r_shift = 0;
  const int K = 2 * n - 3;
  for (int k = -K; k <= K; ++k)
    for (int eps : {1, -1}) {
      const Poly2 cand = k >= 0 ? Poly2::l() - Poly2::monomial(eps, 0, static_cast<std::size_t>(k))
                                : Poly2::monomial(1, 1, static_cast<std::size_t>(-k)) - Poly2(eps);
      int mult = 0;
      while (num.deg_l() > 0) {
        auto q = detail::try_exact_div(num, cand);
        if (!q) break;
        num = std::move(*q);
        ++mult;
      }
      if (mult > 0) {
        rep.factors.push_back({eps, k, mult});
        if (k < 0) r_shift += static_cast<std::size_t>(-k * mult);
      }
    }
  // Cleared factors r^{|k|} l - eps = r^{|k|} (l - eps r^k).
  RatFunc1 sc = RatFunc1(UPoly::monomial(1, r_shift)) / RatFunc1(den_rest.coeff(0));
  if (num.free_of_l()) {
    rep.scalar = sc * RatFunc1(num.coeff(0));
    rep.residual = Poly2(1);
  } else {
    rep.scalar = sc;
    rep.residual = num;
  }
  return rep;
}

inline LocusReport reducibility_locus(int n) {
  auto d = std::get<RatFunc2>(det_T(n, Specialization::generic()));
  return locus_from_det(n, d);
}

struct KernelReport {
  int n = 0;
  Specialization spec;
  std::vector<std::vector<std::string>> basis;
  int dim = 0;
  int rank = 0;
};

template <class F>
std::vector<std::vector<F>> kernel_basis(int n, const Params<F>& p) {
  return nullspace(t_matrix(n, p));
}

inline KernelReport kernel(int n, const Specialization& s) {
  if (s.kind == Specialization::Kind::Generic)
    throw unsupported_error("kernel over the generic field Q(l,r) is not supported; specialize l");
  KernelReport rep;
  rep.n = n;
  rep.spec = s;
  with_field(s, [&](const auto& p) {
    auto basis = kernel_basis(n, p);
    for (const auto& v : basis) {
      std::vector<std::string> row;
      for (const auto& x : v) row.push_back(x.str());
      rep.basis.push_back(std::move(row));
    }
    return 0;
  });
  rep.dim = static_cast<int>(rep.basis.size());
  rep.rank = dim_for(n) - rep.dim;
  return rep;
}

inline std::vector<std::size_t> to_zero_based(const std::vector<int>& v) {
  std::vector<std::size_t> out;
  for (int x : v) {
    if (x < 1) throw std::out_of_range("indices are 1-based");
    out.push_back(static_cast<std::size_t>(x - 1));
  }
  return out;
}

// Exact minor of T(n) on 1-based rows and columns.
inline AnyField submatrix_det(int n, const Specialization& s, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("submatrix must be square");
  return with_field(s, [&](const auto& p) -> AnyField {
    return det_gauss(t_matrix(n, p).submatrix(to_zero_based(rows), to_zero_based(cols)));
  });
}

struct RankWitness {
  std::vector<int> rows, cols;
  std::string det;
};

namespace detail {

inline bool next_combination(std::vector<int>& c, const std::vector<int>& pool_size_idx, int pool_n) {
  const int k = static_cast<int>(c.size());
  (void)pool_size_idx;
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < pool_n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// First invertible size x size submatrix in lexicographic (cols, rows) order.
inline std::optional<RankWitness> rank_witness(int n, const Specialization& s, int size, std::vector<int> row_pool = {},
                                               std::vector<int> col_pool = {}) {
  const int d = dim_for(n);
  if (row_pool.empty())
    for (int k = 1; k <= d; ++k) row_pool.push_back(k);
  if (col_pool.empty())
    for (int k = 1; k <= d; ++k) col_pool.push_back(k);
  std::sort(row_pool.begin(), row_pool.end());
  std::sort(col_pool.begin(), col_pool.end());
  if (size < 1 || size > static_cast<int>(row_pool.size()) || size > static_cast<int>(col_pool.size()))
    throw std::invalid_argument("witness size exceeds the pools");
  return with_field(s, [&](const auto& p) -> std::optional<RankWitness> {
    const auto T = t_matrix(n, p);
    std::vector<int> ci(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) ci[static_cast<std::size_t>(k)] = k;
    do {
      std::vector<std::size_t> cols;
      for (int k : ci) cols.push_back(static_cast<std::size_t>(col_pool[static_cast<std::size_t>(k)] - 1));
      const auto Tc = T.submatrix(to_zero_based(row_pool), cols);
      if (rank(Tc) < static_cast<std::size_t>(size)) continue;
      std::vector<int> ri(static_cast<std::size_t>(size));
      for (int k = 0; k < size; ++k) ri[static_cast<std::size_t>(k)] = k;
      do {
        std::vector<std::size_t> rows;
        for (int k : ri) rows.push_back(static_cast<std::size_t>(row_pool[static_cast<std::size_t>(k)] - 1));
        auto det = det_gauss(T.submatrix(rows, cols));
        if (!det.is_zero()) {
          RankWitness w;
          for (auto x : rows) w.rows.push_back(static_cast<int>(x) + 1);
          for (auto x : cols) w.cols.push_back(static_cast<int>(x) + 1);
          w.det = det.str();
          return w;
        }
      } while (detail::next_combination(ri, {}, static_cast<int>(row_pool.size())));
    } while (detail::next_combination(ci, {}, static_cast<int>(col_pool.size())));
    return std::nullopt;
  });
}

// Nested row/column index lists of the S(n) minor, seeded by [1,3,4,7].
inline std::pair<std::vector<int>, std::vector<int>> sn_indices(int n) {
  if (n < 5) throw std::invalid_argument("S(n) is defined for n >= 5");
  std::vector<int> R = {1, 3, 4, 7}, C = {1, 3, 4, 7};
  for (int k = 6; k <= n; ++k) {
    R.push_back(binom2(k - 1) + 1);
    C.push_back(binom2(k - 1) + (k - 4));
  }
  return {R, C};
}

// (-1)^{n+1} (1 + r^4 + ... + r^{4(n-1)}) / r^{8 + n(n-5)/2}.
inline RatFunc1 det_sn_closed_form(int n) {
  UPoly s;
  for (int k = 0; k < n; ++k) s += UPoly::monomial(1, static_cast<std::size_t>(4 * k));
  RatFunc1 v = RatFunc1(s) / RatFunc1::r().pow(8 + n * (n - 5) / 2);
  return (n + 1) % 2 == 0 ? v : -v;
}

inline RatFunc1 det_sn(int n) {
  auto [R, C] = sn_indices(n);
  const auto p = params_at(-RatFunc1::r().pow(3));
  return det_bareiss(t_matrix(n, p).submatrix(to_zero_based(R), to_zero_based(C)));
}

inline bool det_Sn_formula_check(int n) { return det_sn(n) == det_sn_closed_form(n); }

}  // namespace lk
