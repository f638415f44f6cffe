#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lk/matrix.hpp"
#include "lk/ratfunc.hpp"
#include "lk/representation.hpp"

namespace lk {

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("empty partition");
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (parts[k] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (k > 0 && parts[k] > parts[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  Partition conjugate() const {
    std::vector<int> c(static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts)
      for (int k = 0; k < p; ++k) ++c[static_cast<std::size_t>(k)];
    return Partition(c);
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + std::to_string(parts[k]);
    return s + ")";
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

// Partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions(int n) {
  if (n < 1) throw std::invalid_argument("partitions need n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// n! over the product of hook lengths.
inline mpz_class hook_dim(const Partition& lam) {
  const Partition c = lam.conjugate();
  mpz_class num, den = 1;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lam.size()));
  for (std::size_t i = 0; i < lam.parts.size(); ++i)
    for (int j = 0; j < lam.parts[i]; ++j) {
      const int arm = lam.parts[i] - j - 1;
      const int leg = c.parts[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      den *= arm + leg + 1;
    }
  return num / den;
}

struct DimEntry {
  Partition partition;
  mpz_class dim;
};

inline std::vector<DimEntry> sym_dims(int n) {
  if (n > 12) throw std::out_of_range("sym_dims supports n <= 12");
  std::vector<DimEntry> out;
  for (auto& p : partitions(n)) out.push_back({p, hook_dim(p)});
  return out;
}

struct GapReport {
  int n = 0;
  bool passed = false;
  std::vector<DimEntry> offenders;  // dims strictly inside the gap
};

// Every dimension lies in {1, n-1, n(n-3)/2, (n-1)(n-2)/2} or exceeds (n-1)(n-2)/2.
inline GapReport dim_gap_report(int n) {
  GapReport rep;
  rep.n = n;
  const long a = n - 1, b = n * (n - 3) / 2, c = (n - 1) * (n - 2) / 2;
  for (auto& e : sym_dims(n)) {
    const long d = e.dim.get_si();
    const bool ok = d == 1 || d == a || d == b || d == c || d > c;
    if (!ok) rep.offenders.push_back(e);
  }
  rep.passed = rep.offenders.empty();
  return rep;
}

inline bool dim_gap_check(int n) { return dim_gap_report(n).passed; }

enum class SeedFamily { M, N, P, Q };

inline SeedFamily parse_seed_family(const std::string& s) {
  if (s == "M") return SeedFamily::M;
  if (s == "N") return SeedFamily::N;
  if (s == "P") return SeedFamily::P;
  if (s == "Q") return SeedFamily::Q;
  throw std::invalid_argument("unknown seed family '" + s + "'");
}

namespace detail {

using R1 = RatFunc1;

inline Matrix<R1> from_entries(std::size_t d, const std::vector<std::tuple<int, int, R1>>& es) {
  Matrix<R1> A(d, d);
  for (const auto& [i, j, v] : es) A(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
  return A;
}

inline std::vector<Matrix<R1>> pq_family(bool conj) {
  const R1 r = R1::r(), one(1), ir = one / r;
  // Conjugation swaps r with -1/r.
  const R1 a = conj ? -ir : r;
  const R1 b = conj ? r : -ir;
  const R1 sq = conj ? -ir * ir : -r * r;
  const R1 t = conj ? ir : -r;
  const R1 u = r - ir;
  std::vector<Matrix<R1>> out;
  out.push_back(from_entries(5, {{1, 1, a}, {2, 2, a}, {3, 3, a}, {4, 1, one}, {4, 3, sq}, {4, 4, b}, {5, 2, one}, {5, 5, b}}));
  out.push_back(from_entries(5, {{1, 1, b}, {1, 4, one}, {2, 2, b}, {2, 3, one}, {2, 5, one}, {3, 3, a}, {4, 4, a}, {5, 5, a}}));
  out.push_back(from_entries(5, {{1, 1, a}, {2, 2, a}, {3, 2, one}, {3, 3, b}, {4, 1, one}, {4, 4, b}, {4, 5, sq}, {5, 5, a}}));
  out.push_back(from_entries(5, {{1, 2, one}, {1, 3, t}, {2, 1, one}, {2, 2, u}, {2, 3, one}, {3, 3, a}, {4, 3, sq},
                                 {4, 5, one}, {5, 3, -t}, {5, 4, one}, {5, 5, u}}));
  return out;
}

inline std::vector<Matrix<R1>> mn_family(int n, bool conj) {
  const R1 r = R1::r(), ir = R1(1) / r;
  const std::size_t d = static_cast<std::size_t>(n - 1);
  std::vector<Matrix<R1>> out;
  for (int i = 1; i <= n - 1; ++i) {
    Matrix<R1> A(d, d);
    for (std::size_t k = 0; k < d; ++k) A(k, k) = conj ? -ir : r;
    const std::size_t row = static_cast<std::size_t>(i - 1);
    if (i >= 2) A(row, row - 1) = conj ? -ir : r;
    A(row, row) = conj ? r : -ir;
    if (i + 1 <= n - 1) A(row, row + 1) = conj ? -r : ir;
    out.push_back(std::move(A));
  }
  return out;
}

}  // namespace detail

inline std::vector<Matrix<RatFunc1>> seed_matrices(SeedFamily f, int n) {
  switch (f) {
    case SeedFamily::M:
    case SeedFamily::N:
      if (n < 3) throw std::out_of_range("M/N families need n >= 3");
      return detail::mn_family(n, f == SeedFamily::N);
    default:
      if (n != 5) throw std::out_of_range("P/Q families exist only for n = 5");
      return detail::pq_family(f == SeedFamily::Q);
  }
}

// Braid relations and H^2 + m H = I.
inline RelationReport verify_seed_matrices(SeedFamily f, int n) {
  const auto H = seed_matrices(f, n);
  const RatFunc1 r = RatFunc1::r();
  const RatFunc1 m = RatFunc1(1) / r - r;
  const auto I = Matrix<RatFunc1>::identity(H.front().rows());
  RelationReport rep;
  auto record = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };
  const int k = static_cast<int>(H.size());
  for (int i = 0; i < k; ++i) {
    const auto& A = H[static_cast<std::size_t>(i)];
    record("hecke H" + std::to_string(i + 1), A * A + m * A == I);
    for (int j = i + 1; j < k; ++j) {
      const auto& B = H[static_cast<std::size_t>(j)];
      const std::string tag = std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (j == i + 1)
        record("braid " + tag, A * B * A == B * A * B);
      else
        record("commute " + tag, A * B == B * A);
    }
  }
  return rep;
}

}  // namespace lk
