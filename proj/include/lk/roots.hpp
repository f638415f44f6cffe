#pragma once

#include <stdexcept>
#include <string>

namespace lk {

inline int binom2(int k) { return k * (k - 1) / 2; }
inline int dim_for(int n) { return binom2(n); }

// Positive root w_{ij} = alpha_i + ... + alpha_{j-1} of A_{n-1}.
struct RootIndex {
  int i = 1;
  int j = 2;

  int height() const { return j - i; }
  // 1-based basis position.
  int position() const { return binom2(j - 1) + (j - i); }
  std::string str() const { return "w" + std::to_string(i) + "," + std::to_string(j); }

  friend bool operator==(const RootIndex& a, const RootIndex& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(const RootIndex& a, const RootIndex& b) { return !(a == b); }
  friend bool operator<(const RootIndex& a, const RootIndex& b) { return a.position() < b.position(); }
};

inline RootIndex root(int i, int j, int n) {
  if (i < 1 || i >= j || j > n) throw std::out_of_range("invalid root w" + std::to_string(i) + "," + std::to_string(j));
  return {i, j};
}

inline int position(const RootIndex& b) { return b.position(); }

inline RootIndex root_at(int pos, int n) {
  if (pos < 1 || pos > dim_for(n)) throw std::out_of_range("position " + std::to_string(pos) + " out of range");
  int j = 2;
  while (binom2(j) < pos) ++j;
  const int i = j - (pos - binom2(j - 1));
  return {i, j};
}

inline RootIndex simple_root(int i) { return {i, i + 1}; }

// 2 (beta | alpha_i).
inline int inner2(const RootIndex& b, int i) {
  const int s = b.i, t = b.j;
  if (s == i && t == i + 1) return 2;
  if ((i == s && s < t - 1) || (s < i && i == t - 1)) return 1;
  if (i == s - 1 || i == t) return -1;
  return 0;
}

inline bool precedes(const RootIndex& a, const RootIndex& b) { return a.position() < b.position(); }

enum class Dir { Plus, Minus };

// beta + alpha_i or beta - alpha_i, when that is a positive root.
inline RootIndex shift(const RootIndex& b, int i, Dir d) {
  const int ip = inner2(b, i);
  if (d == Dir::Minus) {
    if (ip != 1) throw std::domain_error("illegal shift " + b.str() + " - alpha_" + std::to_string(i) + ": inner2 = " + std::to_string(ip));
    return i == b.i ? RootIndex{b.i + 1, b.j} : RootIndex{b.i, b.j - 1};
  }
  if (ip != -1) throw std::domain_error("illegal shift " + b.str() + " + alpha_" + std::to_string(i) + ": inner2 = " + std::to_string(ip));
  return i == b.i - 1 ? RootIndex{b.i - 1, b.j} : RootIndex{b.i, b.j + 1};
}

}  // namespace lk
