#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lk/spectral.hpp"

namespace lk {

class unknown_case_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NamedVector {
  std::string name;
  int n = 0;
  std::string case_label;
  Specialization spec;
  std::vector<std::pair<RootIndex, RatFunc1>> coords;

  std::vector<RatFunc1> dense() const {
    std::vector<RatFunc1> v(static_cast<std::size_t>(dim_for(n)));
    for (const auto& [w, c] : coords) v[static_cast<std::size_t>(w.position() - 1)] += c;
    return v;
  }
  bool is_zero() const {
    for (const auto& c : dense())
      if (!c.is_zero()) return false;
    return true;
  }
};

inline const std::vector<std::string>& case_labels() {
  static const std::vector<std::string> labels = {"one-dim", "n-minus-1+", "n-minus-1-", "l=r", "l=-r3",
                                                  "root-of-unity"};
  return labels;
}

namespace detail {

struct VecBuilder {
  NamedVector v;
  VecBuilder(std::string name, int n, std::string label, Specialization s) {
    v.name = std::move(name);
    v.n = n;
    v.case_label = std::move(label);
    v.spec = std::move(s);
  }
  VecBuilder& add(int i, int j, const RatFunc1& c) {
    if (!c.is_zero()) v.coords.push_back({root(i, j, v.n), c});
    return *this;
  }
  // Coordinates listed in basis order.
  VecBuilder& dense(const std::vector<RatFunc1>& cs) {
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const RootIndex w = root_at(static_cast<int>(k) + 1, v.n);
      add(w.i, w.j, cs[k]);
    }
    return *this;
  }
  NamedVector done() { return std::move(v); }
};

inline RatFunc1 R() { return RatFunc1::r(); }
inline RatFunc1 rp(int k) { return RatFunc1::r().pow(k); }
inline RatFunc1 Q(long a) { return RatFunc1(a); }

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

// Eigenvector sum r^{s+t} w_st.
inline NamedVector eigen_u(int n) {
  VecBuilder b("u", n, "one-dim", Specialization::l_to(rp(3 - 2 * n)));
  for (int t = 2; t <= n; ++t)
    for (int s = 1; s < t; ++s) b.add(s, t, rp(s + t));
  return b.done();
}

inline std::vector<NamedVector> sign_v(int n, int eps) {
  const RatFunc1 l = Q(eps) * rp(3 - n);
  const std::string label = eps > 0 ? "n-minus-1+" : "n-minus-1-";
  std::vector<NamedVector> out;
  for (int i = 1; i <= n - 1; ++i) {
    VecBuilder b("v" + std::to_string(i), n, label, Specialization::l_to(l));
    b.add(i, i + 1, Q(1) / R() - Q(1) / l);
    for (int k = i + 2; k <= n; ++k) {
      b.add(i, k, rp(k - i - 2));
      b.add(i + 1, k, -rp(k - i - 3));
    }
    for (int s = 1; s <= i - 1; ++s) {
      b.add(s, i, Q(eps) * rp(n - i - 2 + s));
      b.add(s, i + 1, -Q(eps) * rp(n - i - 3 + s));
    }
    out.push_back(b.done());
  }
  return out;
}

inline std::vector<NamedVector> n4_sign_v(int eps) {
  const RatFunc1 l = Q(eps) / R();
  const std::string label = eps > 0 ? "n-minus-1+" : "n-minus-1-";
  const auto s = Specialization::l_to(l);
  const RatFunc1 d = Q(1) / R() - Q(1) / l;
  const RatFunc1 e = Q(eps);
  std::vector<NamedVector> out;
  out.push_back(VecBuilder("v1", 4, label, s)
                    .add(1, 2, d).add(1, 3, Q(1)).add(2, 3, -Q(1) / R()).add(1, 4, R()).add(2, 4, -Q(1))
                    .done());
  out.push_back(VecBuilder("v2", 4, label, s)
                    .add(2, 3, d).add(2, 4, Q(1)).add(3, 4, -Q(1) / R()).add(1, 2, e * R()).add(1, 3, -e)
                    .done());
  out.push_back(VecBuilder("v3", 4, label, s)
                    .add(3, 4, d).add(1, 3, e).add(1, 4, -e / R()).add(2, 3, e * R()).add(2, 4, -e)
                    .done());
  return out;
}

inline std::vector<NamedVector> n4_minus_r3_v() {
  const auto s = Specialization::l_to(-rp(3));
  std::vector<NamedVector> out;
  out.push_back(VecBuilder("v1", 4, "l=-r3", s)
                    .add(2, 3, R()).add(1, 3, Q(1)).add(3, 4, Q(1) / R() + Q(1) / rp(3))
                    .add(2, 4, -Q(1)).add(1, 4, -Q(1) / R())
                    .done());
  out.push_back(VecBuilder("v2", 4, "l=-r3", s)
                    .add(1, 2, -R()).add(1, 3, -rp(2)).add(3, 4, -Q(1) / R()).add(2, 4, -Q(1) / rp(2))
                    .add(1, 4, R() + Q(1) / R())
                    .done());
  out.push_back(VecBuilder("v3", 4, "l=-r3", s)
                    .add(1, 2, R() + rp(3)).add(2, 3, Q(1) / R()).add(1, 3, -Q(1)).add(2, 4, Q(1))
                    .add(1, 4, -R())
                    .done());
  return out;
}

// Spanning set for l = r, collected over t = 4..n.
inline std::vector<NamedVector> lr_span(int n) {
  std::vector<NamedVector> out;
  const auto s = Specialization::l_to(R());
  for (int t = 4; t <= n; ++t) {
    const RatFunc1 c = rp(t - 4);
    for (int k = 1; k <= t - 2; ++k) {
      VecBuilder b("w" + std::to_string(k) + "^(" + std::to_string(t) + ")", n, "l=r", s);
      b.add(k, t, Q(1)).add(k + 1, t, -Q(1) / R());
      if (k == 1)
        b.add(2, 3, c).add(1, 3, -c * R());
      else
        b.add(1, k + 1, c).add(1, k, -c * R());
      out.push_back(b.done());
    }
  }
  return out;
}

inline NamedVector stable_x(int n) {
  return VecBuilder("X", n, "l=r", Specialization::l_to(R()))
      .add(1, 2, rp(2)).add(1, 3, -R()).add(3, 4, Q(1)).add(2, 4, -R())
      .done();
}

inline NamedVector stable_y(int n) {
  return VecBuilder("Y", n, "l=-r3", Specialization::l_to(-rp(3)))
      .add(2, 3, -R()).add(3, 4, -Q(1) / R()).add(2, 4, Q(1))
      .done();
}

inline std::vector<NamedVector> tail_v(int n) {
  std::vector<NamedVector> out;
  for (int k = 1; k <= n - 2; ++k)
    out.push_back(VecBuilder("V" + std::to_string(k), n, "l=-r3", Specialization::l_to(-rp(3)))
                      .add(k + 1, n, Q(1)).add(k, n, -R()).add(k, k + 1, rp(n - k))
                      .done());
  return out;
}

inline std::vector<NamedVector> n5_lr_w() {
  const auto s = Specialization::l_to(R());
  const RatFunc1 ir = Q(1) / R();
  std::vector<NamedVector> out;
  out.push_back(VecBuilder("w1", 5, "l=r", s).add(3, 4, -ir).add(2, 4, Q(1)).add(1, 2, -R()).add(1, 3, Q(1)).done());
  out.push_back(VecBuilder("w2", 5, "l=r", s).add(3, 5, -ir).add(2, 5, Q(1)).add(1, 2, -rp(2)).add(1, 3, R()).done());
  out.push_back(VecBuilder("w3", 5, "l=r", s).add(1, 3, -rp(2)).add(1, 4, R()).add(4, 5, -ir).add(3, 5, Q(1)).done());
  out.push_back(VecBuilder("w4", 5, "l=r", s).add(2, 3, Q(1)).add(2, 4, -ir).add(1, 4, Q(1)).add(1, 3, -R()).done());
  out.push_back(VecBuilder("w5", 5, "l=r", s).add(2, 3, R()).add(1, 3, -rp(2)).add(2, 5, -ir).add(1, 5, Q(1)).done());
  return out;
}

}  // namespace detail

// Vectors registered for (n, case).
inline std::vector<NamedVector> named_vectors(int n, const std::string& label) {
  using namespace detail;
  bool known = false;
  for (const auto& c : case_labels()) known = known || c == label;
  if (!known) throw unknown_case_error("unknown case label '" + label + "'");
  if (n < 3) throw std::out_of_range("named vectors need n >= 3");
  std::vector<NamedVector> out;
  auto append = [&](std::vector<NamedVector> vs) {
    for (auto& v : vs) out.push_back(std::move(v));
  };
  const RatFunc1 ir = Q(1) / R();

  if (label == "one-dim") {
    if (n == 3) {
      out.push_back(VecBuilder("t(3)", 3, label, Specialization::l_to(Q(1) / rp(3))).dense({ir, R(), Q(1)}).done());
      out.push_back(VecBuilder("u", 3, label, Specialization::l_to(Q(1) / rp(3)))
                        .add(1, 2, Q(1)).add(1, 3, R()).add(2, 3, rp(2)).done());
    } else {
      out.push_back(eigen_u(n));
    }
    if (n == 4)
      out.push_back(VecBuilder("t(4)", 4, label, Specialization::l_to(Q(1) / rp(5)))
                        .dense({Q(1) / rp(2), Q(1), ir, rp(2), R(), Q(1)}).done());
    if (n == 5)
      out.push_back(VecBuilder("t(5)", 5, label, Specialization::l_to(Q(1) / rp(7)))
                        .dense({Q(1) / rp(3), ir, Q(1) / rp(2), R(), Q(1), ir, rp(3), rp(2), R(), Q(1)}).done());
  } else if (label == "n-minus-1+" || label == "n-minus-1-") {
    const int eps = label == "n-minus-1+" ? 1 : -1;
    if (n == 4) {
      append(n4_sign_v(eps));
      if (eps < 0)
        out.push_back(VecBuilder("z(4)", 4, label, Specialization::l_to(-ir))
                          .dense({Q(1), -Q(1), Q(0), Q(1), Q(0), Q(1)}).done());
      else
        out.push_back(VecBuilder("z'(4)", 4, label, Specialization::l_to(ir))
                          .dense({Q(0), -Q(1), Q(0), Q(0), Q(0), Q(1)}).done());
    } else {
      append(sign_v(n, eps));
    }
    if (n == 3)
      out.push_back(VecBuilder("z(3)", 3, label, Specialization::l_to(Q(eps))).dense({Q(1), -Q(1), Q(0)}).done());
    if (n == 5) {
      if (eps < 0)
        out.push_back(VecBuilder("z(5)-", 5, label, Specialization::l_to(-Q(1) / rp(2)))
                          .dense({-rp(2), rp(2) + ir, R(), -ir, Q(1), Q(0), Q(0), -Q(1), R(), Q(0)}).done());
      else
        out.push_back(VecBuilder("z(5)+", 5, label, Specialization::l_to(Q(1) / rp(2)))
                          .dense({rp(2), -rp(2) + ir, -R(), -ir, Q(1), Q(0), Q(0), -Q(1), R(), Q(0)}).done());
    }
  } else if (label == "l=r") {
    require(n >= 4, "case l=r needs n >= 4");
    append(lr_span(n));
    if (n == 4)
      out.push_back(VecBuilder("x(4)", 4, label, Specialization::l_to(R()))
                        .dense({Q(0), -R(), rp(2), Q(0), Q(1), -R()}).done());
    if (n >= 5) out.push_back(stable_x(n));
    if (n == 5) {
      out.push_back(VecBuilder("x(5)", 5, label, Specialization::l_to(R()))
                        .dense({rp(2), Q(0), -R(), Q(1), -R(), Q(0), Q(0), Q(0), Q(0), Q(0)}).done());
      append(n5_lr_w());
    }
  } else if (label == "l=-r3") {
    const auto s = Specialization::l_to(-rp(3));
    if (n == 3) out.push_back(VecBuilder("y(3)", 3, label, s).dense({-R(), -ir, Q(1)}).done());
    if (n == 4) {
      append(n4_minus_r3_v());
      out.push_back(VecBuilder("y(4)", 4, label, s).dense({-rp(2), -Q(1), Q(0), -Q(1) / rp(2), Q(0), Q(1)}).done());
    }
    if (n == 5)
      out.push_back(VecBuilder("y(5)", 5, label, s)
                        .dense({Q(0), -R(), Q(0), -ir, Q(1), Q(0), Q(0), Q(0), Q(0), Q(0)}).done());
    if (n >= 5) out.push_back(stable_y(n));
    if (n >= 6) append(tail_v(n));
  } else {
    require(n == 3, "case root-of-unity is registered for n = 3");
    const auto s = Specialization::l_to_cyclotomic(-rp(3), 12);
    out.push_back(VecBuilder("u+", 3, label, s).add(1, 2, Q(1)).add(1, 3, R()).add(2, 3, rp(2)).done());
    out.push_back(VecBuilder("u-", 3, label, s).add(1, 2, Q(1)).add(1, 3, -ir).add(2, 3, Q(1) / rp(2)).done());
  }
  return out;
}

struct MembershipResult {
  std::string name;
  bool in_kernel = false;
  std::vector<std::string> residual;  // T(n) v, canonical strings
};

namespace detail {

template <class F>
std::vector<F> lift(const NamedVector& v) {
  std::vector<F> out;
  for (const auto& c : v.dense()) {
    if constexpr (std::is_same_v<F, Cyclo>)
      out.push_back(to_quotient(c, v.spec.ring));
    else
      out.push_back(c);
  }
  return out;
}

}  // namespace detail

inline MembershipResult check_membership_detail(const NamedVector& v) {
  if (v.is_zero()) throw std::invalid_argument("named vector " + v.name + " is zero");
  MembershipResult res;
  res.name = v.name;
  with_field(v.spec, [&](const auto& p) {
    using F = std::decay_t<decltype(p.r)>;
    if constexpr (std::is_same_v<F, RatFunc2>) {
      throw unsupported_error("membership needs a specialized l");
    } else {
      const auto T = t_matrix(v.n, p);
      const auto y = T * detail::lift<F>(v);
      res.in_kernel = is_zero_vector(y);
      for (const auto& c : y) res.residual.push_back(c.str());
    }
    return 0;
  });
  return res;
}

inline bool check_membership(const NamedVector& v) { return check_membership_detail(v).in_kernel; }

// G_i v = r v for every i.
inline bool is_r_eigenvector(const NamedVector& v) {
  const auto p = params_at(v.spec.f);
  const auto L = build_matrices(v.n, p);
  const auto x = v.dense();
  for (int i = 1; i < v.n; ++i) {
    auto y = L.g(i) * x;
    for (std::size_t k = 0; k < y.size(); ++k)
      if (y[k] != RatFunc1::r() * x[k]) return false;
  }
  return true;
}

// Rank of the coordinate vectors, all taken at the first vector's specialization.
inline int span_rank(const std::vector<NamedVector>& vs) {
  if (vs.empty()) return 0;
  const int n = vs.front().n;
  Matrix<RatFunc1> M(vs.size(), static_cast<std::size_t>(dim_for(n)));
  for (std::size_t a = 0; a < vs.size(); ++a) {
    if (vs[a].n != n) throw std::invalid_argument("span_rank needs vectors of a common n");
    const auto d = vs[a].dense();
    for (std::size_t b = 0; b < d.size(); ++b) M(a, b) = d[b];
  }
  return static_cast<int>(rank(M));
}

}  // namespace lk
