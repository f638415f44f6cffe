#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>

namespace lk {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

inline const Rational& rational_zero() {
  static const Rational z(0);
  return z;
}

// Appends one monomial "c*l^a*r^b" to a canonical sum string.
inline void append_term(std::string& out, const Rational& c,
                        std::initializer_list<std::pair<const char*, std::size_t>> vars,
                        bool first) {
  const bool neg = sgn(c) < 0;
  if (first) {
    if (neg) out += '-';
  } else {
    out += neg ? " - " : " + ";
  }
  Rational a = abs(c);
  bool have_var = false;
  for (const auto& v : vars) have_var = have_var || v.second > 0;
  bool wrote = false;
  if (!have_var || a != 1) {
    out += a.get_str();
    wrote = true;
  }
  for (const auto& v : vars) {
    if (v.second == 0) continue;
    if (wrote) out += '*';
    out += v.first;
    if (v.second > 1) {
      out += '^';
      out += std::to_string(v.second);
    }
    wrote = true;
  }
}

}  // namespace detail
}  // namespace lk
