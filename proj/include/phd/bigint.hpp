#pragma once

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace phd {

/// Exact arbitrary-precision integer. Every dimension count in this
/// library is an Int; no operation is allowed to overflow silently.
using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, r) for machine-size arguments.
/// Zero outside 0 <= r <= n.
inline Int binom(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Int result = 1;
  // result stays integral at each step: after t steps it equals C(n-r+t, t).
  for (int t = 1; t <= r; ++t) {
    result *= n - r + t;
    result /= t;
  }
  return result;
}

/// C(h, c) with arbitrary-precision top argument. Zero for c > h.
inline Int binom(const Int& h, int c) {
  if (c < 0 || h < 0 || h < c) return 0;
  Int result = 1;
  for (int t = 1; t <= c; ++t) {
    result *= h - c + t;
    result /= t;
  }
  return result;
}

/// Number of size-c multisets drawn from h symbols: C(h + c - 1, c).
inline Int multichoose(const Int& h, int c) {
  if (c < 0) return 0;
  if (c == 0) return 1;
  if (h <= 0) return 0;
  Int result = 1;
  for (int t = 1; t <= c; ++t) {
    result *= h - 1 + t;
    result /= t;
  }
  return result;
}

/// Coefficient of t^c in (1 - t)^{-chi}: the signed count of the c-th
/// symmetric power of a virtual space of super-dimension chi. For
/// chi >= 0 this is multichoose; for chi < 0 it is (-1)^c C(-chi, c).
inline Int sym_count(const Int& chi, int c) {
  if (chi >= 0) return multichoose(chi, c);
  const Int v = binom(-chi, c);
  return (c % 2 != 0) ? -v : v;
}

}  // namespace phd
