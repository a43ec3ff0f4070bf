#pragma once

#include <stdexcept>
#include <vector>

#include "phd/tritable.hpp"

namespace phd {

/// Truncated generating series with trigraded-table coefficients. The
/// coefficient of z^m is the table of the m-th symmetric piece (or of the
/// m-th Hilbert scheme, for the driver's series). Coefficient zero is
/// always the unit table.
struct GenSeries {
  int order = 0;
  std::vector<TriTable> coeff;  // size order + 1

  const TriTable& operator[](int m) const { return coeff.at(m); }
};

/// m-th super-symmetric power of a table. Parity is the parity of the
/// cohomological degree d: even-d classes multiply symmetrically, odd-d
/// classes exterior-wise, so the coefficient of t^m in
///
///   prod_{d even} (1 - t x^i y^k q^d)^{-h} * prod_{d odd} (1 + t x^i y^k q^d)^{h}
///
/// is the result. The half-dimension of the result is m * n.
inline TriTable sym_power(const TriTable& a, int m) {
  if (m < 0) throw std::invalid_argument("sym_power: negative exponent");
  const std::vector<std::pair<Triple, Int>> entries(a.entries().begin(),
                                                    a.entries().end());
  TriTable::Map acc;
  auto walk = [&](auto&& self, std::size_t idx, int remaining, Triple pos,
                  const Int& count) -> void {
    if (remaining == 0) {
      acc[pos] += count;
      return;
    }
    if (idx == entries.size()) return;
    const auto& [t, h] = entries[idx];
    const bool odd = (t.d % 2) != 0;
    int cmax = remaining;
    if (odd && h < cmax) cmax = h.convert_to<int>();
    for (int c = 0; c <= cmax; ++c) {
      const Int ways = odd ? binom(h, c) : multichoose(h, c);
      if (ways == 0) continue;
      self(self, idx + 1, remaining - c,
           Triple{pos.i + c * t.i, pos.k + c * t.k, pos.d + c * t.d},
           count * ways);
    }
  };
  walk(walk, 0, m, Triple{0, 0, 0}, 1);
  return TriTable(std::move(acc), m * a.half_dim());
}

/// All symmetric powers up to the truncation order in one pass, computed
/// as a truncated product of per-entry factors. This is an independent
/// route to the same coefficients as sym_power; the two are cross-checked
/// in the test suite.
inline GenSeries sym_series(const TriTable& a, int order) {
  if (order < 0) throw std::invalid_argument("sym_series: negative order");
  std::vector<TriTable::Map> acc(order + 1);
  acc[0][Triple{0, 0, 0}] = 1;
  for (const auto& [t, h] : a.entries()) {
    const bool odd = (t.d % 2) != 0;
    std::vector<Int> factor(order + 1);
    for (int c = 0; c <= order; ++c)
      factor[c] = odd ? binom(h, c) : multichoose(h, c);
    std::vector<TriTable::Map> next(order + 1);
    for (int s = 0; s <= order; ++s)
      for (int c = 0; c <= s; ++c) {
        if (factor[c] == 0) continue;
        for (const auto& [p, v] : acc[s - c])
          next[s][Triple{p.i + c * t.i, p.k + c * t.k, p.d + c * t.d}] +=
              v * factor[c];
      }
    acc = std::move(next);
  }
  GenSeries out{order, {}};
  out.coeff.reserve(order + 1);
  for (int m = 0; m <= order; ++m)
    out.coeff.emplace_back(std::move(acc[m]), m * a.half_dim());
  return out;
}

/// True when some class sits in odd cohomological degree; symmetric powers
/// of such tables use the exterior rule on those classes, which reports
/// call out explicitly.
inline bool has_odd_degree(const TriTable& a) {
  for (const auto& [t, h] : a.entries())
    if ((t.d % 2) != 0) return true;
  return false;
}

}  // namespace phd
