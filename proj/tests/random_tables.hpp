#pragma once

// Deterministic random-table generators for the property tests. All
// suites seed their own std::mt19937_64 so failures reproduce exactly.

#include <random>

#include "phd/tritable.hpp"

namespace testgen {

using phd::Int;
using phd::TriTable;
using phd::Triple;

inline Int random_h(std::mt19937_64& rng) {
  Int h = 1 + static_cast<int>(rng() % 9);
  if (rng() % 8 == 0) h <<= 80;  // exercise the big-integer path
  return h;
}

/// Small table with unconstrained support (may violate every symmetry).
inline TriTable random_table(std::mt19937_64& rng, int max_entries = 5,
                             int max_idx = 4, int max_d = 6) {
  TriTable::Map m;
  const int count = static_cast<int>(rng() % (max_entries + 1));
  for (int e = 0; e < count; ++e) {
    const Triple t{static_cast<int>(rng() % (max_idx + 1)),
                   static_cast<int>(rng() % (max_idx + 1)),
                   static_cast<int>(rng() % (max_d + 1))};
    m[t] = random_h(rng);
  }
  return TriTable(std::move(m), static_cast<int>(rng() % 4));
}

/// PHS-symmetric table: mirror every generated entry.
inline TriTable random_phs_table(std::mt19937_64& rng, int max_entries = 5) {
  const TriTable raw = random_table(rng, max_entries);
  TriTable::Map m;
  for (const auto& [t, h] : raw.entries()) {
    m[t] += h;
    m[Triple{t.k, t.i, t.d}] += h;
  }
  return TriTable(std::move(m), raw.half_dim());
}

/// Table supported inside the box of its half-dimension n.
inline TriTable random_box_table(std::mt19937_64& rng, int n,
                                 int max_entries = 5) {
  TriTable::Map m;
  const int count = static_cast<int>(rng() % (max_entries + 1));
  for (int e = 0; e < count; ++e) {
    const Triple t{static_cast<int>(rng() % (2 * n + 1)),
                   static_cast<int>(rng() % (2 * n + 1)),
                   static_cast<int>(rng() % (4 * n + 1))};
    m[t] = random_h(rng);
  }
  return TriTable(std::move(m), n);
}

/// Box table symmetrized under the duality reflection.
inline TriTable random_selfdual_table(std::mt19937_64& rng, int n,
                                      int max_entries = 5) {
  const TriTable raw = random_box_table(rng, n, max_entries);
  TriTable::Map m;
  for (const auto& [t, h] : raw.entries()) {
    m[t] += h;
    m[Triple{2 * n - t.i, 2 * n - t.k, 4 * n - t.d}] += h;
  }
  return TriTable(std::move(m), n);
}

}  // namespace testgen
