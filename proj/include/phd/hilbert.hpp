#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "phd/parallel.hpp"
#include "phd/partition.hpp"
#include "phd/surface.hpp"
#include "phd/sympower.hpp"
#include "phd/tritable.hpp"

namespace phd {

namespace detail {

/// Symmetric powers of the (m-1)-twisted surface table, memoized per part
/// size m. Twisting each m-part factor by m-1 before the symmetric power
/// shifts the partition term by its total codimension n - |nu|; the
/// equivalence with one twist of the whole term is a unit test.
class TwistedSymCache {
 public:
  explicit TwistedSymCache(const TriTable& surface) : surface_(surface) {}

  const TriTable& power(int m, int a) {
    const auto key = std::make_pair(m, a);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto twisted = twisted_.find(m);
    if (twisted == twisted_.end())
      twisted = twisted_.emplace(m, tate_twist(surface_, m - 1)).first;
    return cache_.emplace(key, sym_power(twisted->second, a)).first->second;
  }

  /// Read-only lookup for the parallel phase; every key must have been
  /// warmed beforehand.
  const TriTable& power_cached(int m, int a) const {
    auto it = cache_.find(std::make_pair(m, a));
    if (it == cache_.end())
      throw std::logic_error("TwistedSymCache: cold lookup in parallel phase");
    return it->second;
  }

 private:
  const TriTable& surface_;
  std::map<int, TriTable> twisted_;
  std::map<std::pair<int, int>, TriTable> cache_;
};

}  // namespace detail

/// Diamond of one partition stratum: tensor over part sizes m of the a_m-th
/// symmetric power of the (m-1)-twisted surface table.
inline TriTable hilb_partition_term(const detail::TwistedSymCache& cache,
                                    const Partition& nu) {
  TriTable term = TriTable::unit();
  for (int m = 1; m <= static_cast<int>(nu.multiplicities().size()); ++m) {
    if (nu.mult(m) == 0) continue;
    term = tensor(term, cache.power_cached(m, nu.mult(m)));
  }
  return term;
}

/// Perverse-Hodge diamond of the n-th Hilbert scheme of the surface,
/// computed as the sum over partitions nu of n of the twisted
/// symmetric-power strata. Partition terms are independent and evaluated
/// with a deterministic ordered reduction.
inline TriTable hilb_partition_sum(const SurfaceSpec& s, int n) {
  if (n < 1) throw std::invalid_argument("hilb_partition_sum: n must be >= 1");
  const std::vector<Partition> parts = partitions(n);
  detail::TwistedSymCache cache(s.table());
  // Warm the cache serially so the parallel phase only reads it.
  for (const auto& nu : parts)
    for (int m = 1; m <= n; ++m)
      if (nu.mult(m) > 0) cache.power(m, nu.mult(m));
  const std::vector<TriTable> terms = parallel::map(
      static_cast<int>(parts.size()),
      [&](int idx) { return hilb_partition_term(cache, parts[idx]); });
  TableBuilder acc;
  for (const auto& term : terms) acc.add_table(term);
  return std::move(acc).build(n);
}

/// The same diamonds through one truncated product expansion: coefficient
/// of z^n is the diamond of the n-th Hilbert scheme, for every n up to
/// n_max. Independent of the partition-sum route; the two are cross-checked
/// by tests and by the oracle command.
inline GenSeries hilb_product_formula(const SurfaceSpec& s, int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("hilb_product_formula: negative order");
  std::vector<TriTable::Map> acc(n_max + 1);
  acc[0][Triple{0, 0, 0}] = 1;
  for (int m = 1; m <= n_max; ++m) {
    const GenSeries factor = sym_series(tate_twist(s.table(), m - 1), n_max / m);
    std::vector<TriTable::Map> next(n_max + 1);
    for (int total = 0; total <= n_max; ++total)
      for (int a = 0; a * m <= total; ++a) {
        const TriTable& f = factor[a];
        if (f.empty()) continue;
        for (const auto& [p, v] : acc[total - a * m])
          for (const auto& [q, w] : f.entries())
            next[total][Triple{p.i + q.i, p.k + q.k, p.d + q.d}] += v * w;
      }
    acc = std::move(next);
  }
  GenSeries out{n_max, {}};
  out.coeff.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    out.coeff.emplace_back(std::move(acc[n]), n);
  return out;
}

/// Matsushita edge check: the k = 2n slice of a fibration diamond must be
/// exactly {(i, 2n, 2i) : n <= i <= 2n} with every h = 1, and the i = 2n
/// slice must mirror it.
inline CheckReport check_matsushita(const TriTable& diamond) {
  CheckReport report("matsushita");
  const int n = diamond.half_dim();
  std::map<Triple, bool> flagged;
  for (const auto& [t, h] : diamond.entries()) {
    const bool edge_k = t.k == 2 * n;
    const bool edge_i = t.i == 2 * n;
    if (edge_k && (t.d != 2 * t.i || t.i < n || h != 1)) flagged[t] = true;
    if (edge_i && (t.d != 2 * t.k || t.k < n || h != 1)) flagged[t] = true;
  }
  for (int i = n; i <= 2 * n; ++i) {
    if (diamond.at(i, 2 * n, 2 * i) != 1)
      flagged[Triple{i, 2 * n, 2 * i}] = true;
    if (diamond.at(2 * n, i, 2 * i) != 1)
      flagged[Triple{2 * n, i, 2 * i}] = true;
  }
  for (const auto& [t, _] : flagged) report.violations.push_back(t);
  report.pass = report.violations.empty();
  if (!report.pass)
    report.notes.push_back("k=2n edge mismatch, first at " +
                           to_string(report.violations.front()));
  return report;
}

}  // namespace phd
