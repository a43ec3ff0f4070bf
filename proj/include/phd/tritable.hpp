#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phd/bigint.hpp"

namespace phd {

/// Index triple of a trigraded dimension table: perverse degree i, Hodge
/// degree k, cohomological degree d. Indices are stored normalized, so a
/// fibration table of half-dimension n has 0 <= i,k <= 2n and 0 <= d <= 4n.
/// Triples order by (d, i, k); this is also the serialization order.
struct Triple {
  int i = 0;
  int k = 0;
  int d = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend bool operator<(const Triple& a, const Triple& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.i != b.i) return a.i < b.i;
    return a.k < b.k;
  }
};

inline std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.k) + "," +
         std::to_string(t.d) + ")";
}

/// Sparse trigraded dimension table (i,k,d) -> h^{i,k,d}, together with the
/// half-dimension n of the total space (dim = 2n). Zero entries are never
/// stored. Tables are immutable after construction; all operations on them
/// are pure functions returning new tables, so values are safe to share
/// across threads.
class TriTable {
 public:
  using Map = std::map<Triple, Int>;

  TriTable() = default;  // empty table, n = 0

  TriTable(Map entries, int n) : entries_(std::move(entries)), n_(n) {
    if (n_ < 0)
      throw std::invalid_argument("TriTable: negative half-dimension");
    for (auto it = entries_.begin(); it != entries_.end();) {
      if (it->second < 0)
        throw std::invalid_argument("TriTable: negative dimension at " +
                                    to_string(it->first));
      it = (it->second == 0) ? entries_.erase(it) : std::next(it);
    }
  }

  /// The tensor unit {(0,0,0): 1} with n = 0.
  static TriTable unit() { return TriTable({{Triple{0, 0, 0}, 1}}, 0); }

  const Map& entries() const { return entries_; }
  int half_dim() const { return n_; }
  bool empty() const { return entries_.empty(); }

  /// h^{i,k,d}; zero when the triple is outside the support.
  Int at(int i, int k, int d) const {
    auto it = entries_.find(Triple{i, k, d});
    return it == entries_.end() ? Int(0) : it->second;
  }

  /// Total dimension, the sum of all stored h.
  Int total() const {
    Int sum = 0;
    for (const auto& [t, h] : entries_) sum += h;
    return sum;
  }

  /// Whether the support lies inside the fibration box for this table's n.
  bool in_box() const {
    for (const auto& [t, h] : entries_)
      if (t.i < 0 || t.i > 2 * n_ || t.k < 0 || t.k > 2 * n_ || t.d < 0 ||
          t.d > 4 * n_)
        return false;
    return true;
  }

  friend bool operator==(const TriTable&, const TriTable&) = default;

 private:
  Map entries_;
  int n_ = 0;
};

/// Entrywise accumulator used when assembling a table from summands.
class TableBuilder {
 public:
  void add(const Triple& t, const Int& h) {
    if (h == 0) return;
    acc_[t] += h;
  }
  void add_table(const TriTable& a) {
    for (const auto& [t, h] : a.entries()) add(t, h);
  }
  TriTable build(int n) && { return TriTable(std::move(acc_), n); }

 private:
  TriTable::Map acc_;
};

/// Outcome of a structural check. A failed check is a report, not an
/// error: `violations` lists offending triples where that makes sense and
/// `notes` carries further detail in deterministic order.
struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<Triple> violations;
  std::vector<std::string> notes;

  CheckReport() = default;
  explicit CheckReport(std::string name) : check(std::move(name)) {}
};

/// Convolution product: h_C(i,k,d) = sum over splittings of the triple of
/// h_A * h_B. The result's half-dimension is n_A + n_B.
inline TriTable tensor(const TriTable& a, const TriTable& b) {
  TriTable::Map acc;
  for (const auto& [s, hs] : a.entries())
    for (const auto& [t, ht] : b.entries())
      acc[Triple{s.i + t.i, s.k + t.k, s.d + t.d}] += hs * ht;
  return TriTable(std::move(acc), a.half_dim() + b.half_dim());
}

/// Tate twist by c: every entry (i,k,d) moves to (i+c, k+c, d+2c); n is
/// unchanged. twist(-c) inverts twist(c).
inline TriTable tate_twist(const TriTable& a, int c) {
  TriTable::Map acc;
  for (const auto& [t, h] : a.entries())
    acc[Triple{t.i + c, t.k + c, t.d + 2 * c}] = h;
  return TriTable(std::move(acc), a.half_dim());
}

/// Serre-duality reflection (i,k,d) -> (2n-i, 2n-k, 4n-d). Rejects tables
/// whose support leaves the fibration box, where the reflection would be
/// meaningless.
inline TriTable dual(const TriTable& a) {
  const int n = a.half_dim();
  TriTable::Map acc;
  for (const auto& [t, h] : a.entries()) {
    if (t.i < 0 || t.i > 2 * n || t.k < 0 || t.k > 2 * n || t.d < 0 ||
        t.d > 4 * n)
      throw std::invalid_argument("dual: support outside box at " +
                                  to_string(t));
    acc[Triple{2 * n - t.i, 2 * n - t.k, 4 * n - t.d}] = h;
  }
  return TriTable(std::move(acc), n);
}

/// Bigraded marginal table; keys are (first index, complementary degree).
using Bigraded = std::map<std::pair<int, int>, Int>;

/// Sum over the perverse index: (k, d-k) -> sum_i h^{i,k,d}. For a
/// fibration diamond this is the Hodge diamond of the total space.
inline Bigraded hodge_marginal(const TriTable& a) {
  Bigraded out;
  for (const auto& [t, h] : a.entries()) out[{t.k, t.d - t.k}] += h;
  return out;
}

/// Sum over the Hodge index: (i, d-i) -> sum_k h^{i,k,d}. These are the
/// perverse numbers of the fibration.
inline Bigraded perverse_marginal(const TriTable& a) {
  Bigraded out;
  for (const auto& [t, h] : a.entries()) out[{t.i, t.d - t.i}] += h;
  return out;
}

/// Signed total dimension sum: sum over the support of (-1)^d h.
inline Int euler_char(const TriTable& a) {
  Int sum = 0;
  for (const auto& [t, h] : a.entries())
    sum += (t.d % 2 != 0) ? -h : h;
  return sum;
}

/// Self-duality check: passes iff the reflection (i,k,d) -> (2n-i, 2n-k,
/// 4n-d) fixes the table. Tables with support outside the box fail with a
/// note instead of throwing.
inline CheckReport check_self_dual(const TriTable& a) {
  CheckReport report("dual");
  if (!a.in_box()) {
    report.pass = false;
    report.notes.push_back("support outside box; reflection undefined");
    return report;
  }
  const TriTable reflected = dual(a);
  if (reflected == a) return report;
  report.pass = false;
  std::map<Triple, bool> flagged;
  for (const auto& [t, h] : a.entries())
    if (reflected.at(t.i, t.k, t.d) != h) flagged[t] = true;
  for (const auto& [t, h] : reflected.entries())
    if (a.at(t.i, t.k, t.d) != h) flagged[t] = true;
  for (const auto& [t, _] : flagged) report.violations.push_back(t);
  report.notes.push_back("duality failure at " +
                         to_string(report.violations.front()));
  return report;
}

/// Perverse-Hodge symmetry check: passes iff h(i,k,d) = h(k,i,d) for all
/// triples. Both members of a mismatched pair are reported.
inline CheckReport check_phs(const TriTable& a) {
  CheckReport report("phs");
  std::map<Triple, bool> flagged;
  for (const auto& [t, h] : a.entries()) {
    const Triple mirror{t.k, t.i, t.d};
    if (a.at(mirror.i, mirror.k, mirror.d) != h) {
      flagged[t] = true;
      flagged[mirror] = true;
    }
  }
  for (const auto& [t, _] : flagged) report.violations.push_back(t);
  report.pass = report.violations.empty();
  if (!report.pass)
    report.notes.push_back("h(i,k,d) != h(k,i,d) at " +
                           std::to_string(report.violations.size()) +
                           " triple(s), first " +
                           to_string(report.violations.front()));
  return report;
}

}  // namespace phd
