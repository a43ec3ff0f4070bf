#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phd/bigint.hpp"
#include "phd/tritable.hpp"

namespace phd {

/// Rank of the Hodge-graded piece V^{a,b} of the weight-(a+b) local system
/// of an n-dimensional abelian fibration: C(n,a) * C(n,b), zero outside
/// 0 <= a,b <= n.
inline Int vb_rank(int n, int a, int b) { return binom(n, a) * binom(n, b); }

/// One term of a perverse-Hodge complex blueprint: V^{a,b} tensor Omega^c
/// sitting in a single cohomological degree with its total rank.
struct BlueprintTerm {
  int degree = 0;
  Int rank;
  int a = 0, b = 0, c = 0;

  friend bool operator==(const BlueprintTerm&, const BlueprintTerm&) = default;
};

/// Rank/degree model of the complex G_{i,k} over an n-dimensional base.
/// Terms are sorted by strictly increasing degree; zero-rank terms are
/// dropped.
struct ComplexBlueprint {
  int n = 0, i = 0, k = 0;
  std::vector<BlueprintTerm> terms;

  Int total_rank() const {
    Int sum = 0;
    for (const auto& t : terms) sum += t.rank;
    return sum;
  }

  /// Degree span of the nonzero terms, or nothing for the empty complex.
  std::optional<std::pair<int, int>> degree_window() const {
    if (terms.empty()) return std::nullopt;
    return std::make_pair(terms.front().degree, terms.back().degree);
  }
};

/// G_{i,k} in the smooth case: term t (t = 0..n) is V^{k-t, i-k+t} tensor
/// Omega^t at cohomological degree t - 2n + i, with rank
/// vb_rank(n, k-t, i-k+t) * C(n,t). Out-of-range (i,k) give the empty
/// blueprint.
inline ComplexBlueprint build_G(int n, int i, int k) {
  ComplexBlueprint g{n, i, k, {}};
  if (i < 0 || i > 2 * n || k < 0 || k > 2 * n) return g;
  for (int t = 0; t <= n; ++t) {
    const Int rank = vb_rank(n, k - t, i - k + t) * binom(n, t);
    if (rank == 0) continue;
    g.terms.push_back(BlueprintTerm{t - 2 * n + i, rank, k - t, i - k + t, t});
  }
  return g;
}

/// Term-by-term matching of G_{i,k} against G_{k,i}: term t must map to
/// term i-k+t with the same degree and rank (the label swaps its second
/// and third factors). Passes iff this is a bijection of nonzero terms.
inline CheckReport check_smooth_phs(int n, int i, int k) {
  CheckReport report("smooth-phs");
  const ComplexBlueprint left = build_G(n, i, k);
  const ComplexBlueprint right = build_G(n, k, i);
  auto right_term = [&](int t) -> const BlueprintTerm* {
    for (const auto& term : right.terms)
      if (term.c == t) return &term;
    return nullptr;
  };
  auto fail = [&](const std::string& why) {
    report.pass = false;
    report.notes.push_back("G(" + std::to_string(i) + "," + std::to_string(k) +
                           ") vs G(" + std::to_string(k) + "," +
                           std::to_string(i) + "): " + why);
  };
  if (left.terms.size() != right.terms.size())
    fail("term counts differ: " + std::to_string(left.terms.size()) + " vs " +
         std::to_string(right.terms.size()));
  for (const auto& term : left.terms) {
    const BlueprintTerm* image = right_term(i - k + term.c);
    if (image == nullptr) {
      fail("term t=" + std::to_string(term.c) + " has no image");
      continue;
    }
    if (image->degree != term.degree)
      fail("degree mismatch at t=" + std::to_string(term.c));
    if (image->rank != term.rank)
      fail("rank mismatch at t=" + std::to_string(term.c));
    if (image->a != term.a || image->b != term.c || image->c != term.b)
      fail("label mismatch at t=" + std::to_string(term.c));
  }
  return report;
}

/// Rank bookkeeping against the pushforward of the k-forms of the total
/// space: at every cohomological degree, the ranks of the G_{i,k} summed
/// over i must assemble to C(2n,k) * C(n, degree + 2n - k), the generic
/// rank of the degree-(2n-k)-shifted direct image. Summing over degrees
/// this is the Vandermonde identity sum_t C(n,t) C(n,k-t) = C(2n,k).
inline CheckReport check_saito_ranks(int n) {
  CheckReport report("saito-ranks");
  for (int k = 0; k <= 2 * n; ++k) {
    std::map<int, Int> by_degree;
    for (int i = 0; i <= 2 * n; ++i)
      for (const auto& term : build_G(n, i, k).terms)
        by_degree[term.degree] += term.rank;
    Int grid_total = 0;
    for (int degree = k - 2 * n; degree <= k - n; ++degree) {
      const Int expected = binom(2 * n, k) * binom(n, degree + 2 * n - k);
      auto it = by_degree.find(degree);
      const Int got = it == by_degree.end() ? Int(0) : it->second;
      if (got != expected) {
        report.pass = false;
        report.notes.push_back("k=" + std::to_string(k) + " degree " +
                               std::to_string(degree) + ": rank " + got.str() +
                               ", expected " + expected.str());
      }
      by_degree.erase(degree);
      grid_total += got;
    }
    if (!by_degree.empty()) {
      report.pass = false;
      report.notes.push_back("k=" + std::to_string(k) +
                             ": ranks outside the expected degree range");
    }
    if (grid_total != binom(2 * n, k) * (Int(1) << n)) {
      report.pass = false;
      report.notes.push_back("k=" + std::to_string(k) +
                             ": total rank != 2^n C(2n,k)");
    }
  }
  return report;
}

}  // namespace phd
