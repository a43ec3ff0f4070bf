#include <catch2/catch_amalgamated.hpp>

#include "phd/smooth.hpp"

using phd::BlueprintTerm;
using phd::ComplexBlueprint;
using phd::Int;

TEST_CASE("vector bundle ranks", "[smooth]") {
  REQUIRE(phd::vb_rank(2, 1, 1) == 4);
  for (int n = 0; n <= 6; ++n) REQUIRE(phd::vb_rank(n, 0, 0) == 1);
  REQUIRE(phd::vb_rank(3, 2, 5) == 0);
  REQUIRE(phd::vb_rank(3, -1, 0) == 0);
}

TEST_CASE("blueprints of small complexes", "[smooth]") {
  // n=1, G_{0,1}: the single term Omega^1 placed in degree -1.
  const ComplexBlueprint g01 = phd::build_G(1, 0, 1);
  REQUIRE(g01.terms.size() == 1);
  REQUIRE(g01.terms[0] == BlueprintTerm{-1, 1, 0, 0, 1});

  // n=2, G_{1,3}: one term of rank 2 in degree -1.
  const ComplexBlueprint g13 = phd::build_G(2, 1, 3);
  REQUIRE(g13.terms.size() == 1);
  REQUIRE(g13.terms[0].degree == -1);
  REQUIRE(g13.terms[0].rank == 2);

  // n=1, G_{1,1}: two rank-1 terms spanning the full window [k-2n, i-n].
  const ComplexBlueprint g11 = phd::build_G(1, 1, 1);
  REQUIRE(g11.terms.size() == 2);
  REQUIRE(g11.terms[0] == BlueprintTerm{-1, 1, 1, 0, 0});
  REQUIRE(g11.terms[1] == BlueprintTerm{0, 1, 0, 1, 1});
  REQUIRE(g11.degree_window() == std::make_pair(-1, 0));

  // Out-of-range indices and extinguished complexes are empty.
  REQUIRE(phd::build_G(1, -1, 0).terms.empty());
  REQUIRE(phd::build_G(1, 0, 3).terms.empty());
  REQUIRE(phd::build_G(1, 0, 2).terms.empty());
  REQUIRE(phd::build_G(1, 2, 0).terms.empty());
}

TEST_CASE("degrees are strictly increasing", "[smooth]") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= 2 * n; ++i)
      for (int k = 0; k <= 2 * n; ++k) {
        const ComplexBlueprint g = phd::build_G(n, i, k);
        for (std::size_t t = 1; t < g.terms.size(); ++t)
          REQUIRE(g.terms[t - 1].degree < g.terms[t].degree);
        for (const auto& term : g.terms) REQUIRE(term.rank > 0);
      }
}

TEST_CASE("term-by-term matching on the full grid", "[smooth]") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= 2 * n; ++i)
      for (int k = 0; k <= 2 * n; ++k) {
        const auto report = phd::check_smooth_phs(n, i, k);
        if (!report.pass)
          FAIL("mismatch at n=" << n << " i=" << i << " k=" << k);
      }
  REQUIRE(phd::check_smooth_phs(1, 1, 1).pass);  // identity matching
}

TEST_CASE("paired complexes share length, rank and degrees", "[smooth]") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= 2 * n; ++i)
      for (int k = 0; k <= 2 * n; ++k) {
        const ComplexBlueprint a = phd::build_G(n, i, k);
        const ComplexBlueprint b = phd::build_G(n, k, i);
        REQUIRE(a.terms.size() == b.terms.size());
        REQUIRE(a.total_rank() == b.total_rank());
        std::vector<int> da, db;
        for (const auto& term : a.terms) da.push_back(term.degree);
        for (const auto& term : b.terms) db.push_back(term.degree);
        REQUIRE(da == db);  // same degree multiset (both sorted)
      }
}

TEST_CASE("degree windows", "[smooth]") {
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= 2 * n; ++i)
      for (int k = 0; k <= 2 * n; ++k) {
        const auto window = phd::build_G(n, i, k).degree_window();
        REQUIRE(window == phd::build_G(n, k, i).degree_window());
        if (!window) continue;
        const int lo = std::max(i, k) - 2 * n;
        const int hi = std::min(i, k) - n;
        REQUIRE(window->first >= lo);
        REQUIRE(window->second <= hi);
        // The stated window is attained exactly when n separates the
        // indices.
        if (std::min(i, k) <= n && n <= std::max(i, k))
          REQUIRE(window == std::make_pair(lo, hi));
      }
}

TEST_CASE("ranks assemble to the pushforward of the k-forms", "[smooth]") {
  for (int n = 1; n <= 5; ++n) {
    const auto report = phd::check_saito_ranks(n);
    if (!report.pass) {
      for (const auto& note : report.notes) UNSCOPED_INFO(note);
      FAIL("saito rank bookkeeping failed at n=" << n);
    }
  }
}
