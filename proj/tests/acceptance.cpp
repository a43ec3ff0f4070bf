// Acceptance suite: one line per criterion, exact integer comparisons
// throughout (tolerance zero), with the two timing gates enforced.
// Exit code is the number of failed criteria.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phd/phd.hpp"
#include "random_tables.hpp"

using phd::GenSeries;
using phd::Int;
using phd::SurfaceSpec;
using phd::TriTable;
using phd::Triple;
using phd::WeylMode;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": "
            << name;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

/// Independent expansion of prod_m (1 - z^m)^{-24}, nested loops only.
std::vector<Int> k3_euler_series(int depth) {
  std::vector<Int> coeff(depth + 1);
  coeff[0] = 1;
  for (int m = 1; m <= depth; ++m) {
    std::vector<Int> next(depth + 1);
    for (int total = 0; total <= depth; ++total)
      for (int a = 0; a * m <= total; ++a)
        next[total] += coeff[total - a * m] * phd::multichoose(24, a);
    coeff = std::move(next);
  }
  return coeff;
}

}  // namespace

int main() {
  const SurfaceSpec k3 = phd::builtin_elliptic_k3();

  // Criterion 1: Euler characteristics of hilb(K3, n), n = 1..5.
  {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Int> frozen{24, 324, 3200, 25650, 176256};
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 5; ++n) {
      const Int chi = euler_char(hilb_partition_sum(k3, n));
      if (chi != frozen[n - 1]) {
        ok = false;
        detail = "n=" + std::to_string(n) + " gave " + chi.str();
        break;
      }
    }
    const std::vector<Int> independent = k3_euler_series(5);
    for (int n = 1; ok && n <= 5; ++n)
      if (independent[n] != frozen[n - 1]) {
        ok = false;
        detail = "frozen values disagree with the series oracle";
      }
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
      ok = false;
      detail = "took " + std::to_string(elapsed) + "s (limit 1s)";
    }
    report(1, "Euler characteristics n=1..5 = 24, 324, 3200, 25650, 176256",
           ok, detail.empty() ? std::to_string(elapsed) + "s" : detail);
  }

  // Criterion 2: partition sum equals product-formula coefficient, n <= 8.
  std::map<int, TriTable> diamonds;
  {
    const auto start = std::chrono::steady_clock::now();
    const GenSeries series = hilb_product_formula(k3, 8);
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 8; ++n) {
      diamonds.emplace(n, hilb_partition_sum(k3, n));
      if (!(series[n] == diamonds.at(n))) {
        ok = false;
        detail = "paths disagree at n=" + std::to_string(n);
      }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) {
      ok = false;
      detail = "took " + std::to_string(elapsed) + "s (limit 30s)";
    }
    report(2, "partition-sum and product-formula paths agree for n<=8", ok,
           detail.empty() ? std::to_string(elapsed) + "s" : detail);
  }

  // Criterion 3: perverse-Hodge symmetry on the whole family.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [n, d] : diamonds)
      if (!check_phs(d).pass) {
        ok = false;
        detail = "phs fails at n=" + std::to_string(n);
      }
    report(3, "check_phs passes on hilb(K3, n) for n<=8", ok, detail);
  }

  // Criterion 4: Serre duality invariance.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [n, d] : diamonds)
      if (!(dual(d) == d)) {
        ok = false;
        detail = "dual(D) != D at n=" + std::to_string(n);
      }
    report(4, "dual-invariance passes on hilb(K3, n) for n<=8", ok, detail);
  }

  // Criterion 5: Matsushita edge.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [n, d] : diamonds) {
      if (!phd::check_matsushita(d).pass) {
        ok = false;
        detail = "edge fails at n=" + std::to_string(n);
        continue;
      }
      // The slice must hold exactly the expected triples, all with h=1.
      int edge_entries = 0;
      for (const auto& [t, h] : d.entries())
        if (t.k == 2 * n) ++edge_entries;
      if (edge_entries != n + 1) {
        ok = false;
        detail = "extra k=2n entries at n=" + std::to_string(n);
      }
    }
    report(5, "k=2n slice is {(i,2n,2i): n<=i<=2n} with h=1, n<=8", ok,
           detail);
  }

  // Criterion 6: Weyl orbit invariance, plus swap-vs-phs agreement.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [n, d] : diamonds) {
      if (!phd::check_weyl_invariance(d, WeylMode::D3).pass ||
          !phd::check_weyl_invariance(d, WeylMode::B3).pass) {
        ok = false;
        detail = "orbit invariance fails at n=" + std::to_string(n);
      }
    }
    if (phd::weyl_group(WeylMode::D3).size() != 24 ||
        phd::weyl_group(WeylMode::B3).size() != 48) {
      ok = false;
      detail = "wrong group orders";
    }
    std::mt19937_64 rng(160924);
    for (int trial = 0; trial < 100; ++trial) {
      const TriTable a = trial % 2 == 0 ? testgen::random_table(rng)
                                        : testgen::random_phs_table(rng);
      if (phd::invariant_under(a, phd::swap_pf()) != check_phs(a).pass) {
        ok = false;
        detail = "swap verdict differs from check_phs";
      }
    }
    report(6, "D3 (24) and B3 (48) invariance, swap == phs on 100 tables", ok,
           detail);
  }

  // Criterion 7: octahedron membership with unit boundary vertices.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [n, d] : diamonds) {
      if (!phd::check_octahedron(d).pass) {
        ok = false;
        detail = "hull violated at n=" + std::to_string(n);
        continue;
      }
      for (const auto& v : phd::octahedron_vertices(n)) {
        if (d.at(v.i, v.k, v.d) != 1) {
          ok = false;
          detail = "vertex " + to_string(v) + " missing at n=" +
                   std::to_string(n);
          continue;
        }
        const auto w = phd::centered(v, n);
        if (std::abs(w.h) + std::abs(w.p) + std::abs(w.f) != 2 * n) {
          ok = false;
          detail = "vertex off the hull boundary at n=" + std::to_string(n);
        }
      }
    }
    report(7, "octahedron inequality with all six unit vertices, n<=8", ok,
           detail);
  }

  // Criterion 8: smooth-case matching on the full grid, n <= 6.
  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (int i = 0; i <= 2 * n && ok; ++i)
        for (int k = 0; k <= 2 * n && ok; ++k) {
          if (!phd::check_smooth_phs(n, i, k).pass) {
            ok = false;
            detail = "term matching fails at n=" + std::to_string(n) + " (" +
                     std::to_string(i) + "," + std::to_string(k) + ")";
          }
          const auto window = phd::build_G(n, i, k).degree_window();
          if (window != phd::build_G(n, k, i).degree_window()) {
            ok = false;
            detail = "windows differ across the pair";
          }
          if (!window) continue;
          const int lo = std::max(i, k) - 2 * n;
          const int hi = std::min(i, k) - n;
          if (window->first < lo || window->second > hi) {
            ok = false;
            detail = "window exceeds [max(i,k)-2n, min(i,k)-n]";
          }
          if (std::min(i, k) <= n && n <= std::max(i, k) &&
              (window->first != lo || window->second != hi)) {
            ok = false;
            detail = "window endpoints not attained";
          }
        }
    report(8, "smooth-case matching and degree windows for n<=6", ok, detail);
  }

  // Criterion 9: marginal identity and the n=2 Hodge numbers.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [n, d] : diamonds)
      if (!(hodge_marginal(d) == perverse_marginal(d))) {
        ok = false;
        detail = "marginals differ at n=" + std::to_string(n);
      }
    const phd::Bigraded hodge = hodge_marginal(diamonds.at(2));
    Int b2 = 0;
    for (const auto& [key, v] : hodge)
      if (key.first + key.second == 2) b2 += v;
    if (hodge.at({1, 1}) != 21 || b2 != 23) {
      ok = false;
      detail = "n=2 Hodge numbers off: h11=" + hodge.at({1, 1}).str() +
               " b2=" + b2.str();
    }
    report(9, "hodge = perverse marginal for n<=8; n=2 has h11=21, b2=23", ok,
           detail);
  }

  // Criterion 10: algebra laws over 1000+ randomized tables.
  {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(424242);
    int tables = 0;
    for (int trial = 0; trial < 250 && ok; ++trial) {
      const TriTable a = testgen::random_table(rng);
      const TriTable b = testgen::random_table(rng);
      const TriTable c = testgen::random_table(rng);
      tables += 3;
      const int tw = static_cast<int>(rng() % 7) - 3;
      if (!(tensor(a, b) == tensor(b, a))) ok = false, detail = "commutativity";
      if (!(tensor(tensor(a, b), c) == tensor(a, tensor(b, c))))
        ok = false, detail = "associativity";
      if (!(tensor(a, TriTable::unit()) == a)) ok = false, detail = "unit";
      if (!(tensor(tate_twist(a, tw), b) == tate_twist(tensor(a, b), tw)))
        ok = false, detail = "twist-tensor commutation";
    }
    for (int trial = 0; trial < 150 && ok; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 3);
      const TriTable a = testgen::random_box_table(rng, n);
      ++tables;
      if (!(dual(dual(a)) == a)) ok = false, detail = "dual involution";
    }
    for (int trial = 0; trial < 150 && ok; ++trial) {
      TriTable::Map m;
      const bool odd = trial % 2 == 1;
      const int count = 1 + static_cast<int>(rng() % 4);
      for (int e = 0; e < count; ++e)
        m[Triple{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
                 2 * static_cast<int>(rng() % 3) + (odd ? 1 : 0)}] =
            1 + static_cast<int>(rng() % 6);
      const TriTable a(std::move(m), 1);
      ++tables;
      const int power = static_cast<int>(rng() % 4);
      const Int expected = odd ? phd::binom(a.total(), power)
                               : phd::multichoose(a.total(), power);
      if (!(sym_power(a, power).total() == expected))
        ok = false, detail = "symmetric-power dimension law";
    }
    if (tables < 1000) {
      ok = false;
      detail = "only " + std::to_string(tables) + " tables";
    }
    report(10, "algebra laws over " + std::to_string(tables) +
                   " randomized tables",
           ok, detail);
  }

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) +
                                    " criteria FAILED")
            << "\n";
  return failures;
}
