#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "phd/tritable.hpp"

namespace phd {

/// Simultaneous eigenvalue triple of the Cartan operators (H, H_P, H_F)
/// on a weight space of a fibration diamond. Weights coming from a table
/// entry share the parity of d in all three coordinates.
struct CenteredWeight {
  int h = 0;  // eigenvalue of H:   d - 2n
  int p = 0;  // eigenvalue of H_P: 2i - d
  int f = 0;  // eigenvalue of H_F: 2k - d

  friend bool operator==(const CenteredWeight&, const CenteredWeight&) = default;
  friend bool operator<(const CenteredWeight& a, const CenteredWeight& b) {
    if (a.h != b.h) return a.h < b.h;
    if (a.p != b.p) return a.p < b.p;
    return a.f < b.f;
  }
};

inline std::string to_string(const CenteredWeight& w) {
  return "(" + std::to_string(w.h) + "," + std::to_string(w.p) + "," +
         std::to_string(w.f) + ")";
}

inline CenteredWeight centered(int i, int k, int d, int n) {
  return CenteredWeight{d - 2 * n, 2 * i - d, 2 * k - d};
}

inline CenteredWeight centered(const Triple& t, int n) {
  return centered(t.i, t.k, t.d, n);
}

/// Inverse of centered(); throws on coordinates of mixed parity, which
/// cannot come from a table entry.
inline Triple normalized(const CenteredWeight& w, int n) {
  const int d = w.h + 2 * n;
  if (((w.p + d) % 2 + 2) % 2 != 0 || ((w.f + d) % 2 + 2) % 2 != 0)
    throw std::invalid_argument("normalized: parity violation at " +
                                to_string(w));
  return Triple{(w.p + d) / 2, (w.f + d) / 2, d};
}

/// Signed coordinate permutation of weight space: coordinate j of the
/// image is sign[j] * w[perm[j]].
struct WeylElement {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  CenteredWeight apply(const CenteredWeight& w) const {
    const std::array<int, 3> v{w.h, w.p, w.f};
    return CenteredWeight{sign[0] * v[perm[0]], sign[1] * v[perm[1]],
                          sign[2] * v[perm[2]]};
  }

  int sign_product() const { return sign[0] * sign[1] * sign[2]; }

  friend WeylElement compose(const WeylElement& g, const WeylElement& h) {
    WeylElement out;
    for (int j = 0; j < 3; ++j) {
      out.perm[j] = h.perm[g.perm[j]];
      out.sign[j] = g.sign[j] * h.sign[g.perm[j]];
    }
    return out;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (int j = 0; j < 3; ++j)
      s += std::string(j ? "," : "") + (sign[j] < 0 ? "-" : "+") +
           std::to_string(perm[j]);
    return s + "]";
  }
};

/// D3: Weyl group of so(6), signed permutations with sign product +1,
/// order 24 (the rotation group of the octahedron). B3: Weyl group of
/// so(7), all signed permutations, order 48 (its full symmetry group).
enum class WeylMode { D3, B3 };

inline std::string to_string(WeylMode mode) {
  return mode == WeylMode::D3 ? "D3" : "B3";
}

/// The group elements in a fixed deterministic order (permutations
/// lexicographic, then sign patterns lexicographic).
inline std::vector<WeylElement> weyl_group(WeylMode mode) {
  static const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<WeylElement> out;
  out.reserve(mode == WeylMode::D3 ? 24 : 48);
  for (const auto& perm : perms)
    for (int bits = 0; bits < 8; ++bits) {
      WeylElement g;
      g.perm = perm;
      for (int j = 0; j < 3; ++j) g.sign[j] = (bits >> j) & 1 ? -1 : 1;
      if (mode == WeylMode::D3 && g.sign_product() != 1) continue;
      out.push_back(g);
    }
  return out;
}

/// The element exchanging H_P and H_F while fixing H; invariance under it
/// is exactly perverse-Hodge symmetry of the table.
inline WeylElement swap_pf() {
  return WeylElement{{0, 2, 1}, {1, 1, 1}};
}

/// -1 on weight space; on a box-supported table this acts as dual().
inline WeylElement negation() {
  return WeylElement{{0, 1, 2}, {-1, -1, -1}};
}

/// Multiplicity function of the diamond on centered weights.
inline std::map<CenteredWeight, Int> centered_multiplicities(
    const TriTable& a) {
  std::map<CenteredWeight, Int> out;
  for (const auto& [t, h] : a.entries()) out[centered(t, a.half_dim())] = h;
  return out;
}

/// Whether the multiplicity function is constant along the orbit of each
/// weight under the single element g.
inline bool invariant_under(const TriTable& a, const WeylElement& g) {
  const auto mult = centered_multiplicities(a);
  for (const auto& [w, h] : mult) {
    auto it = mult.find(g.apply(w));
    if (it == mult.end() || it->second != h) return false;
  }
  return true;
}

/// Orbit invariance of the diamond's weight multiplicities under the
/// chosen Weyl group. Violations are reported as normalized triples.
inline CheckReport check_weyl_invariance(const TriTable& a, WeylMode mode) {
  CheckReport report("weyl-" + to_string(mode));
  const auto mult = centered_multiplicities(a);
  const auto group = weyl_group(mode);
  std::map<Triple, bool> flagged;
  for (const auto& g : group)
    for (const auto& [w, h] : mult) {
      const CenteredWeight image = g.apply(w);
      auto it = mult.find(image);
      if (it == mult.end() || it->second != h) {
        flagged[normalized(w, a.half_dim())] = true;
        if (report.notes.size() < 8)
          report.notes.push_back("multiplicity not constant on orbit of " +
                                 to_string(w) + " under " + g.to_string());
      }
    }
  for (const auto& [t, _] : flagged) report.violations.push_back(t);
  report.pass = report.violations.empty();
  if (mode == WeylMode::B3)
    report.notes.push_back("B3 orbit invariance requires b2 >= 5");
  return report;
}

/// The six diamond vertices in normalized coordinates; under centered()
/// they are exactly (+-2n, 0, 0), (0, +-2n, 0), (0, 0, +-2n).
inline std::array<Triple, 6> octahedron_vertices(int n) {
  return {Triple{0, 0, 0},         Triple{0, n, 2 * n},
          Triple{n, 0, 2 * n},     Triple{n, 2 * n, 2 * n},
          Triple{2 * n, n, 2 * n}, Triple{2 * n, 2 * n, 4 * n}};
}

/// Octahedron shape check: every entry must satisfy
/// |d-2n| + |2i-d| + |2k-d| <= 2n (membership in the convex hull of the
/// six vertices). Notes additionally report whether all six vertices are
/// present with h = 1.
inline CheckReport check_octahedron(const TriTable& a) {
  CheckReport report("octahedron");
  const int n = a.half_dim();
  for (const auto& [t, h] : a.entries()) {
    const CenteredWeight w = centered(t, n);
    if (std::abs(w.h) + std::abs(w.p) + std::abs(w.f) > 2 * n)
      report.violations.push_back(t);
  }
  report.pass = report.violations.empty();
  if (!report.pass)
    report.notes.push_back("entry outside the hull at " +
                           to_string(report.violations.front()));
  int present = 0;
  for (const auto& v : octahedron_vertices(n))
    if (a.at(v.i, v.k, v.d) == 1) ++present;
  report.notes.push_back("vertices with h=1: " + std::to_string(present) +
                         "/6");
  return report;
}

}  // namespace phd
