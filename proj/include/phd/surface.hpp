#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phd/io.hpp"
#include "phd/tritable.hpp"

namespace phd {

/// Semantically invalid surface data (schema was fine, invariants are not).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SurfaceMeta {
  std::optional<int> singular_fibers;
  std::vector<int> reducible_fiber_components;
};

/// Structural checks a surface table must pass: n = 1, support inside the
/// box, perverse-Hodge symmetry, self-duality, and surface-shaped Hodge
/// corners h^{0,0} = h^{2,2} = 1. Deterministic order.
inline std::vector<CheckReport> surface_checks(const TriTable& table) {
  std::vector<CheckReport> reports;

  CheckReport box("box");
  if (table.half_dim() != 1) {
    box.pass = false;
    box.notes.push_back("surface table must have n=1, got n=" +
                        std::to_string(table.half_dim()));
  }
  for (const auto& [t, h] : table.entries())
    if (t.i < 0 || t.i > 2 || t.k < 0 || t.k > 2 || t.d < 0 || t.d > 4) {
      box.pass = false;
      box.violations.push_back(t);
    }
  if (!box.violations.empty())
    box.notes.push_back("support outside box at " +
                        to_string(box.violations.front()));
  reports.push_back(std::move(box));

  CheckReport phs = check_phs(table);
  if (!phs.pass)
    phs.notes.insert(phs.notes.begin(),
                     "PHS violation at " + to_string(phs.violations.front()));
  reports.push_back(std::move(phs));

  reports.push_back(check_self_dual(table));

  CheckReport corners("hodge-corners");
  Bigraded hm = hodge_marginal(table);
  auto corner = [&](int p, int q) {
    auto it = hm.find({p, q});
    return it == hm.end() ? Int(0) : it->second;
  };
  if (corner(0, 0) != 1 || corner(2, 2) != 1) {
    corners.pass = false;
    corners.notes.push_back("surface Hodge diamond needs h^{0,0}=h^{2,2}=1, got " +
                            corner(0, 0).str() + ", " + corner(2, 2).str());
  }
  reports.push_back(std::move(corners));
  return reports;
}

/// A named, validated n=1 base case for the Hilbert-scheme driver.
class SurfaceSpec {
 public:
  SurfaceSpec(std::string name, TriTable table, SurfaceMeta meta = {},
              bool validate = true)
      : name_(std::move(name)),
        table_(std::move(table)),
        meta_(std::move(meta)),
        validated_(validate) {
    if (!validate) return;
    for (const auto& report : surface_checks(table_))
      if (!report.pass)
        throw ValidationError("surface '" + name_ + "': " +
                              (report.notes.empty() ? report.check + " check failed"
                                                    : report.notes.front()));
  }

  const std::string& name() const { return name_; }
  const TriTable& table() const { return table_; }
  const SurfaceMeta& meta() const { return meta_; }
  bool validated() const { return validated_; }

 private:
  std::string name_;
  TriTable table_;
  SurfaceMeta meta_;
  bool validated_ = false;
};

/// Elliptic K3 with 24 irreducible nodal fibers. The d=2 slice splits the
/// 22-dimensional H^2 as: pulled-back hyperplane class of the base at
/// (0,1,2), a relatively ample class at (2,1,2), and the 20-dimensional
/// middle piece with Hodge profile (1, 18, 1) across k = 0, 1, 2.
inline SurfaceSpec builtin_elliptic_k3() {
  TriTable::Map m{
      {Triple{0, 0, 0}, 1}, {Triple{0, 1, 2}, 1},  {Triple{1, 0, 2}, 1},
      {Triple{1, 1, 2}, 18}, {Triple{1, 2, 2}, 1}, {Triple{2, 1, 2}, 1},
      {Triple{2, 2, 4}, 1}};
  SurfaceMeta meta;
  meta.singular_fibers = 24;
  return SurfaceSpec("k3-elliptic", TriTable(std::move(m), 1), meta);
}

inline std::vector<std::string> builtin_surface_names() {
  return {"k3-elliptic"};
}

/// Builtin lookup by name; throws SchemaError (a usage error) on unknown
/// names, listing what is available.
inline SurfaceSpec builtin_surface(const std::string& name) {
  if (name == "k3-elliptic") return builtin_elliptic_k3();
  std::string known;
  for (const auto& s : builtin_surface_names())
    known += (known.empty() ? "" : ", ") + s;
  throw SchemaError("unknown builtin surface '" + name + "' (available: " +
                    known + ")");
}

/// Surface ingestion from a parsed JSON document following the diamond
/// schema, plus an optional "meta" object. Schema problems raise
/// SchemaError; invariant failures raise ValidationError naming the first
/// offending triple (suppressed entirely with validate = false).
inline SurfaceSpec load_surface(const nlohmann::json& doc,
                                bool validate = true) {
  if (!doc.is_object()) throw SchemaError("document is not a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "name" && key != "n" && key != "entries" && key != "total" &&
        key != "meta")
      throw SchemaError("unknown top-level key '" + key + "'");
  if (!doc.contains("name") || !doc["name"].is_string())
    throw SchemaError("missing or non-string field 'name'");
  TriTable table = table_from_json(doc);
  SurfaceMeta meta;
  if (doc.contains("meta")) {
    const auto& m = doc["meta"];
    if (!m.is_object()) throw SchemaError("field 'meta' must be an object");
    for (const auto& [key, _] : m.items())
      if (key != "singular_fibers" && key != "reducible_fiber_components")
        throw SchemaError("unknown meta key '" + key + "'");
    if (m.contains("singular_fibers")) {
      const int count =
          detail::small_int_from_json(m["singular_fibers"], "singular_fibers");
      if (count < 0) throw SchemaError("meta 'singular_fibers' is negative");
      meta.singular_fibers = count;
    }
    if (m.contains("reducible_fiber_components")) {
      if (!m["reducible_fiber_components"].is_array())
        throw SchemaError("meta 'reducible_fiber_components' must be an array");
      for (const auto& c : m["reducible_fiber_components"]) {
        const int count =
            detail::small_int_from_json(c, "reducible_fiber_components");
        if (count < 1)
          throw SchemaError("meta fiber component counts must be >= 1");
        meta.reducible_fiber_components.push_back(count);
      }
    }
  }
  return SurfaceSpec(doc["name"].get<std::string>(), std::move(table),
                     std::move(meta), validate);
}

inline nlohmann::ordered_json surface_to_json(const SurfaceSpec& s) {
  nlohmann::ordered_json doc = diamond_to_json(s.table(), s.name());
  if (s.meta().singular_fibers || !s.meta().reducible_fiber_components.empty()) {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    if (s.meta().singular_fibers)
      meta["singular_fibers"] = *s.meta().singular_fibers;
    if (!s.meta().reducible_fiber_components.empty())
      meta["reducible_fiber_components"] = s.meta().reducible_fiber_components;
    doc["meta"] = std::move(meta);
  }
  return doc;
}

}  // namespace phd
