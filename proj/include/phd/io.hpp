#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "phd/tritable.hpp"

namespace phd {

/// Malformed or schema-violating input document.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Int int_from_json(const nlohmann::json& v, const std::string& field) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.empty() ||
        s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) !=
            std::string::npos)
      throw SchemaError("field '" + field + "' is not a decimal integer: '" +
                        s + "'");
    return Int(s);
  }
  if (v.is_number_integer()) return Int(v.get<long long>());
  throw SchemaError("field '" + field + "' must be a decimal string or integer");
}

inline int small_int_from_json(const nlohmann::json& v,
                               const std::string& field) {
  if (!v.is_number_integer())
    throw SchemaError("field '" + field + "' must be an integer");
  const long long raw = v.get<long long>();
  if (raw < -1000000 || raw > 1000000)
    throw SchemaError("field '" + field + "' is out of range");
  return static_cast<int>(raw);
}

}  // namespace detail

/// Table entries from the documented schema. Entries must be objects with
/// exactly the keys i, k, d, h; h is a decimal string (plain integers are
/// accepted on input). Duplicate triples and non-positive h are rejected.
inline TriTable table_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SchemaError("document is not a JSON object");
  if (!doc.contains("n")) throw SchemaError("missing field 'n'");
  if (!doc.contains("entries")) throw SchemaError("missing field 'entries'");
  const int n = detail::small_int_from_json(doc["n"], "n");
  if (n < 0) throw SchemaError("field 'n' must be non-negative");
  if (!doc["entries"].is_array())
    throw SchemaError("field 'entries' must be an array");
  TriTable::Map entries;
  for (const auto& e : doc["entries"]) {
    if (!e.is_object()) throw SchemaError("entry is not an object");
    for (const auto& [key, _] : e.items())
      if (key != "i" && key != "k" && key != "d" && key != "h")
        throw SchemaError("entry has unknown key '" + key + "'");
    for (const char* key : {"i", "k", "d", "h"})
      if (!e.contains(key))
        throw SchemaError(std::string("entry missing key '") + key + "'");
    const Triple t{detail::small_int_from_json(e["i"], "i"),
                   detail::small_int_from_json(e["k"], "k"),
                   detail::small_int_from_json(e["d"], "d")};
    const Int h = detail::int_from_json(e["h"], "h");
    if (h <= 0)
      throw SchemaError("entry " + to_string(t) + " has non-positive h");
    if (!entries.emplace(t, h).second)
      throw SchemaError("duplicate entry at " + to_string(t));
  }
  if (doc.contains("total")) {
    const Int declared = detail::int_from_json(doc["total"], "total");
    Int sum = 0;
    for (const auto& [t, h] : entries) sum += h;
    if (declared != sum)
      throw SchemaError("declared total " + declared.str() +
                        " does not match entry sum " + sum.str());
  }
  return TriTable(std::move(entries), n);
}

/// Canonical JSON form: {name, n, total, entries} with entries sorted by
/// (d, i, k) and all dimension counts as decimal strings. Byte-identical
/// for identical tables.
inline nlohmann::ordered_json diamond_to_json(const TriTable& a,
                                              const std::string& name) {
  nlohmann::ordered_json doc;
  doc["name"] = name;
  doc["n"] = a.half_dim();
  doc["total"] = a.total().str();
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [t, h] : a.entries()) {
    nlohmann::ordered_json e;
    e["i"] = t.i;
    e["k"] = t.k;
    e["d"] = t.d;
    e["h"] = h.str();
    doc["entries"].push_back(std::move(e));
  }
  return doc;
}

/// CSV with header "i,k,d,h", rows sorted by (d, i, k), LF line endings.
inline std::string diamond_to_csv(const TriTable& a) {
  std::string out = "i,k,d,h\n";
  for (const auto& [t, h] : a.entries())
    out += std::to_string(t.i) + "," + std::to_string(t.k) + "," +
           std::to_string(t.d) + "," + h.str() + "\n";
  return out;
}

/// One block per cohomological degree d in increasing order, i as rows and
/// k as columns; empty cells stay blank.
inline std::string diamond_to_ascii(const TriTable& a) {
  if (a.empty()) return "(empty table)\n";
  int imin = 0, imax = 2 * a.half_dim();
  int kmin = 0, kmax = 2 * a.half_dim();
  std::size_t width = 1;
  for (const auto& [t, h] : a.entries()) {
    imin = std::min(imin, t.i);
    imax = std::max(imax, t.i);
    kmin = std::min(kmin, t.k);
    kmax = std::max(kmax, t.k);
    width = std::max(width, h.str().size());
  }
  for (int k = kmin; k <= kmax; ++k)
    width = std::max(width, ("k=" + std::to_string(k)).size());
  auto pad = [&](const std::string& s) {
    return std::string(width >= s.size() ? width - s.size() : 0, ' ') + s;
  };
  auto emit_row = [](std::ostringstream& out, std::string row) {
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << "\n";
  };
  std::ostringstream out;
  int current_d = a.entries().begin()->first.d - 1;
  for (const auto& [t, h] : a.entries()) {
    if (t.d == current_d) continue;
    current_d = t.d;
    out << "d = " << current_d << "\n";
    std::string header(6, ' ');
    for (int k = kmin; k <= kmax; ++k) header += " " + pad("k=" + std::to_string(k));
    emit_row(out, std::move(header));
    for (int i = imin; i <= imax; ++i) {
      bool row_nonempty = false;
      for (int k = kmin; k <= kmax; ++k)
        if (a.at(i, k, current_d) != 0) row_nonempty = true;
      if (!row_nonempty) continue;
      std::string row = "i=" + std::to_string(i);
      row += std::string(row.size() < 6 ? 6 - row.size() : 0, ' ');
      for (int k = kmin; k <= kmax; ++k) {
        const Int h_ik = a.at(i, k, current_d);
        row += " " + pad(h_ik == 0 ? "" : h_ik.str());
      }
      emit_row(out, std::move(row));
    }
    out << "\n";
  }
  out << "total " << a.total().str() << "\n";
  return out.str();
}

}  // namespace phd
