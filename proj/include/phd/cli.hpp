#pragma once

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phd/hilbert.hpp"
#include "phd/io.hpp"
#include "phd/smooth.hpp"
#include "phd/surface.hpp"
#include "phd/sympower.hpp"
#include "phd/tritable.hpp"
#include "phd/weyl.hpp"

namespace phd::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string surface_name;
  std::string surface_file;
  int n = 0;      // 0 = not given
  int n_max = 0;  // 0 = not given
  std::string format = "ascii";
  std::string checks = "all";
  std::string checks_positional;
  bool no_validate = false;
  int truncation = 10;
};

namespace detail {

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{
      "phs", "dual", "matsushita", "weyl", "octahedron", "paths", "smooth"};
  return names;
}

inline std::set<std::string> parse_checks(const std::string& list) {
  std::set<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& name : known_checks()) out.insert(name);
      continue;
    }
    bool known = false;
    for (const auto& name : known_checks()) known = known || name == item;
    if (!known) throw SchemaError("unknown check '" + item + "'");
    out.insert(item);
  }
  if (out.empty()) throw SchemaError("empty check selection");
  return out;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("invalid JSON in '" + path + "': " + e.what());
  }
}

inline SurfaceSpec load_configured_surface(const RunConfig& config) {
  if (!config.surface_file.empty())
    return load_surface(read_json_file(config.surface_file),
                        !config.no_validate);
  const std::string name =
      config.surface_name.empty() ? "k3-elliptic" : config.surface_name;
  return builtin_surface(name);
}

/// Range of Hilbert-scheme sizes a command operates on.
inline std::vector<int> size_range(const RunConfig& config, int default_max) {
  std::vector<int> out;
  if (config.n > 0) {
    out.push_back(config.n);
    return out;
  }
  const int top = config.n_max > 0 ? config.n_max : default_max;
  for (int n = 1; n <= top; ++n) out.push_back(n);
  return out;
}

struct Row {
  std::string label;
  bool pass = true;
  bool counts = true;  // informational rows never flip the exit code
  std::string detail;
};

inline Row row_of(const std::string& label, const CheckReport& report,
                  bool counts = true) {
  Row row{label, report.pass, counts, ""};
  if (!report.pass && !report.notes.empty()) row.detail = report.notes.front();
  if (!report.pass && row.detail.empty() && !report.violations.empty())
    row.detail = "first violation at " + to_string(report.violations.front());
  return row;
}

inline int print_rows(const std::vector<Row>& rows, std::ostream& out) {
  int failures = 0;
  for (const auto& row : rows) {
    const char* tag = row.pass ? "[PASS]" : (row.counts ? "[FAIL]" : "[WARN]");
    out << tag << " " << row.label;
    if (!row.detail.empty()) out << ": " << row.detail;
    out << "\n";
    if (!row.pass && row.counts) ++failures;
  }
  out << (failures == 0 ? "all checks passed"
                        : std::to_string(failures) + " check(s) failed")
      << "\n";
  return failures == 0 ? kExitPass : kExitCheckFailure;
}

}  // namespace detail

inline int cmd_diamond(const RunConfig& config, std::ostream& out,
                       std::ostream& err) {
  SurfaceSpec s = detail::load_configured_surface(config);
  if (has_odd_degree(s.table()))
    err << "note: surface has odd-degree classes; symmetric powers follow "
           "the signed rule\n";
  const int n = config.n > 0 ? config.n : 1;
  const TriTable diamond = hilb_partition_sum(s, n);
  const std::string name =
      n == 1 ? s.name() : s.name() + "^[" + std::to_string(n) + "]";
  if (config.format == "json") {
    out << diamond_to_json(diamond, name).dump(2) << "\n";
  } else if (config.format == "csv") {
    out << diamond_to_csv(diamond);
  } else {
    out << name << "  n=" << n << "\n\n" << diamond_to_ascii(diamond);
  }
  return kExitPass;
}

inline int cmd_check(const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
  const std::set<std::string> selected = detail::parse_checks(
      config.checks_positional.empty() ? config.checks
                                       : config.checks_positional);
  std::vector<detail::Row> rows;

  const bool surface_needed =
      selected.contains("phs") || selected.contains("dual") ||
      selected.contains("matsushita") || selected.contains("weyl") ||
      selected.contains("octahedron") || selected.contains("paths");

  const std::vector<int> sizes = detail::size_range(config, 5);

  if (surface_needed) {
    SurfaceSpec s = [&] {
      try {
        return detail::load_configured_surface(config);
      } catch (const ValidationError& e) {
        rows.push_back({"validate", false, true, e.what()});
        detail::print_rows(rows, out);
        throw;
      }
    }();
    rows.push_back({"validate", true, true,
                    config.no_validate && !config.surface_file.empty()
                        ? "skipped (--no-validate)"
                        : ""});
    if (has_odd_degree(s.table()))
      err << "note: surface has odd-degree classes; symmetric powers follow "
             "the signed rule\n";
    // B3 and octahedron are hard assertions for the builtin pipeline only;
    // on user tables they are informational.
    const bool hard = config.surface_file.empty();

    std::map<int, TriTable> diamonds;
    for (int n : sizes) diamonds.emplace(n, hilb_partition_sum(s, n));

    auto label = [](const std::string& name, int n) {
      return name + " n=" + std::to_string(n);
    };
    for (int n : sizes) {
      const TriTable& d = diamonds.at(n);
      if (selected.contains("phs"))
        rows.push_back(detail::row_of(label("phs", n), check_phs(d)));
      if (selected.contains("dual"))
        rows.push_back(detail::row_of(label("dual", n), check_self_dual(d)));
      if (selected.contains("matsushita"))
        rows.push_back(
            detail::row_of(label("matsushita", n), check_matsushita(d)));
      if (selected.contains("weyl")) {
        rows.push_back(detail::row_of(label("weyl-D3", n),
                                      check_weyl_invariance(d, WeylMode::D3)));
        rows.push_back(detail::row_of(label("weyl-B3", n),
                                      check_weyl_invariance(d, WeylMode::B3),
                                      hard));
      }
      if (selected.contains("octahedron"))
        rows.push_back(
            detail::row_of(label("octahedron", n), check_octahedron(d), hard));
    }
    if (selected.contains("paths")) {
      const int top = sizes.back();
      const GenSeries series = hilb_product_formula(s, top);
      for (int n : sizes) {
        detail::Row row{label("paths", n), series[n] == diamonds.at(n), true,
                        ""};
        if (!row.pass) row.detail = "partition sum != product coefficient";
        rows.push_back(row);
      }
    }
  }

  if (selected.contains("smooth")) {
    for (int n : sizes) {
      int pairs = 0;
      CheckReport grid("smooth");
      for (int i = 0; i <= 2 * n; ++i)
        for (int k = 0; k <= 2 * n; ++k) {
          ++pairs;
          const CheckReport r = check_smooth_phs(n, i, k);
          if (!r.pass) {
            grid.pass = false;
            if (grid.notes.size() < 4)
              grid.notes.push_back(r.notes.empty() ? "mismatch"
                                                   : r.notes.front());
          }
        }
      detail::Row row = detail::row_of(
          "smooth n=" + std::to_string(n), grid);
      if (row.pass)
        row.detail = std::to_string(pairs) + " (i,k) pairs";
      rows.push_back(row);
      rows.push_back(detail::row_of("saito-ranks n=" + std::to_string(n),
                                    check_saito_ranks(n)));
    }
  }

  return detail::print_rows(rows, out);
}

inline int cmd_oracle(const RunConfig& config, std::ostream& out,
                      std::ostream& err) {
  std::vector<detail::Row> rows;
  SurfaceSpec s = [&] {
    try {
      return detail::load_configured_surface(config);
    } catch (const ValidationError& e) {
      rows.push_back({"validate", false, true, e.what()});
      detail::print_rows(rows, out);
      throw;
    }
  }();
  if (has_odd_degree(s.table()))
    err << "note: surface has odd-degree classes; symmetric powers follow "
           "the signed rule\n";

  const std::vector<int> sizes = detail::size_range(config, 5);
  const int top = sizes.back();
  const GenSeries series = hilb_product_formula(s, top);

  for (int n : sizes) {
    const TriTable d = hilb_partition_sum(s, n);
    {
      detail::Row row{"marginal-identity n=" + std::to_string(n),
                      hodge_marginal(d) == perverse_marginal(d), true, ""};
      if (!row.pass) row.detail = "hodge and perverse marginals differ";
      rows.push_back(row);
    }
    {
      detail::Row row{"paths n=" + std::to_string(n), series[n] == d, true,
                      ""};
      if (!row.pass) row.detail = "partition sum != product coefficient";
      rows.push_back(row);
    }
  }

  // Euler-characteristic series against the closed product form
  // prod_m (1 - z^m)^{-chi(S)}, expanded independently here. chi can be
  // negative for odd-heavy surfaces; sym_count carries the signs.
  {
    const int depth = config.truncation;
    const Int chi = euler_char(s.table());
    std::vector<Int> expected(depth + 1);
    expected[0] = 1;
    for (int m = 1; m <= depth; ++m) {
      std::vector<Int> next(depth + 1);
      for (int total = 0; total <= depth; ++total)
        for (int a = 0; a * m <= total; ++a)
          next[total] += expected[total - a * m] * sym_count(chi, a);
      expected = std::move(next);
    }
    const GenSeries deep = depth == top ? series : hilb_product_formula(s, depth);
    bool pass = true;
    std::string detail_msg;
    for (int n = 0; n <= depth; ++n)
      if (euler_char(deep[n]) != expected[n]) {
        pass = false;
        detail_msg = "mismatch at z^" + std::to_string(n);
        break;
      }
    rows.push_back({"euler-series (up to z^" + std::to_string(depth) + ")",
                    pass, true, detail_msg});
  }

  return detail::print_rows(rows, out);
}

/// Entry point shared by the binary and the tests. Returns the process
/// exit code: 0 all good, 1 at least one check failed, 2 usage or input
/// error.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact perverse-Hodge diamond calculator"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    auto* name =
        cmd->add_option("--surface", config.surface_name, "builtin surface name");
    auto* file = cmd->add_option("--surface-file", config.surface_file,
                                 "surface JSON file");
    name->excludes(file);
    cmd->add_option("--n", config.n, "single Hilbert-scheme size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n-max", config.n_max, "run sizes 1..n_max")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--no-validate", config.no_validate,
                  "skip surface validation on load");
    cmd->add_option("--truncation", config.truncation,
                    "generating-series truncation order")
        ->check(CLI::NonNegativeNumber);
    if (with_format)
      cmd->add_option("--format", config.format, "ascii|json|csv")
          ->check(CLI::IsMember({"ascii", "json", "csv"}));
  };

  CLI::App* diamond = app.add_subcommand("diamond", "compute one diamond");
  add_common(diamond, true);

  CLI::App* check = app.add_subcommand("check", "run symmetry checks");
  add_common(check, false);
  check->add_option("selection", config.checks_positional,
                    "comma-separated checks (default all)");
  check->add_option("--checks", config.checks,
                    "comma-separated checks: phs,dual,matsushita,weyl,"
                    "octahedron,paths,smooth,all");

  CLI::App* oracle =
      app.add_subcommand("oracle", "compare independent computation routes");
  add_common(oracle, false);

  std::vector<const char*> argv;
  argv.push_back("phd");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (config.n < 0 || config.n_max < 0)
      throw SchemaError("sizes must be positive");
    if (diamond->parsed()) return cmd_diamond(config, out, err);
    if (check->parsed()) return cmd_check(config, out, err);
    return cmd_oracle(config, out, err);
  } catch (const ValidationError& e) {
    if (diamond->parsed()) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;  // invalid input table for a compute command
    }
    return kExitCheckFailure;  // row already printed by check/oracle
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> args;
  for (int idx = 1; idx < argc; ++idx) args.emplace_back(argv[idx]);
  return run(args, out, err);
}

}  // namespace phd::cli
