#pragma once

#include <cstdint>
#include <exception>
#include <fstream>
#include <new>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lapcoef/charpoly.hpp"
#include "lapcoef/closed_form.hpp"
#include "lapcoef/diagnostics.hpp"
#include "lapcoef/edge_list.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/limit_stats.hpp"
#include "lapcoef/parallel.hpp"
#include "lapcoef/report.hpp"
#include "lapcoef/spectrum.hpp"
#include "lapcoef/verify.hpp"

namespace lapcoef::cli {

enum class Command { coeffs, spectrum, stats, diagnose, sweep, verify };
enum class Format { json, csv, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

struct RunConfig {
  Command command = Command::verify;
  std::optional<FamilySpec> family;
  std::optional<std::string> edge_list;
  std::vector<std::size_t> ladder;
  Format format = Format::json;
  std::optional<std::string> out_path;
  bool signless = false;
  bool closed_form = false;
  std::size_t threads = 1;
  double tol = kDefaultJacobiTolerance;
};

/// Raw flag values shared by every subcommand.
struct RawFlags {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::size_t> degree;
  std::optional<std::uint64_t> seed;
  std::string edge_list;
  std::vector<std::size_t> ladder;
  std::string format;
  std::string out;
  bool signless = false;
  bool closed_form = false;
  std::size_t threads = 0;
  double tol = kDefaultJacobiTolerance;
};

inline void add_common_flags(CLI::App& sub, RawFlags& f) {
  sub.add_option("--family", f.family, "named family (path, cycle, star, complete, complete_bipartite, hypercube, "
                                       "matching_union, wheel, complete_binary_tree, random_regular, random_tree, "
                                       "random_binary_tree)");
  sub.add_option("--n", f.n, "primary size parameter");
  sub.add_option("--m", f.m, "second part size for complete_bipartite (default: n)");
  sub.add_option("--degree", f.degree, "degree for random_regular");
  sub.add_option("--seed", f.seed, "seed for random families");
  sub.add_option("--edge-list", f.edge_list, "edge-list file ('n m' header, then m lines 'u v')");
  sub.add_option("--ladder", f.ladder, "comma-separated sizes for sweep")->delimiter(',');
  sub.add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--out", f.out, "output file (default: standard output)");
  sub.add_flag("--signless", f.signless, "use the signless Laplacian D + A");
  sub.add_flag("--closed-form", f.closed_form, "use the family's closed form");
  sub.add_option("--threads", f.threads, "worker threads for sweep and verify (default: hardware)");
  sub.add_option("--tol", f.tol, "Jacobi off-diagonal tolerance (relative)")->check(CLI::PositiveNumber);
}

inline RunConfig make_config(Command cmd, const RawFlags& f) {
  RunConfig cfg;
  cfg.command = cmd;
  cfg.signless = f.signless;
  cfg.closed_form = f.closed_form;
  cfg.threads = f.threads == 0 ? default_thread_count() : f.threads;
  cfg.tol = f.tol;
  cfg.ladder = f.ladder;
  if (!f.out.empty()) cfg.out_path = f.out;
  if (f.format == "csv") {
    cfg.format = Format::csv;
  } else if (f.format == "json") {
    cfg.format = Format::json;
  } else {
    cfg.format = cmd == Command::verify ? Format::text : Format::json;
  }

  if (cmd == Command::verify) {
    if (!f.family.empty() || !f.edge_list.empty()) throw InputError("verify takes no input source");
    return cfg;
  }
  if (f.family.empty() == f.edge_list.empty()) throw InputError("give exactly one of --family or --edge-list");
  if (!f.edge_list.empty()) {
    if (cmd == Command::sweep) throw InputError("sweep needs --family");
    if (cfg.closed_form) throw InputError("--closed-form needs --family");
    cfg.edge_list = f.edge_list;
    return cfg;
  }

  FamilySpec s;
  s.family = parse_family(f.family);
  if (cmd == Command::sweep) {
    if (cfg.ladder.empty()) throw InputError("sweep needs a nonempty --ladder");
    s.n = f.n.value_or(cfg.ladder.front());
  } else {
    if (!f.n) throw InputError("--family needs --n");
    s.n = *f.n;
  }
  if (s.family == Family::complete_bipartite) {
    s.m = f.m.value_or(s.n);
  } else if (s.family == Family::random_regular) {
    if (!f.degree && !f.m) throw InputError("random_regular needs --degree");
    s.m = f.degree ? *f.degree : *f.m;
  } else if (f.m || f.degree) {
    throw InputError(std::string(family_name(s.family)) + " takes no --m/--degree");
  }
  if (is_random_family(s.family)) {
    if (!f.seed) throw InputError(std::string(family_name(s.family)) + " needs --seed");
    s.seed = f.seed;
  } else if (f.seed) {
    throw InputError(std::string(family_name(s.family)) + " is not random; --seed not accepted");
  }
  validate(s);
  cfg.family = s;
  return cfg;
}

namespace detail {

struct Input {
  Graph graph;
  std::optional<FamilySpec> family;
  std::string label;
};

inline Input load_input(const RunConfig& cfg) {
  if (cfg.edge_list) return {read_edge_list(*cfg.edge_list), std::nullopt, *cfg.edge_list};
  return {make_family(*cfg.family), cfg.family, describe(*cfg.family)};
}

inline void require_closed_form(const Input& in, bool supported) {
  if (!in.family || !supported) throw InputError("--closed-form: no closed form for '" + in.label + "'");
}

/// Matrix route unless --closed-form; above the size guard the closed form
/// is used when the family has one.
inline CoefficientVector coefficients(const RunConfig& cfg, const Input& in) {
  if (cfg.signless) {
    if (cfg.closed_form) throw InputError("--signless and --closed-form cannot be combined");
    if (in.graph.vertex_count() > kExactVertexGuard) throw GuardError("signless coefficients: graph exceeds the guard");
    return signless_coefficients(in.graph);
  }
  if (cfg.closed_form) {
    require_closed_form(in, has_closed_form_coefficients(in.family->family));
    return closed_form_coefficients(*in.family);
  }
  if (in.graph.vertex_count() <= kExactVertexGuard) return laplacian_coefficients(in.graph);
  return coefficients_for(in.graph, in.family);
}

inline Spectrum spectrum(const RunConfig& cfg, const Input& in) {
  if (cfg.signless) {
    if (cfg.closed_form) throw InputError("--signless and --closed-form cannot be combined");
    if (in.graph.vertex_count() > kJacobiVertexGuard) throw GuardError("signless spectrum: graph exceeds the guard");
    return numeric_spectrum(signless_laplacian_matrix<double>(in.graph), cfg.tol);
  }
  if (cfg.closed_form) {
    require_closed_form(in, has_closed_form_spectrum(in.family->family));
    return closed_form_spectrum<double>(*in.family);
  }
  if (in.graph.vertex_count() <= kJacobiVertexGuard) return laplacian_spectrum(in.graph, cfg.tol);
  return spectrum_for(in.graph, in.family);
}

/// L and D + A share the trace 2|E|, so one residual serves both.
inline double trace_residual(const Spectrum& s, const Input& in) {
  return trace_check(s, in.graph);
}

}  // namespace detail

inline int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  const auto in = detail::load_input(cfg);
  const auto c = detail::coefficients(cfg, in);
  if (cfg.format == Format::csv) {
    report::write_coefficients_csv(out, c);
  } else {
    report::Json j{{"graph", in.label},
                   {"matrix", cfg.signless ? "signless" : "laplacian"},
                   {"coefficients", report::coefficients_json(c)}};
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto in = detail::load_input(cfg);
  const auto s = detail::spectrum(cfg, in);
  const double residual = detail::trace_residual(s, in);
  if (cfg.format == Format::csv) {
    report::write_spectrum_csv(out, s, residual);
  } else {
    auto j = report::spectrum_json(s, residual);
    j["graph"] = in.label;
    j["matrix"] = cfg.signless ? "signless" : "laplacian";
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

inline int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  if (cfg.signless) throw InputError("stats: --signless not supported");
  const auto in = detail::load_input(cfg);
  const auto s = mean_variance(detail::spectrum(cfg, in));
  const std::size_t vertices = in.graph.vertex_count();
  const double bound = variance_lower_bound(in.graph);
  if (cfg.format == Format::csv) {
    report::write_stats_csv(out, s, vertices, bound);
  } else {
    auto j = report::stats_json(s, vertices, bound);
    j["graph"] = in.label;
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

inline void emit_rows(const RunConfig& cfg, std::span<const DiagnosticsReport> rows, bool as_array, std::ostream& out) {
  if (cfg.format == Format::csv) {
    report::write_diagnostics_csv(out, rows);
  } else if (as_array) {
    out << report::to_json(rows).dump(2) << '\n';
  } else {
    out << report::to_json(rows.front()).dump(2) << '\n';
  }
}

inline int cmd_diagnose(const RunConfig& cfg, std::ostream& out) {
  if (cfg.signless || cfg.closed_form) throw InputError("diagnose: --signless/--closed-form not supported");
  DiagnosticsReport r;
  if (cfg.family) {
    r = diagnose(*cfg.family);
  } else {
    r = diagnose(read_edge_list(*cfg.edge_list), *cfg.edge_list);
  }
  emit_rows(cfg, std::span(&r, 1), false, out);
  return kExitOk;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.signless || cfg.closed_form) throw InputError("sweep: --signless/--closed-form not supported");
  const auto rows = sweep(*cfg.family, cfg.ladder, cfg.threads);
  emit_rows(cfg, rows, true, out);
  return kExitOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto res = run_verification(verification_corpus(), cfg.threads);
  if (cfg.format == Format::text) {
    out << render_text(res);
  } else if (cfg.format == Format::csv) {
    out << "invariant,scope,checked,failed,status,first_failure\n";
    for (const auto& s : res.invariants) {
      out << report::csv_field(s.name) << ',' << report::csv_field(s.scope) << ',' << s.checked << ',' << s.failed
          << ',' << (s.passed() ? "PASS" : "FAIL") << ',' << report::csv_field(s.first_failure) << '\n';
    }
  } else {
    report::Json arr = report::Json::array();
    for (const auto& s : res.invariants) {
      arr.push_back({{"invariant", s.name},
                     {"scope", s.scope},
                     {"checked", s.checked},
                     {"failed", s.failed},
                     {"status", s.passed() ? "PASS" : "FAIL"},
                     {"first_failure", s.first_failure}});
    }
    out << report::Json{{"graphs", res.graphs}, {"invariants", arr}, {"passed", res.passed()}}.dump(2) << '\n';
  }
  return res.passed() ? kExitOk : kExitVerifyFailed;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::coeffs: return cmd_coeffs(cfg, out);
    case Command::spectrum: return cmd_spectrum(cfg, out);
    case Command::stats: return cmd_stats(cfg, out);
    case Command::diagnose: return cmd_diagnose(cfg, out);
    case Command::sweep: return cmd_sweep(cfg, out);
    case Command::verify: return cmd_verify(cfg, out);
  }
  return kExitUsage;
}

/// Output is produced into a buffer first so a failing run never leaves a
/// partial file behind.
inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buf;
    const int code = dispatch(cfg, buf);
    if (cfg.out_path) {
      std::ofstream file(*cfg.out_path, std::ios::binary);
      if (!file) throw InputError("cannot open output file '" + *cfg.out_path + "'");
      file << buf.str();
    } else {
      out << buf.str();
    }
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ConvergenceError& e) {
    err << "convergence: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::bad_alloc&) {
    err << "guard: out of memory\n";
    return kExitGuard;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian coefficients, spectra and limit diagnostics", "lapcoef"};
  app.require_subcommand(1);
  RawFlags flags;
  struct Sub {
    Command cmd;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {Command::coeffs, "coeffs", "exact Laplacian coefficients c(G,k), k = 0..n"},
      {Command::spectrum, "spectrum", "Laplacian spectrum (descending) with trace residual"},
      {Command::stats, "stats", "spectral mean mu and variance sigma^2"},
      {Command::diagnose, "diagnose", "limit diagnostics for one graph"},
      {Command::sweep, "sweep", "limit diagnostics over a size ladder"},
      {Command::verify, "verify", "run the invariant corpus"},
  };
  std::vector<std::pair<CLI::App*, Command>> registered;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common_flags(*sub, flags);
    registered.emplace_back(sub, s.cmd);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  RunConfig cfg;
  try {
    for (const auto& [sub, cmd] : registered)
      if (sub->parsed()) cfg = make_config(cmd, flags);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return execute(cfg, out, err);
}

}  // namespace lapcoef::cli
