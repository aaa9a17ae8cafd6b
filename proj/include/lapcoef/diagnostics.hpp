#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lapcoef/charpoly.hpp"
#include "lapcoef/closed_form.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/graph.hpp"
#include "lapcoef/limit_stats.hpp"
#include "lapcoef/parallel.hpp"
#include "lapcoef/spectrum.hpp"

namespace lapcoef {

/// Largest vertex count for which the O(n^4) exact characteristic polynomial
/// is attempted when no closed form exists.
inline constexpr std::size_t kExactVertexGuard = 256;
/// Largest vertex count for the dense Jacobi solver.
inline constexpr std::size_t kJacobiVertexGuard = 600;

/// One row of a diagnostics table.
struct DiagnosticsReport {
  std::string family;
  std::size_t n = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  double mu = 0;
  double sigma2 = 0;
  double sigma2_lower_bound = 0;
  std::optional<double> sigma2_family_bound;
  double clt_distance = 0;
  double llt_distance = 0;
  std::optional<double> poisson_distance;
  std::string verdict;
  std::string verdict_detail;
  std::optional<double> mu_per_vertex;
  std::optional<double> sigma2_per_vertex;
  std::optional<double> mu_limit_error;
  std::optional<double> sigma2_limit_error;

  friend bool operator==(const DiagnosticsReport&, const DiagnosticsReport&) = default;
};

inline CoefficientVector coefficients_for(const Graph& g, const std::optional<FamilySpec>& fam) {
  if (fam && has_closed_form_coefficients(fam->family)) return closed_form_coefficients(*fam);
  if (g.vertex_count() > kExactVertexGuard) {
    throw GuardError("exact coefficients for " + std::to_string(g.vertex_count()) +
                     " vertices exceed the guard of " + std::to_string(kExactVertexGuard) +
                     " (no closed form for this input)");
  }
  return laplacian_coefficients(g);
}

inline Spectrum spectrum_for(const Graph& g, const std::optional<FamilySpec>& fam) {
  if (fam && has_closed_form_spectrum(fam->family)) return closed_form_spectrum<double>(*fam);
  if (g.vertex_count() > kJacobiVertexGuard) {
    throw GuardError("numeric spectrum for " + std::to_string(g.vertex_count()) + " vertices exceeds the guard of " +
                     std::to_string(kJacobiVertexGuard));
  }
  return laplacian_spectrum(g);
}

namespace detail {

inline std::optional<std::pair<double, std::size_t>> poisson_parameters(const FamilySpec& s) {
  if (s.family == Family::complete) return std::pair{1.0, std::size_t{1}};
  if (s.family == Family::complete_bipartite && s.n == s.m) return std::pair{2.0, std::size_t{1}};
  return std::nullopt;
}

inline std::optional<double> family_variance_bound(const FamilySpec& s) {
  if (s.family == Family::wheel) return cone_variance_lower_bound(s.n, 2);
  if (s.family == Family::hypercube) return hypercube_variance_lower_bound(s.n);
  return std::nullopt;
}

inline FamilySpec resized(FamilySpec s, std::size_t n) {
  if (s.family == Family::complete_bipartite && s.m == s.n) s.m = n;
  s.n = n;
  return s;
}

inline bool spectrum_affordable(const FamilySpec& s) {
  if (has_closed_form_spectrum(s.family)) return s.family != Family::hypercube || s.n <= 16;
  return family_vertex_count(s) <= kJacobiVertexGuard;
}

}  // namespace detail

/// Sizes used to judge variance growth when only one size was requested.
inline std::vector<FamilySpec> probe_ladder(const FamilySpec& s) {
  std::vector<std::size_t> sizes;
  if (s.family == Family::hypercube || s.family == Family::complete_binary_tree) {
    sizes = {s.n, s.n + 1, s.n + 2};
  } else {
    sizes = {s.n, 2 * s.n, 4 * s.n};
  }
  std::vector<FamilySpec> out;
  for (std::size_t n : sizes) {
    const auto t = detail::resized(s, n);
    if (detail::spectrum_affordable(t)) out.push_back(t);
  }
  return out;
}

inline Regime classify_family(std::span<const FamilySpec> ladder) {
  std::vector<std::pair<double, double>> points;
  for (const auto& s : ladder) {
    const Spectrum spec =
        has_closed_form_spectrum(s.family) ? closed_form_spectrum<double>(s) : spectrum_for(make_family(s), s);
    points.emplace_back(static_cast<double>(family_vertex_count(s)), mean_variance(spec).sigma2);
  }
  std::sort(points.begin(), points.end());
  return classify_variance_growth(points);
}

/// Statistics and distances for one graph; `fam` selects closed forms where
/// available. The verdict fields are left empty.
inline DiagnosticsReport analyze(const Graph& g, const std::optional<FamilySpec>& fam, std::string label) {
  DiagnosticsReport r;
  r.family = std::move(label);
  r.n = fam ? fam->n : g.vertex_count();
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.max_degree = max_degree(g);

  const auto coeffs = coefficients_for(g, fam);
  const auto stats = mean_variance(spectrum_for(g, fam));
  const auto p = normalized_probabilities(coeffs);
  r.mu = stats.mu;
  r.sigma2 = stats.sigma2;
  r.sigma2_lower_bound = variance_lower_bound(g);
  r.clt_distance = clt_distance(p, stats);
  r.llt_distance = llt_distance(p, stats);
  if (fam) {
    r.sigma2_family_bound = detail::family_variance_bound(*fam);
    if (const auto pp = detail::poisson_parameters(*fam)) r.poisson_distance = poisson_distance(p, pp->first, pp->second);
    if (has_limit_constants(fam->family)) {
      const auto lim = family_limit_constants<double>(fam->family);
      const double nv = static_cast<double>(g.vertex_count());
      r.mu_per_vertex = stats.mu / nv;
      r.sigma2_per_vertex = stats.sigma2 / nv;
      r.mu_limit_error = std::abs(*r.mu_per_vertex - lim.mu_per_vertex);
      r.sigma2_limit_error = std::abs(*r.sigma2_per_vertex - lim.sigma2_per_vertex);
    }
  }
  return r;
}

inline void set_verdict(DiagnosticsReport& r, Regime regime) {
  r.verdict = regime_label(regime);
  r.verdict_detail = regime_detail(regime);
}

/// Single family member; the regime verdict comes from a probe ladder.
inline DiagnosticsReport diagnose(const FamilySpec& s) {
  validate(s);
  auto r = analyze(make_family(s), s, std::string(family_name(s.family)));
  const auto probes = probe_ladder(s);
  set_verdict(r, classify_family(probes));
  return r;
}

/// Arbitrary graph: no growth evidence is available from one graph.
inline DiagnosticsReport diagnose(const Graph& g, std::string label = "graph") {
  auto r = analyze(g, std::nullopt, std::move(label));
  set_verdict(r, Regime::undetermined);
  return r;
}

/// One row per ladder size, in ladder order. Rows are computed
/// independently (optionally in parallel) and share one verdict derived
/// from the ladder's variance growth.
inline std::vector<DiagnosticsReport> sweep(const FamilySpec& base, std::span<const std::size_t> ladder,
                                            std::size_t threads = 1) {
  if (ladder.empty()) throw InputError("sweep: ladder is empty");
  std::vector<FamilySpec> specs;
  for (std::size_t n : ladder) {
    specs.push_back(detail::resized(base, n));
    validate(specs.back());
  }
  auto rows = parallel_map(specs.size(), threads, [&](std::size_t i) {
    return analyze(make_family(specs[i]), specs[i], std::string(family_name(specs[i].family)));
  });
  Regime regime;
  if (specs.size() >= 2) {
    std::vector<std::pair<double, double>> points;
    for (const auto& r : rows) points.emplace_back(static_cast<double>(r.vertices), r.sigma2);
    std::sort(points.begin(), points.end());
    regime = classify_variance_growth(points);
  } else {
    regime = classify_family(probe_ladder(specs.front()));
  }
  for (auto& r : rows) set_verdict(r, regime);
  return rows;
}

}  // namespace lapcoef
