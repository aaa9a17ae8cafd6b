#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lapcoef/charpoly.hpp"
#include "lapcoef/closed_form.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/graph.hpp"
#include "lapcoef/limit_stats.hpp"
#include "lapcoef/oracles.hpp"
#include "lapcoef/parallel.hpp"
#include "lapcoef/spectrum.hpp"

namespace lapcoef {

struct CorpusEntry {
  std::string label;
  Graph graph;
  std::optional<FamilySpec> family;
  bool random_tree = false;
};

/// The pinned verification corpus: named families at small sizes, seeded
/// random trees and regular graphs, subdivisions, joins and cones.
inline std::vector<CorpusEntry> verification_corpus() {
  std::vector<CorpusEntry> c;
  auto fam = [&](Family f, std::size_t n, std::size_t m = 0) {
    const FamilySpec s{f, n, m, std::nullopt};
    c.push_back({describe(s), make_family(s), s, false});
  };
  for (std::size_t n = 1; n <= 12; ++n) {
    fam(Family::path, n);
    fam(Family::star, n);
    fam(Family::complete, n);
    if (n >= 3) fam(Family::cycle, n);
    if (n >= 3 && n <= 11) fam(Family::wheel, n);
    if (n <= 6) fam(Family::matching_union, n);
  }
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = a; a + b <= 12; ++b) fam(Family::complete_bipartite, a, b);
  for (std::size_t d = 0; d <= 4; ++d) fam(Family::hypercube, d);
  for (std::size_t d = 0; d <= 3; ++d) fam(Family::complete_binary_tree, d);
  for (std::size_t n = 1; n <= 5; ++n) c.push_back({"empty(" + std::to_string(n) + ")", Graph::empty(n), {}, false});

  for (std::size_t n = 4; n <= 12; ++n)
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const FamilySpec s{Family::random_tree, n, 0, seed};
      c.push_back({describe(s), make_family(s), s, true});
    }
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{8, 3}, {10, 3}, {10, 4}})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const FamilySpec s{Family::random_regular, n, d, seed};
      c.push_back({describe(s), make_family(s), s, false});
    }
  for (std::size_t n : {6, 10, 14})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const FamilySpec s{Family::random_binary_tree, n, 0, seed};
      c.push_back({describe(s), make_family(s), s, false});
    }

  auto derived = [&](std::string label, Graph g) { c.push_back({std::move(label), std::move(g), {}, false}); };
  for (std::size_t n = 2; n <= 8; ++n) derived("S(path(" + std::to_string(n) + "))", subdivision(path_graph(n)));
  for (std::size_t n = 3; n <= 8; ++n) derived("S(cycle(" + std::to_string(n) + "))", subdivision(cycle_graph(n)));
  for (std::size_t n = 2; n <= 8; ++n) derived("S(star(" + std::to_string(n) + "))", subdivision(star_graph(n)));
  for (std::size_t n = 2; n <= 5; ++n)
    derived("S(complete(" + std::to_string(n) + "))", subdivision(complete_graph(n)));
  for (std::size_t n = 3; n <= 5; ++n) derived("S(wheel(" + std::to_string(n) + "))", subdivision(wheel_graph(n)));
  derived("S(complete_bipartite(2,3))", subdivision(complete_bipartite_graph(2, 3)));
  for (std::size_t d = 2; d <= 3; ++d) derived("S(hypercube(" + std::to_string(d) + "))", subdivision(hypercube_graph(d)));
  for (std::size_t n = 4; n <= 9; ++n) {
    const Graph t = random_tree(n, 1);
    derived("S(random_tree(" + std::to_string(n) + ";seed=1))", subdivision(t));
    derived("cone(random_tree(" + std::to_string(n) + ";seed=1))", cone(t));
  }
  derived("join(complete(2),cycle(4))", join(complete_graph(2), cycle_graph(4)));
  derived("join(path(3),path(4))", join(path_graph(3), path_graph(4)));
  derived("cone(matching_union(2))", cone(matching_union_graph(2)));
  derived("join(empty(2),empty(3))", join(Graph::empty(2), Graph::empty(3)));
  derived("union(cycle(5),path(3))", disjoint_union(cycle_graph(5), path_graph(3)));
  return c;
}

// ---------------------------------------------------------------------------
// Invariant runner
// ---------------------------------------------------------------------------

enum class Invariant : std::size_t {
  handshake,
  exact_identities,
  forest_oracle,
  zhou_gutman,
  wiener,
  sandwich,
  bipartite_signless,
  closed_form,
  cone_coefficients,
  spectral_bounds,
  trace,
  variance_bound,
  moments,
  reconstruction,
  cone_spectrum,
  closed_form_spectrum,
  count_
};

inline constexpr std::size_t kInvariantCount = static_cast<std::size_t>(Invariant::count_);

inline constexpr std::array<const char*, kInvariantCount> kInvariantNames{
    "handshake",
    "exact identities",
    "forest-oracle equality",
    "Zhou–Gutman tree identity",
    "Wiener index identity",
    "star/path sandwich",
    "bipartite signless equality",
    "closed-form coefficient equality",
    "cone coefficient shift",
    "spectral bounds",
    "trace identity",
    "variance lower bound",
    "moment consistency",
    "spectrum reconstruction",
    "cone spectrum transform",
    "numeric vs closed-form spectrum",
};

inline constexpr std::array<const char*, kInvariantCount> kInvariantScopes{
    "all graphs",
    "all graphs",
    "all graphs ≤ 7 vertices",
    "trees ≤ 9",
    "trees",
    "random trees ≤ 12",
    "bipartite graphs",
    "closed-form families",
    "graphs ≤ 12 vertices",
    "graphs with edges",
    "residual ≤ 1e-8",
    "all graphs",
    "tolerance 1e-8",
    "relative 1e-6 per coefficient",
    "graphs ≤ 40 vertices, 1e-8",
    "closed-form families, 1e-8",
};

struct CheckOutcome {
  bool applicable = false;
  bool ok = true;
  std::string failure;
};

using GraphOutcome = std::array<CheckOutcome, kInvariantCount>;

namespace detail {

inline double max_abs_diff(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return HUGE_VAL;
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a.values[i] - b.values[i]));
  return d;
}

}  // namespace detail

/// Runs every applicable invariant on one corpus graph.
inline GraphOutcome check_graph(const CorpusEntry& entry) {
  GraphOutcome out;
  const Graph& g = entry.graph;
  const std::size_t n = g.vertex_count();
  auto check = [&](Invariant inv, bool ok, const std::string& why) {
    auto& o = out[static_cast<std::size_t>(inv)];
    o.applicable = true;
    if (!ok && o.ok) {
      o.ok = false;
      o.failure = why;
    }
  };

  std::size_t deg_sum = 0;
  for (Vertex v = 0; v < n; ++v) deg_sum += g.degree(v);
  check(Invariant::handshake, deg_sum == 2 * g.edge_count(), "degree sum != 2|E|");

  const auto coeffs = laplacian_coefficients(g);
  const std::size_t r = component_count(g);
  check(Invariant::exact_identities, coeffs[n] == 1, "c(G,n) != 1");
  if (n >= 1) {
    check(Invariant::exact_identities, coeffs[n - 1] == 2 * g.edge_count(), "c(G,n-1) != 2|E|");
    check(Invariant::exact_identities, coeffs[0] == 0, "c(G,0) != 0");
    check(Invariant::exact_identities, coeffs[1] == n * spanning_tree_count(g), "c(G,1) != n tau(G)");
    for (std::size_t k = 0; k <= n; ++k)
      check(Invariant::exact_identities, (coeffs[k] == 0) == (k < r),
            "zero pattern differs from component count at k=" + std::to_string(k));
  }

  if (n <= 7) check(Invariant::forest_oracle, forest_sum_oracle(g) == coeffs, "forest sum differs");

  if (is_tree(g)) {
    if (n <= 9) {
      const auto m = matching_counts(subdivision(g));
      for (std::size_t k = 0; k <= n; ++k) {
        const BigInt mk = (n - k) < m.size() ? m[n - k] : BigInt(0);
        check(Invariant::zhou_gutman, coeffs[k] == mk, "c(T,k) != m(S(T),n-k) at k=" + std::to_string(k));
      }
    }
    if (n >= 2) check(Invariant::wiener, coeffs[2] == wiener_index(g), "c(T,2) != W(T)");
    if (entry.random_tree && n <= 12) {
      const auto lo = closed_form::star(n);
      const auto hi = closed_form::path(n);
      for (std::size_t k = 1; k <= n; ++k)
        check(Invariant::sandwich, lo[k] <= coeffs[k] && coeffs[k] <= hi[k],
              "sandwich fails at k=" + std::to_string(k));
    }
  }

  if (is_bipartite(g)) check(Invariant::bipartite_signless, signless_coefficients(g) == coeffs, "q != c");

  if (entry.family && has_closed_form_coefficients(entry.family->family))
    check(Invariant::closed_form, closed_form_coefficients(*entry.family) == coeffs, "closed form differs");

  if (n >= 1 && n <= 12)
    check(Invariant::cone_coefficients, cone_coefficients(coeffs) == laplacian_coefficients(cone(g)),
          "cone coefficients differ");

  const Spectrum spec = laplacian_spectrum(g);
  if (g.edge_count() > 0) {
    const double am = anderson_morley_bound(g);
    const double gb = gershgorin_bound(g);
    check(Invariant::spectral_bounds, spec.max() <= am + 1e-9 && am <= gb, "lambda_max <= AM <= 2 Delta fails");
  }
  check(Invariant::trace, trace_check(spec, g) <= 1e-8, "trace residual above 1e-8");

  const auto stats = mean_variance(spec);
  check(Invariant::variance_bound, stats.sigma2 >= variance_lower_bound(g) - 1e-12, "sigma^2 below 2|E|/(1+2D)^2");

  if (n >= 1) {
    const auto [mean, var] = coefficient_moments(coeffs);
    check(Invariant::moments, std::abs(mean - stats.mu) <= 1e-8 && std::abs(var - stats.sigma2) <= 1e-8,
          "coefficient moments differ from spectral mu/sigma^2");
  }

  // Exact zeros (k below the component count) have no relative scale; they
  // are measured against the first nonzero coefficient c(G,r).
  const auto approx = expand_spectrum(spec);
  const double first_nonzero = coeffs[r].convert_to<double>();
  for (std::size_t k = 0; k <= n; ++k) {
    const double exact = coeffs[k].convert_to<double>();
    const double scale = exact != 0 ? std::abs(exact) : first_nonzero;
    check(Invariant::reconstruction, std::abs(approx[k] - exact) <= 1e-6 * scale,
          "prod(x+lambda) differs at k=" + std::to_string(k));
  }

  if (n >= 1 && n <= 40) {
    const double d = detail::max_abs_diff(cone_spectrum(spec, n), laplacian_spectrum(cone(g)));
    check(Invariant::cone_spectrum, d <= 1e-8, "cone spectrum differs by " + std::to_string(d));
  }

  if (entry.family && has_closed_form_spectrum(entry.family->family)) {
    const double d = detail::max_abs_diff(closed_form_spectrum<double>(*entry.family), spec);
    check(Invariant::closed_form_spectrum, d <= 1e-8, "closed-form spectrum differs by " + std::to_string(d));
  }
  return out;
}

struct InvariantSummary {
  std::string name;
  std::string scope;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool passed() const { return failed == 0 && checked > 0; }
};

struct VerifyResult {
  std::vector<InvariantSummary> invariants;
  std::size_t graphs = 0;

  bool passed() const {
    return std::all_of(invariants.begin(), invariants.end(), [](const auto& s) { return s.passed(); });
  }
};

/// Checks every invariant on every corpus graph and reduces in corpus order.
inline VerifyResult run_verification(const std::vector<CorpusEntry>& corpus, std::size_t threads = 1) {
  const auto outcomes = parallel_map(corpus.size(), threads, [&](std::size_t i) { return check_graph(corpus[i]); });
  VerifyResult res;
  res.graphs = corpus.size();
  for (std::size_t inv = 0; inv < kInvariantCount; ++inv) {
    InvariantSummary s;
    s.name = kInvariantNames[inv];
    s.scope = kInvariantScopes[inv];
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& o = outcomes[i][inv];
      if (!o.applicable) continue;
      ++s.checked;
      if (!o.ok) {
        if (s.failed++ == 0) s.first_failure = corpus[i].label + ": " + o.failure;
      }
    }
    res.invariants.push_back(std::move(s));
  }
  return res;
}

inline std::string render_text(const VerifyResult& r) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& s : r.invariants) {
    if (s.passed()) {
      ++passed;
      os << s.name << ": PASS (" << s.scope << "; " << s.checked << " graphs)\n";
    } else {
      os << s.name << ": FAIL (" << s.failed << " of " << s.checked << " graphs; first: " << s.first_failure
         << ")\n";
    }
  }
  os << "verify: " << passed << "/" << r.invariants.size() << " invariants passed on " << r.graphs
     << " corpus graphs\n";
  return os.str();
}

}  // namespace lapcoef
