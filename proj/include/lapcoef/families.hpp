#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lapcoef/errors.hpp"
#include "lapcoef/graph.hpp"

namespace lapcoef {

// ---------------------------------------------------------------------------
// Combinators
// ---------------------------------------------------------------------------

/// Vertices of g2 are relabeled n1..n1+n2-1.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.vertex_count();
  auto pairs = g1.edge_pairs();
  for (const auto& e : g2.edges()) pairs.emplace_back(e.u + n1, e.v + n1);
  return Graph(n1 + g2.vertex_count(), pairs);
}

/// Disjoint union plus every edge between the two vertex sets.
inline Graph join(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  auto pairs = disjoint_union(g1, g2).edge_pairs();
  for (Vertex a = 0; a < n1; ++a)
    for (Vertex b = 0; b < n2; ++b) pairs.emplace_back(a, n1 + b);
  return Graph(n1 + n2, pairs);
}

/// join(g, K_1); the apex is the last vertex.
inline Graph cone(const Graph& g) { return join(g, Graph::empty(1)); }

/// Inserts vertex n+i on edge i (edges in sorted order).
inline Graph subdivision(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(2 * g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    pairs.emplace_back(e.u, n + i);
    pairs.emplace_back(e.v, n + i);
  }
  return Graph(n + g.edge_count(), pairs);
}

/// Vertex (a, b) is labeled a * |V(g2)| + b.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n1; ++a)
    for (const auto& e : g2.edges()) pairs.emplace_back(a * n2 + e.u, a * n2 + e.v);
  for (const auto& e : g1.edges())
    for (Vertex b = 0; b < n2; ++b) pairs.emplace_back(e.u * n2 + b, e.v * n2 + b);
  return Graph(n1 * n2, pairs);
}

// ---------------------------------------------------------------------------
// Deterministic families
// ---------------------------------------------------------------------------

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph(n, pairs);
}

/// K_{1,n-1} with center 0.
inline Graph star_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 1; i < n; ++i) pairs.emplace_back(0, i);
  return Graph(n, pairs);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return Graph(n, pairs);
}

/// Parts {0..m-1} and {m..m+n-1}.
inline Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
  return join(Graph::empty(m), Graph::empty(n));
}

/// Vertex = bit pattern; neighbors differ in one bit.
inline Graph hypercube_graph(std::size_t d) {
  if (d > 24) throw GuardError("hypercube dimension above 24");
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t b = 0; b < d; ++b) {
      const Vertex w = v ^ (std::size_t{1} << b);
      if (v < w) pairs.emplace_back(v, w);
    }
  return Graph(n, pairs);
}

/// nK_2: edges (2i, 2i+1).
inline Graph matching_union_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * n, pairs);
}

/// W_n = cone over C_n, n+1 vertices, hub is vertex n.
inline Graph wheel_graph(std::size_t n) { return cone(cycle_graph(n)); }

/// Heap labeling: children of i are 2i+1 and 2i+2.
inline Graph complete_binary_tree(std::size_t depth) {
  if (depth > 24) throw GuardError("binary tree depth above 24");
  const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 1; i < n; ++i) pairs.emplace_back((i - 1) / 2, i);
  return Graph(n, pairs);
}

// ---------------------------------------------------------------------------
// Seeded random families
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// mt19937_64 output is fixed by the standard; the distribution adaptors are
/// not, so bounded draws are done by hand to keep outputs portable.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

inline std::mt19937_64 stream(std::uint64_t seed, std::uint64_t attempt) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(attempt)));
}

}  // namespace detail

inline constexpr std::size_t kRandomRegularAttempts = 10'000;

/// Configuration model with full restart on loops or multi-edges.
inline Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if ((n * d) % 2 != 0) throw InputError("random_regular: n*d must be even");
  if (n > 0 && d >= n) throw InputError("random_regular: need d < n");
  if (d == 0) return Graph::empty(n);
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (std::size_t attempt = 0; attempt < kRandomRegularAttempts; ++attempt) {
    auto rng = detail::stream(seed, attempt);
    stubs.clear();
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
    detail::shuffle(stubs, rng);
    std::set<std::pair<Vertex, Vertex>> seen;
    bool ok = true;
    for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
      Vertex a = stubs[i];
      Vertex b = stubs[i + 1];
      if (a > b) std::swap(a, b);
      ok = a != b && seen.emplace(a, b).second;
    }
    if (ok) return Graph(n, std::vector<std::pair<Vertex, Vertex>>(seen.begin(), seen.end()));
  }
  throw GuardError("random_regular: no simple pairing after " + std::to_string(kRandomRegularAttempts) +
                   " attempts");
}

/// Uniform labeled tree decoded from a random Pruefer sequence.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("random_tree needs n >= 1");
  if (n <= 2) return path_graph(n);
  auto rng = detail::stream(seed, 0);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = detail::uniform_below(rng, n);

  std::vector<std::size_t> deg(n, 1);
  for (Vertex c : code) ++deg[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(n - 1);
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    pairs.emplace_back(leaf, c);
    if (--deg[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  pairs.emplace_back(a, leaves.top());
  return Graph(n, pairs);
}

/// Random tree with maximum degree 3: vertex i attaches to a uniformly chosen
/// earlier vertex of degree < 3 (the root, vertex 0, is capped at 2).
inline Graph random_binary_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("random_binary_tree needs n >= 1");
  auto rng = detail::stream(seed, 0);
  std::vector<std::size_t> deg(n, 0);
  std::vector<Vertex> open{0};
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v) {
    const std::size_t slot = detail::uniform_below(rng, open.size());
    const Vertex parent = open[slot];
    pairs.emplace_back(parent, v);
    ++deg[parent];
    deg[v] = 1;
    if (deg[parent] == (parent == 0 ? 2u : 3u)) {
      open[slot] = open.back();
      open.pop_back();
    }
    open.push_back(v);
  }
  return Graph(n, pairs);
}

// ---------------------------------------------------------------------------
// Family specs
// ---------------------------------------------------------------------------

enum class Family {
  path,
  cycle,
  star,
  complete,
  complete_bipartite,
  hypercube,
  matching_union,
  wheel,
  complete_binary_tree,
  random_regular,
  random_tree,
  random_binary_tree,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 12> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::hypercube, "hypercube"},
    {Family::matching_union, "matching_union"},
    {Family::wheel, "wheel"},
    {Family::complete_binary_tree, "complete_binary_tree"},
    {Family::random_regular, "random_regular"},
    {Family::random_tree, "random_tree"},
    {Family::random_binary_tree, "random_binary_tree"},
}};

inline std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  for (const auto& [fam, name_] : kFamilyNames)
    if (name_ == name) return fam;
  throw InputError("unknown family '" + std::string(name) + "'");
}

inline bool is_random_family(Family f) {
  return f == Family::random_regular || f == Family::random_tree || f == Family::random_binary_tree;
}

/// `n` is the primary size parameter (vertex count, dimension for hypercube,
/// depth for complete_binary_tree, copies for matching_union, rim size for
/// wheel). `m` is the second part of complete_bipartite or the degree of
/// random_regular.
struct FamilySpec {
  Family family = Family::path;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline void validate(const FamilySpec& s) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw InputError(std::string(family_name(s.family)) + ": " + what);
  };
  need(s.seed.has_value() == is_random_family(s.family), "seed must be given exactly for random families");
  switch (s.family) {
    case Family::cycle:
    case Family::wheel:
      need(s.n >= 3, "needs n >= 3");
      break;
    case Family::complete_bipartite:
      need(s.n >= 1 && s.m >= 1, "needs both parts >= 1");
      break;
    case Family::hypercube:
    case Family::complete_binary_tree:
      break;
    case Family::random_regular:
      need(s.n >= 1, "needs n >= 1");
      need(s.m < s.n, "needs degree < n");
      need((s.n * s.m) % 2 == 0, "odd degree sum (n*d must be even)");
      break;
    default:
      need(s.n >= 1, "needs n >= 1");
  }
}

inline std::size_t family_vertex_count(const FamilySpec& s) {
  switch (s.family) {
    case Family::complete_bipartite: return s.n + s.m;
    case Family::hypercube: return std::size_t{1} << s.n;
    case Family::matching_union: return 2 * s.n;
    case Family::wheel: return s.n + 1;
    case Family::complete_binary_tree: return (std::size_t{1} << (s.n + 1)) - 1;
    default: return s.n;
  }
}

inline Graph make_family(const FamilySpec& s) {
  validate(s);
  switch (s.family) {
    case Family::path: return path_graph(s.n);
    case Family::cycle: return cycle_graph(s.n);
    case Family::star: return star_graph(s.n);
    case Family::complete: return complete_graph(s.n);
    case Family::complete_bipartite: return complete_bipartite_graph(s.n, s.m);
    case Family::hypercube: return hypercube_graph(s.n);
    case Family::matching_union: return matching_union_graph(s.n);
    case Family::wheel: return wheel_graph(s.n);
    case Family::complete_binary_tree: return complete_binary_tree(s.n);
    case Family::random_regular: return random_regular(s.n, s.m, *s.seed);
    case Family::random_tree: return random_tree(s.n, *s.seed);
    case Family::random_binary_tree: return random_binary_tree(s.n, *s.seed);
  }
  throw InputError("unhandled family");
}

inline std::string describe(const FamilySpec& s) {
  std::string out(family_name(s.family));
  out += "(" + std::to_string(s.n);
  if (s.family == Family::complete_bipartite || s.family == Family::random_regular) out += "," + std::to_string(s.m);
  if (s.seed) out += ";seed=" + std::to_string(*s.seed);
  return out + ")";
}

}  // namespace lapcoef
