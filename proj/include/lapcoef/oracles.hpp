#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "lapcoef/bigint.hpp"
#include "lapcoef/charpoly.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/graph.hpp"

namespace lapcoef {

inline constexpr std::size_t kForestEdgeGuard = 24;
inline constexpr std::size_t kMatchingEdgeGuard = 64;

/// Spanning-forest expansion of the Laplacian coefficients:
///   c(G,k) = sum over spanning forests F with n-k edges of p(F),
/// p(F) = product of component orders (isolated vertices contribute 1).
/// Enumerates forests by include/exclude over edges with a rollback
/// union-find, so only acyclic edge sets are visited.
inline CoefficientVector forest_sum_oracle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m > kForestEdgeGuard) {
    throw GuardError("forest_sum_oracle: " + std::to_string(m) + " edges exceeds guard of " +
                     std::to_string(kForestEdgeGuard));
  }
  std::vector<BigInt> c(n + 1, 0);
  std::vector<std::size_t> parent(n);
  std::vector<std::size_t> size(n, 1);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  const auto& edges = g.edges();

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == m) {
      BigInt p = 1;
      for (std::size_t v = 0; v < n; ++v)
        if (parent[v] == v) p *= size[v];
      c[n - used] += p;
      return;
    }
    rec(i + 1, used);
    std::size_t a = find(edges[i].u);
    std::size_t b = find(edges[i].v);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    rec(i + 1, used + 1);
    size[a] -= size[b];
    parent[b] = b;
  };
  rec(0, 0);
  return {std::move(c)};
}

/// m(G,k) for k = 0..floor(n/2), by m(G,k) = m(G-e,k) + m(G-{u,v},k-1).
inline std::vector<BigInt> matching_counts(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > kMatchingEdgeGuard) {
    throw GuardError("matching_counts: " + std::to_string(m) + " edges exceeds guard of " +
                     std::to_string(kMatchingEdgeGuard));
  }
  const auto& edges = g.edges();
  std::vector<char> alive(g.vertex_count(), 1);
  std::vector<BigInt> counts(g.vertex_count() / 2 + 1, 0);

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t taken) {
    while (i < m && !(alive[edges[i].u] && alive[edges[i].v])) ++i;
    if (i == m) {
      counts[taken] += 1;
      return;
    }
    rec(i + 1, taken);
    alive[edges[i].u] = alive[edges[i].v] = 0;
    rec(i + 1, taken + 1);
    alive[edges[i].u] = alive[edges[i].v] = 1;
  };
  rec(0, 0);
  return counts;
}

/// Sum of distances over unordered vertex pairs.
inline std::uint64_t wiener_index(const Graph& g) {
  if (!is_connected(g)) throw InputError("wiener_index: graph is disconnected");
  std::uint64_t total = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto d = bfs_distances(g, s);
    for (Vertex t = s + 1; t < g.vertex_count(); ++t) total += d[t];
  }
  return total;
}

}  // namespace lapcoef
