#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lapcoef/errors.hpp"

namespace lapcoef {

using Vertex = std::size_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from arbitrary pairs; rejects loops and out-of-range endpoints,
  /// collapses duplicates and reversed duplicates.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) : n_(n), adj_(n) {
    edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") out of range for " + std::to_string(n) + " vertices");
      }
      if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
      edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size())) {}

  static Graph empty(std::size_t n) { return Graph(n, std::span<const std::pair<Vertex, Vertex>>{}); }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) return false;
    const auto& row = adj_[a];
    return std::binary_search(row.begin(), row.end(), b);
  }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph graph_from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  return Graph(n, pairs);
}

inline std::size_t edge_count(const Graph& g) { return g.edge_count(); }

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  return d;
}

/// Component label per vertex, labels assigned 0.. in order of first vertex.
inline std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.vertex_count(), unset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == unset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline std::size_t component_count(const Graph& g) {
  const auto label = component_labels(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

/// Unweighted distances from one source; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.vertex_count(), static_cast<std::size_t>(-1));
  std::queue<Vertex> q;
  dist.at(source) = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == static_cast<std::size_t>(-1)) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

}  // namespace lapcoef
