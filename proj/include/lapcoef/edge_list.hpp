#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lapcoef/errors.hpp"
#include "lapcoef/graph.hpp"

namespace lapcoef {

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v      (m lines, 0-based)
//
// Blank lines and lines whose first non-blank character is '#' are skipped.

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_record = [&](std::istringstream& rec) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      rec.clear();
      rec.str(line);
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) {
    throw InputError("edge list line " + std::to_string(line_no) + ": " + msg);
  };
  auto expect_end = [&](std::istringstream& rec) {
    std::string extra;
    if (rec >> extra) fail("unexpected token '" + extra + "'");
  };

  std::istringstream rec;
  if (!next_record(rec)) throw InputError("edge list: missing header line 'n m'");
  long long n = -1;
  long long m = -1;
  if (!(rec >> n >> m) || n < 0 || m < 0) fail("header must be two nonnegative integers 'n m'");
  expect_end(rec);

  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_record(rec)) throw InputError("edge list: expected " + std::to_string(m) + " edges, found " +
                                            std::to_string(i));
    long long u = -1;
    long long v = -1;
    if (!(rec >> u >> v)) fail("expected 'u v'");
    expect_end(rec);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
    }
    if (u == v) fail("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_record(rec)) fail("trailing data after " + std::to_string(m) + " edges");
  return Graph(static_cast<std::size_t>(n), pairs);
}

inline Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace lapcoef
