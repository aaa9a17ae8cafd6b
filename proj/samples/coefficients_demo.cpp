// Exact Laplacian coefficients of a few small graphs, with the tree
// identities that tie them to spanning trees, distances and matchings.
#include <iostream>

#include "lapcoef/lapcoef.hpp"

using namespace lapcoef;

static void show(const char* name, const Graph& g) {
  const auto c = laplacian_coefficients(g);
  std::cout << name << ":";
  for (const auto& v : c.coeffs) std::cout << ' ' << v;
  std::cout << "   (spanning trees " << spanning_tree_count(g) << ")\n";
}

int main() {
  show("K_4", complete_graph(4));
  show("C_6", cycle_graph(6));
  show("W_5", wheel_graph(5));
  show("Q_3", hypercube_graph(3));

  const Graph t = random_tree(9, 7);
  const auto c = laplacian_coefficients(t);
  const auto m = matching_counts(subdivision(t));
  std::cout << "\nrandom tree on 9 vertices (seed 7)\n";
  std::cout << "  c(T,2) = " << c[2] << ", Wiener index = " << wiener_index(t) << '\n';
  std::cout << "  k   c(T,k)   m(S(T),n-k)\n";
  // S(T) has no matching with 9 edges, so m(S(T),9) = 0 pairs with c(T,0) = 0.
  for (std::size_t k = 0; k <= 9; ++k)
    std::cout << "  " << k << "   " << c[k] << "   " << (9 - k < m.size() ? m[9 - k] : BigInt(0)) << '\n';
}
