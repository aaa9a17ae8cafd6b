#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lapcoef/bigint.hpp"
#include "lapcoef/graph.hpp"

namespace lapcoef {

/// Dense square matrix, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t order, const T& fill = T{}) : order_(order), data_(order * order, fill) {}

  static Matrix identity(std::size_t order) {
    Matrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t order() const noexcept { return order_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = i + 1; j < order_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.order();
  Matrix<T> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

/// tr(A B) without forming the product.
template <class T>
T trace_of_product(const Matrix<T>& a, const Matrix<T>& b) {
  T t{};
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) t += a(i, j) * b(j, i);
  return t;
}

using IntMatrix = Matrix<BigInt>;

namespace detail {
template <class T>
Matrix<T> degree_plus_signed_adjacency(const Graph& g, int sign) {
  Matrix<T> m(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) m(v, v) = static_cast<long>(g.degree(v));
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = sign;
    m(e.v, e.u) = sign;
  }
  return m;
}
}  // namespace detail

/// L(G) = D(G) - A(G).
template <class T = BigInt>
Matrix<T> laplacian_matrix(const Graph& g) {
  return detail::degree_plus_signed_adjacency<T>(g, -1);
}

/// Q(G) = D(G) + A(G).
template <class T = BigInt>
Matrix<T> signless_laplacian_matrix(const Graph& g) {
  return detail::degree_plus_signed_adjacency<T>(g, +1);
}

/// Fraction-free (Bareiss) determinant; every division is exact.
inline BigInt determinant_bareiss(IntMatrix m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        divide_exact(v, prev, "Bareiss elimination");
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace lapcoef
