#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lapcoef/bigint.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/graph.hpp"
#include "lapcoef/matrix.hpp"

namespace lapcoef {

/// Unsigned Laplacian-type coefficients: coeffs[k] is the coefficient of x^k
/// in prod_i (x + lambda_i), k = 0..n.
struct CoefficientVector {
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::size_t size() const { return coeffs.size(); }
  const BigInt& operator[](std::size_t k) const { return coeffs[k]; }

  BigInt sum() const {
    BigInt s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
  }

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// Coefficients of det(xI - M), ascending powers, by Faddeev-LeVerrier:
///   M_0 = 0, c_n = 1,
///   M_k = M M_{k-1} + c_{n-k+1} I,   c_{n-k} = -tr(M M_k) / k.
/// For integer M every c_{n-k} is an integer, so each division must be exact.
template <class T>
std::vector<T> charpoly_monic(const Matrix<T>& a) {
  const std::size_t n = a.order();
  std::vector<T> c(n + 1);
  c[n] = 1;
  Matrix<T> m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == 1) {
      m = Matrix<T>::identity(n);
    } else {
      m = a * m;
      for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    }
    T t = trace_of_product(a, m);
    const T kk = static_cast<long>(k);
    if (t % kk != 0) throw InvariantError("Faddeev-LeVerrier: trace not divisible by " + std::to_string(k));
    c[n - k] = -(t / kk);
  }
  return c;
}

namespace detail {
inline CoefficientVector unsign(const std::vector<BigInt>& monic, const char* what) {
  const std::size_t n = monic.size() - 1;
  CoefficientVector out;
  out.coeffs.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    out.coeffs[k] = ((n - k) % 2 == 0) ? monic[k] : BigInt(-monic[k]);
    if (out.coeffs[k] < 0) throw InvariantError(std::string(what) + ": negative coefficient at k=" + std::to_string(k));
  }
  return out;
}
}  // namespace detail

/// c(G,k), from det(xI - L(G)) = sum (-1)^{n-k} c(G,k) x^k.
inline CoefficientVector laplacian_coefficients(const Graph& g) {
  return detail::unsign(charpoly_monic(laplacian_matrix(g)), "laplacian_coefficients");
}

/// q(G,k), same sign convention with Q(G) = D + A.
inline CoefficientVector signless_coefficients(const Graph& g) {
  return detail::unsign(charpoly_monic(signless_laplacian_matrix(g)), "signless_coefficients");
}

/// Matrix-tree theorem: determinant of L(G) with the last row and column
/// removed. Zero for disconnected graphs.
inline BigInt spanning_tree_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("spanning_tree_count needs n >= 1");
  const IntMatrix l = laplacian_matrix(g);
  IntMatrix minor(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) minor(i, j) = l(i, j);
  return determinant_bareiss(std::move(minor));
}

// ---------------------------------------------------------------------------
// Polynomial helpers on ascending coefficient arrays
// ---------------------------------------------------------------------------

/// prod_i (x + r_i).
inline CoefficientVector expand_roots(std::span<const BigInt> shifts) {
  std::vector<BigInt> p{1};
  p.reserve(shifts.size() + 1);
  for (const auto& r : shifts) {
    p.push_back(0);
    for (std::size_t j = p.size() - 1; j > 0; --j) p[j] = p[j - 1] + r * p[j];
    p[0] *= r;
  }
  return {std::move(p)};
}

/// P(x) -> P(x + s), Horner-style repeated synthetic division.
inline std::vector<BigInt> taylor_shift(std::vector<BigInt> p, const BigInt& s) {
  const std::size_t n = p.size();
  if (n < 2 || s == 0) return p;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 2; j + 1 > i; --j) p[j] += s * p[j + 1];
  return p;
}

/// Exact quotient P(x) / (x + s); throws if (x + s) does not divide P.
inline std::vector<BigInt> divide_by_linear(const std::vector<BigInt>& p, const BigInt& s) {
  if (p.size() < 2) throw InvariantError("divide_by_linear: constant polynomial");
  const std::size_t n = p.size() - 1;
  std::vector<BigInt> q(n);
  BigInt carry = 0;
  for (std::size_t j = n; j-- > 0;) {
    q[j] = p[j + 1] - carry;
    carry = s * q[j];
  }
  if (p[0] != carry) throw InvariantError("divide_by_linear: nonzero remainder");
  return q;
}

/// Coefficients of the join from the coefficients of its parts:
///   x (x + n1 + n2) * P1(x + n2)/(x + n2) * P2(x + n1)/(x + n1),
/// the coefficient form of the shift {0, n1+n2, lambda+n2, mu+n1} of the
/// spectra. Each P_i carries a factor x, so both quotients are exact.
inline CoefficientVector join_coefficients(const CoefficientVector& c1, const CoefficientVector& c2) {
  const std::size_t n1 = c1.degree();
  const std::size_t n2 = c2.degree();
  if (n1 == 0 || n2 == 0) throw InputError("join_coefficients: both graphs need a vertex");
  const auto r1 = divide_by_linear(taylor_shift(c1.coeffs, n2), n2);
  const auto r2 = divide_by_linear(taylor_shift(c2.coeffs, n1), n1);
  std::vector<BigInt> prod(r1.size() + r2.size() - 1, 0);
  for (std::size_t i = 0; i < r1.size(); ++i)
    for (std::size_t j = 0; j < r2.size(); ++j) prod[i + j] += r1[i] * r2[j];
  const BigInt shifts[] = {0, BigInt(n1 + n2)};
  const auto head = expand_roots(shifts);
  std::vector<BigInt> out(prod.size() + 2, 0);
  for (std::size_t i = 0; i < prod.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i + j] += prod[i] * head.coeffs[j];
  return {std::move(out)};
}

/// Coefficients of cone(G) from those of G.
inline CoefficientVector cone_coefficients(const CoefficientVector& c) {
  return join_coefficients(c, CoefficientVector{{0, 1}});
}

}  // namespace lapcoef
