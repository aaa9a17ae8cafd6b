#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lapcoef/bigint.hpp"
#include "lapcoef/charpoly.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/families.hpp"

namespace lapcoef {

inline bool has_closed_form_coefficients(Family f) {
  switch (f) {
    case Family::path:
    case Family::cycle:
    case Family::star:
    case Family::complete:
    case Family::complete_bipartite:
    case Family::hypercube:
    case Family::matching_union:
    case Family::wheel:
      return true;
    default:
      return false;
  }
}

namespace closed_form {

/// c(P_n,k) = C(n-1+k, 2k-1), generated by the ratio
/// c(k+1)/c(k) = (n+k)(n-k) / (2k(2k+1)).
inline CoefficientVector path(std::size_t n) {
  std::vector<BigInt> c(n + 1, 0);
  if (n == 0) return {{1}};
  c[1] = n;
  for (std::size_t k = 1; k < n; ++k) {
    BigInt next = c[k] * (n + k) * (n - k);
    divide_exact(next, BigInt(2 * k * (2 * k + 1)), "path closed form");
    c[k + 1] = std::move(next);
  }
  return {std::move(c)};
}

/// c(C_n,k) = 2n/(n+k) * C(n+k, n-k) for k >= 1, with the binomial advanced
/// by C(n+k+1, 2k+2) = C(n+k, 2k) (n+k+1)(n-k) / ((2k+1)(2k+2)).
inline CoefficientVector cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle closed form needs n >= 3");
  std::vector<BigInt> c(n + 1, 0);
  BigInt b = BigInt(n + 1) * n / 2;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt v = 2 * n * b;
    divide_exact(v, BigInt(n + k), "cycle closed form");
    c[k] = std::move(v);
    if (k < n) {
      b *= (n + k + 1) * (n - k);
      divide_exact(b, BigInt((2 * k + 1) * (2 * k + 2)), "cycle binomial ratio");
    }
  }
  return {std::move(c)};
}

/// c(K_{1,n-1},k) = C(n-2,k-2) + n C(n-2,k-1), i.e. x(x+n)(x+1)^{n-2}.
inline CoefficientVector star(std::size_t n) {
  if (n == 0) throw InputError("star closed form needs n >= 1");
  if (n == 1) return {{0, 1}};
  const auto nn = static_cast<std::int64_t>(n);
  std::vector<BigInt> c(n + 1, 0);
  for (std::int64_t k = 1; k <= nn; ++k) c[k] = binomial(nn - 2, k - 2) + nn * binomial(nn - 2, k - 1);
  return {std::move(c)};
}

/// c(K_n,k) = n^{n-k} C(n-1,k-1).
inline CoefficientVector complete(std::size_t n) {
  if (n == 0) throw InputError("complete closed form needs n >= 1");
  std::vector<BigInt> c(n + 1, 0);
  BigInt power = 1;  // n^{n-k}, k descending
  for (std::size_t k = n; k >= 1; --k) {
    c[k] = power * binomial(static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(k) - 1);
    power *= n;
  }
  return {std::move(c)};
}

/// nK_2 on 2n vertices: x^n (x+2)^n, c(k) = C(n, k-n) 2^{2n-k}.
inline CoefficientVector matching_union(std::size_t n) {
  std::vector<BigInt> c(2 * n + 1, 0);
  for (std::size_t k = n; k <= 2 * n; ++k)
    c[k] = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k - n)) * ipow(2, 2 * n - k);
  return {std::move(c)};
}

/// K_{m,n}: x (x+m+n) (x+n)^{m-1} (x+m)^{n-1}.
inline CoefficientVector complete_bipartite(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InputError("complete_bipartite closed form needs both parts >= 1");
  std::vector<BigInt> roots{0, BigInt(m + n)};
  roots.insert(roots.end(), m - 1, BigInt(n));
  roots.insert(roots.end(), n - 1, BigInt(m));
  return expand_roots(roots);
}

inline constexpr std::size_t kHypercubeCoefficientGuard = 12;

/// Q_d: Laplacian eigenvalue 2k with multiplicity C(d,k).
inline CoefficientVector hypercube(std::size_t d) {
  if (d > kHypercubeCoefficientGuard) throw GuardError("hypercube coefficients: dimension above guard");
  std::vector<BigInt> roots;
  for (std::size_t k = 0; k <= d; ++k) {
    const auto mult = binomial(static_cast<std::int64_t>(d), static_cast<std::int64_t>(k));
    roots.insert(roots.end(), static_cast<std::size_t>(mult), BigInt(2 * k));
  }
  return expand_roots(roots);
}

inline CoefficientVector wheel(std::size_t n) { return cone_coefficients(cycle(n)); }

}  // namespace closed_form

/// Exact coefficients from family formulas; never touches a matrix.
inline CoefficientVector closed_form_coefficients(const FamilySpec& s) {
  validate(s);
  switch (s.family) {
    case Family::path: return closed_form::path(s.n);
    case Family::cycle: return closed_form::cycle(s.n);
    case Family::star: return closed_form::star(s.n);
    case Family::complete: return closed_form::complete(s.n);
    case Family::complete_bipartite: return closed_form::complete_bipartite(s.n, s.m);
    case Family::hypercube: return closed_form::hypercube(s.n);
    case Family::matching_union: return closed_form::matching_union(s.n);
    case Family::wheel: return closed_form::wheel(s.n);
    default:
      throw InputError("no closed-form coefficients for family '" + std::string(family_name(s.family)) + "'");
  }
}

}  // namespace lapcoef
