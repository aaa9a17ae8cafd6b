#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "lapcoef/bigint.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/graph.hpp"
#include "lapcoef/matrix.hpp"

namespace lapcoef {

/// Eigenvalues sorted descending. `exact` marks closed forms whose values
/// are integers (and therefore exactly representable).
template <class Real>
struct BasicSpectrum {
  std::vector<Real> values;
  bool exact = false;

  std::size_t size() const { return values.size(); }
  const Real& max() const { return values.front(); }
  const Real& min() const { return values.back(); }
};

using Spectrum = BasicSpectrum<double>;

template <class Real>
void sort_descending(std::vector<Real>& v) {
  std::sort(v.begin(), v.end(), std::greater<>{});
}

inline constexpr double kDefaultJacobiTolerance = 1e-12;
inline constexpr int kJacobiSweepCap = 100;

namespace detail {
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
template <class T>
double to_double(const T& x) {
  return static_cast<double>(x);
}
}  // namespace detail

/// Cyclic Jacobi rotations on a private copy of a symmetric matrix.
/// Stops when the off-diagonal Frobenius norm drops below tol * scale,
/// scale = max(1, ||M||_F). Values in (-10 tol scale, 0) are snapped to 0.
template <class T>
Spectrum numeric_spectrum(const Matrix<T>& input, double tol = kDefaultJacobiTolerance) {
  if (!(tol > 0)) throw InputError("numeric_spectrum: tolerance must be positive");
  if (!input.is_symmetric()) throw InputError("numeric_spectrum: matrix is not symmetric");
  const std::size_t n = input.order();
  Matrix<double> a(n);
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = detail::to_double(input(i, j));
      frob += a(i, j) * a(i, j);
    }
  const double scale = std::max(1.0, std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; off_norm() > tol * scale; ++sweep) {
    if (sweep == kJacobiSweepCap) {
      throw ConvergenceError("numeric_spectrum: no convergence within " + std::to_string(kJacobiSweepCap) +
                             " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
      }
  }

  Spectrum out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = a(i, i);
    if (v < 0.0 && v > -10.0 * tol * scale) v = 0.0;
    out.values[i] = v;
  }
  sort_descending(out.values);
  return out;
}

inline Spectrum laplacian_spectrum(const Graph& g, double tol = kDefaultJacobiTolerance) {
  return numeric_spectrum(laplacian_matrix<double>(g), tol);
}

// ---------------------------------------------------------------------------
// Spectral transforms
// ---------------------------------------------------------------------------

/// Spectrum of the join: {0, n1+n2} together with {lambda + n2} over s1 and
/// {mu + n1} over s2, after dropping one zero (the smallest value) from each.
template <class Real>
BasicSpectrum<Real> join_spectrum(const BasicSpectrum<Real>& s1, std::size_t n1, const BasicSpectrum<Real>& s2,
                                  std::size_t n2, double zero_tol = 1e-8) {
  using std::abs;
  auto check = [&](const BasicSpectrum<Real>& s, std::size_t n, const char* which) {
    if (s.size() != n) throw InputError(std::string("join_spectrum: ") + which + " length differs from vertex count");
    if (n == 0 || abs(s.min()) > zero_tol * std::max(1.0, static_cast<double>(abs(s.max())))) {
      throw InputError(std::string("join_spectrum: ") + which + " spectrum has no zero eigenvalue");
    }
  };
  check(s1, n1, "first");
  check(s2, n2, "second");
  BasicSpectrum<Real> out;
  out.exact = s1.exact && s2.exact;
  out.values.reserve(n1 + n2);
  out.values.push_back(Real(0));
  out.values.push_back(Real(n1 + n2));
  for (std::size_t i = 0; i + 1 < n1; ++i) out.values.push_back(s1.values[i] + Real(n2));
  for (std::size_t i = 0; i + 1 < n2; ++i) out.values.push_back(s2.values[i] + Real(n1));
  sort_descending(out.values);
  return out;
}

/// Spectrum of cone(G): {0, n+1, 1 + lambda_i}.
template <class Real>
BasicSpectrum<Real> cone_spectrum(const BasicSpectrum<Real>& s, std::size_t n) {
  BasicSpectrum<Real> k1;
  k1.values = {Real(0)};
  k1.exact = true;
  return join_spectrum(s, n, k1, 1);
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

inline bool has_closed_form_spectrum(Family f) {
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

namespace detail {
template <class Real>
BasicSpectrum<Real> sine_squared_spectrum(std::size_t n, std::size_t denominator) {
  using std::sin;
  const Real pi = boost::math::constants::pi<Real>();
  BasicSpectrum<Real> s;
  s.values.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Real x = sin(Real(j) * pi / Real(denominator));
    s.values.push_back(4 * x * x);
  }
  sort_descending(s.values);
  return s;
}

template <class Real>
BasicSpectrum<Real> integer_spectrum(std::vector<std::pair<std::size_t, std::size_t>> value_mult) {
  BasicSpectrum<Real> s;
  s.exact = true;
  for (const auto& [value, mult] : value_mult) s.values.insert(s.values.end(), mult, Real(value));
  sort_descending(s.values);
  return s;
}
}  // namespace detail

/// Laplacian spectrum from family formulas. Path and cycle use
/// 4 sin^2(j pi / 2n) and 4 sin^2(j pi / n); the rest are integral.
template <class Real = double>
BasicSpectrum<Real> closed_form_spectrum(const FamilySpec& s) {
  validate(s);
  const std::size_t n = s.n;
  switch (s.family) {
    case Family::path: return detail::sine_squared_spectrum<Real>(n, 2 * n);
    case Family::cycle: return detail::sine_squared_spectrum<Real>(n, n);
    case Family::star:
      if (n == 1) return detail::integer_spectrum<Real>({{0, 1}});
      return detail::integer_spectrum<Real>({{n, 1}, {1, n - 2}, {0, 1}});
    case Family::complete: return detail::integer_spectrum<Real>({{n, n - 1}, {0, 1}});
    case Family::complete_bipartite:
      return detail::integer_spectrum<Real>({{0, 1}, {n + s.m, 1}, {s.m, n - 1}, {n, s.m - 1}});
    case Family::hypercube: {
      std::vector<std::pair<std::size_t, std::size_t>> vm;
      for (std::size_t k = 0; k <= n; ++k) {
        vm.emplace_back(2 * k, static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n),
                                                                 static_cast<std::int64_t>(k))));
      }
      return detail::integer_spectrum<Real>(std::move(vm));
    }
    case Family::matching_union: return detail::integer_spectrum<Real>({{2, n}, {0, n}});
    case Family::wheel: return cone_spectrum(detail::sine_squared_spectrum<Real>(n, n), n);
    default:
      throw InputError("no closed-form spectrum for family '" + std::string(family_name(s.family)) + "'");
  }
}

// ---------------------------------------------------------------------------
// Bounds and health checks
// ---------------------------------------------------------------------------

/// Every Laplacian eigenvalue is at most 2 * max degree.
inline double gershgorin_bound(const Graph& g) { return 2.0 * static_cast<double>(max_degree(g)); }

/// lambda_1 <= max over edges uv of deg(u) + deg(v).
inline double anderson_morley_bound(const Graph& g) {
  if (g.edge_count() == 0) throw InputError("anderson_morley_bound: graph has no edges");
  std::size_t best = 0;
  for (const auto& e : g.edges()) best = std::max(best, g.degree(e.u) + g.degree(e.v));
  return static_cast<double>(best);
}

/// |sum lambda_i - 2|E||.
inline double trace_check(const Spectrum& s, const Graph& g) {
  if (s.size() != g.vertex_count()) throw InputError("trace_check: spectrum length differs from vertex count");
  double sum = 0.0;
  double comp = 0.0;
  for (double v : s.values) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return std::abs(sum + comp - 2.0 * static_cast<double>(g.edge_count()));
}

/// prod_i (x + lambda_i) in floating point, ascending powers.
inline std::vector<double> expand_spectrum(const Spectrum& s) {
  std::vector<double> p{1.0};
  for (double r : s.values) {
    p.push_back(0.0);
    for (std::size_t j = p.size() - 1; j > 0; --j) p[j] = p[j - 1] + r * p[j];
    p[0] *= r;
  }
  return p;
}

}  // namespace lapcoef
