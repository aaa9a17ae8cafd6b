#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lapcoef/bigint.hpp"
#include "lapcoef/charpoly.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/graph.hpp"
#include "lapcoef/spectrum.hpp"

namespace lapcoef {

/// Neumaier-compensated running sum.
template <class Real>
class CompensatedSum {
 public:
  void add(const Real& v) {
    using std::abs;
    const Real t = sum_ + v;
    if (abs(sum_) >= abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

template <class Real>
struct BasicLimitStats {
  Real mu{0};
  Real sigma2{0};
  std::size_t n = 0;
};

using LimitStats = BasicLimitStats<double>;

/// mu = sum 1/(1+lambda), sigma^2 = sum lambda/(1+lambda)^2 over a
/// nonnegative spectrum; these are the mean and variance of the coefficient
/// distribution of prod (x + lambda_i).
template <class Real>
BasicLimitStats<Real> mean_variance(const BasicSpectrum<Real>& s) {
  CompensatedSum<Real> mu;
  CompensatedSum<Real> var;
  for (const Real& l : s.values) {
    if (l < 0) throw InputError("mean_variance: negative eigenvalue");
    const Real inv = Real(1) / (Real(1) + l);
    mu.add(inv);
    var.add(l * inv * inv);
  }
  return {mu.value(), var.value(), s.size()};
}

/// p(n,k) = c_k / sum_j c_j, k = 0..n.
struct ProbabilityVector {
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
  double operator[](std::size_t k) const { return probs[k]; }
  double at_or_zero(std::ptrdiff_t k) const {
    return (k < 0 || k >= static_cast<std::ptrdiff_t>(probs.size())) ? 0.0 : probs[static_cast<std::size_t>(k)];
  }
};

/// Each p(k) is formed from the 64-bit leading parts and binary exponents of
/// c_k and the exact total, so no intermediate overflows at any n and the
/// relative error per entry is a few ulps. Zero coefficients give exactly 0.
inline ProbabilityVector normalized_probabilities(const CoefficientVector& c) {
  const BigInt total = c.sum();
  if (total == 0) throw InputError("normalized_probabilities: all coefficients are zero");
  ProbabilityVector p;
  p.probs.reserve(c.size());
  for (const auto& ck : c.coeffs) {
    if (ck < 0) throw InputError("normalized_probabilities: negative coefficient");
    p.probs.push_back(ratio(ck, total));
  }
  return p;
}

/// Mean and variance of p(n,.) computed from exact integer moments.
inline std::pair<double, double> coefficient_moments(const CoefficientVector& c) {
  BigInt s0 = 0;
  BigInt s1 = 0;
  BigInt s2 = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    s0 += c[k];
    s1 += c[k] * k;
    s2 += c[k] * k * k;
  }
  if (s0 == 0) throw InputError("coefficient_moments: all coefficients are zero");
  return {ratio(s1, s0), ratio(s0 * s2 - s1 * s1, s0 * s0)};
}

inline double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

inline double standard_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) * (std::numbers::inv_sqrtpi / std::numbers::sqrt2);
}

namespace detail {
inline double checked_sigma(const LimitStats& stats, const char* what) {
  if (!(stats.sigma2 > 0) || !std::isfinite(stats.sigma2)) {
    throw InputError(std::string(what) + ": degenerate sigma (sigma^2 must be > 0)");
  }
  return std::sqrt(stats.sigma2);
}
}  // namespace detail

/// Kolmogorov distance between the coefficient CDF F and the normal CDF with
/// mean mu and deviation sigma. Both one-sided limits of F are compared at
/// every jump k, which is where the supremum of |F - Phi| lives.
inline double clt_distance(const ProbabilityVector& p, const LimitStats& stats) {
  const double sigma = detail::checked_sigma(stats, "clt_distance");
  double cdf = 0.0;
  double best = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double phi = standard_normal_cdf((static_cast<double>(k) - stats.mu) / sigma);
    const double before = cdf;
    cdf += p[k];
    best = std::max({best, std::abs(before - phi), std::abs(std::min(cdf, 1.0) - phi)});
  }
  return std::min(best, 1.0);
}

/// sup_x |sigma p(floor(mu + x sigma)) - phi(x)|, with p = 0 outside 0..n.
/// Evaluated from both sides of every cell boundary x_k = (k - mu)/sigma,
/// k = 0..n+1, and at x = 0 inside its cell. The boundary k = 0 and k = n+1
/// terms are the tails beyond the support.
inline double llt_distance(const ProbabilityVector& p, const LimitStats& stats) {
  const double sigma = detail::checked_sigma(stats, "llt_distance");
  const auto last = static_cast<std::ptrdiff_t>(p.size());
  double best = 0.0;
  for (std::ptrdiff_t k = 0; k <= last; ++k) {
    const double dens = standard_normal_pdf((static_cast<double>(k) - stats.mu) / sigma);
    best = std::max({best, std::abs(sigma * p.at_or_zero(k) - dens), std::abs(sigma * p.at_or_zero(k - 1) - dens)});
  }
  const auto mode_cell = static_cast<std::ptrdiff_t>(std::floor(stats.mu));
  best = std::max(best, std::abs(sigma * p.at_or_zero(mode_cell) - standard_normal_pdf(0.0)));
  return best;
}

/// r(k) = e^{-mean} mean^{k-shift} / (k-shift)! for k >= shift, else 0.
inline ProbabilityVector poisson_reference(double mean, std::size_t shift, std::size_t length) {
  if (!(mean > 0)) throw InputError("poisson_reference: mean must be positive");
  ProbabilityVector r;
  r.probs.assign(length, 0.0);
  for (std::size_t k = shift; k < length; ++k) {
    const double j = static_cast<double>(k - shift);
    r.probs[k] = std::exp(-mean + j * std::log(mean) - std::lgamma(j + 1.0));
  }
  return r;
}

/// max |p(k) - r(k)| over k in [k_lo, k_hi] (clipped to the support of p).
inline double poisson_distance(const ProbabilityVector& p, double mean, std::size_t shift, std::size_t k_lo = 0,
                               std::size_t k_hi = std::numeric_limits<std::size_t>::max()) {
  const auto r = poisson_reference(mean, shift, p.size());
  double best = 0.0;
  for (std::size_t k = k_lo; k < p.size() && k <= k_hi; ++k) best = std::max(best, std::abs(p[k] - r[k]));
  return best;
}

// ---------------------------------------------------------------------------
// Variance lower bounds
// ---------------------------------------------------------------------------

/// sigma^2 >= 2|E| / (1 + 2 Delta)^2, since every lambda <= 2 Delta.
inline double variance_lower_bound(const Graph& g) {
  const double d = static_cast<double>(max_degree(g));
  return 2.0 * static_cast<double>(g.edge_count()) / ((1.0 + 2.0 * d) * (1.0 + 2.0 * d));
}

/// Cone over a d-regular graph on N vertices: (N-1)(1+2d)/(2+2d)^2.
inline double cone_variance_lower_bound(std::size_t vertices, std::size_t degree) {
  if (vertices == 0) return 0.0;
  const double d = static_cast<double>(degree);
  return static_cast<double>(vertices - 1) * (1.0 + 2.0 * d) / ((2.0 + 2.0 * d) * (2.0 + 2.0 * d));
}

/// Q_n: 2n(2^n - 1)/(1+2n)^2.
inline double hypercube_variance_lower_bound(std::size_t n) {
  const double d = static_cast<double>(n);
  return 2.0 * d * (std::ldexp(1.0, static_cast<int>(n)) - 1.0) / ((1.0 + 2.0 * d) * (1.0 + 2.0 * d));
}

// ---------------------------------------------------------------------------
// Family limits
// ---------------------------------------------------------------------------

template <class Real>
struct LimitConstants {
  Real mu_per_vertex;
  Real sigma2_per_vertex;
};

/// Reference limits of mu_n/n and sigma_n^2/n used by sweeps:
/// path (1/(2 sqrt 5), 1/(5 sqrt 5)), cycle (1/sqrt 5, 2/(5 sqrt 5)).
// NOTE: measured path sequences converge to the cycle pair instead (path and
// cycle spectra interlace), so path limit errors level off near 0.22 / 0.09.
template <class Real = double>
LimitConstants<Real> family_limit_constants(Family f) {
  using std::sqrt;
  const Real root5 = sqrt(Real(5));
  switch (f) {
    case Family::path: return {Real(1) / (2 * root5), Real(1) / (5 * root5)};
    case Family::cycle: return {Real(1) / root5, Real(2) / (5 * root5)};
    default:
      throw InputError("no limit constants for family '" + std::string(family_name(f)) + "'");
  }
}

inline bool has_limit_constants(Family f) { return f == Family::path || f == Family::cycle; }

// ---------------------------------------------------------------------------
// Regime classification
// ---------------------------------------------------------------------------

enum class Regime { normal, poisson, undetermined };

inline const char* regime_label(Regime r) {
  switch (r) {
    case Regime::normal: return "normal-regime";
    case Regime::poisson: return "poisson-regime";
    default: return "undetermined";
  }
}

inline const char* regime_detail(Regime r) {
  switch (r) {
    case Regime::normal: return "sigma_n^2 -> infinity evidence: increasing";
    case Regime::poisson: return "not CLT-normal by the real-rooted variance criterion: sigma_n^2 bounded";
    default: return "single size, no growth evidence";
  }
}

/// Minimum log-log growth rate of sigma^2 against vertex count accepted as
/// evidence of sigma_n -> infinity. Bounded variance gives ~0, linear ~1.
inline constexpr double kVarianceGrowthExponent = 0.5;

/// points = (vertex count, sigma^2), ordered by increasing size.
inline Regime classify_variance_growth(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) return Regime::undetermined;
  bool increasing = true;
  for (std::size_t i = 1; i < points.size(); ++i) increasing = increasing && points[i].second > points[i - 1].second;
  const auto& [n0, v0] = points.front();
  const auto& [n1, v1] = points.back();
  if (!(n1 > n0) || !(v0 > 0)) return Regime::undetermined;
  const double slope = std::log(v1 / v0) / std::log(n1 / n0);
  return (increasing && slope >= kVarianceGrowthExponent) ? Regime::normal : Regime::poisson;
}

}  // namespace lapcoef
