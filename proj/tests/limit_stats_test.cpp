#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lapcoef/charpoly.hpp"
#include "lapcoef/closed_form.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/limit_stats.hpp"
#include "lapcoef/spectrum.hpp"

using namespace lapcoef;

namespace {
using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<250>>;

FamilySpec spec(Family f, std::size_t n, std::size_t m = 0) { return {f, n, m, std::nullopt}; }

Spectrum values(std::vector<double> v) {
  Spectrum s;
  s.values = std::move(v);
  return s;
}

CoefficientVector cv(std::initializer_list<long long> xs) {
  CoefficientVector c;
  for (auto x : xs) c.coeffs.emplace_back(x);
  return c;
}

std::pair<double, double> distances(const FamilySpec& s) {
  const auto p = normalized_probabilities(closed_form_coefficients(s));
  const auto stats = mean_variance(closed_form_spectrum(s));
  return {clt_distance(p, stats), llt_distance(p, stats)};
}
}  // namespace

TEST(MeanVariance, StarFormula) {
  for (std::size_t n = 3; n <= 200; ++n) {
    const auto s = mean_variance(closed_form_spectrum(spec(Family::star, n)));
    const double nn = static_cast<double>(n);
    const double mu = (nn * nn + nn + 2) / (2 * (nn + 1));
    const double var = (nn - 1) * (nn * nn + nn + 2) / (4 * (nn + 1) * (nn + 1));
    EXPECT_NEAR(s.mu, mu, 1e-12 * mu);
    EXPECT_NEAR(s.sigma2, var, 1e-12 * var);
  }
}

TEST(MeanVariance, SmallCases) {
  const auto k2 = mean_variance(values({2, 0}));
  EXPECT_DOUBLE_EQ(k2.mu, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(k2.sigma2, 2.0 / 9.0);
  EXPECT_EQ(k2.n, 2u);
  for (std::size_t n = 2; n <= 50; ++n) {
    const auto s = mean_variance(closed_form_spectrum(spec(Family::complete, n)));
    const double nn = static_cast<double>(n);
    EXPECT_NEAR(s.mu, 1 + (nn - 1) / (nn + 1), 1e-13);
    EXPECT_NEAR(s.sigma2, nn * (nn - 1) / ((nn + 1) * (nn + 1)), 1e-13);
  }
  EXPECT_THROW(mean_variance(values({1, -0.5})), InputError);
}

TEST(MeanVariance, OrderIndependent) {
  std::vector<double> v;
  for (int j = 0; j < 500; ++j) v.push_back(std::ldexp(1.0 + j % 7, (j % 40) - 20));
  const auto a = mean_variance(values(v));
  std::reverse(v.begin(), v.end());
  const auto b = mean_variance(values(v));
  EXPECT_NEAR(a.mu, b.mu, 1e-14 * a.mu);
  EXPECT_NEAR(a.sigma2, b.sigma2, 1e-14 * a.sigma2);
}

TEST(Probabilities, Examples) {
  const auto p = normalized_probabilities(cv({0, 1, 1}));
  EXPECT_EQ(p.probs, (std::vector<double>{0, 0.5, 0.5}));
  const auto q = normalized_probabilities(cv({0, 3, 4, 1}));
  EXPECT_EQ(q.probs, (std::vector<double>{0, 0.375, 0.5, 0.125}));
  EXPECT_THROW(normalized_probabilities(cv({0, 0})), InputError);
  EXPECT_THROW(normalized_probabilities(cv({1, -1, 1})), InputError);
  EXPECT_EQ(q.at_or_zero(-1), 0.0);
  EXPECT_EQ(q.at_or_zero(4), 0.0);
}

TEST(Probabilities, CompleteGraphFormula) {
  for (std::size_t n : {5u, 50u, 300u}) {
    const auto p = normalized_probabilities(closed_form::complete(n));
    double total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double nn = static_cast<double>(n);
      const double kk = static_cast<double>(k);
      // n^{n-k} C(n-1,k-1) / (n+1)^{n-1}, in logs.
      const double logp = (nn - kk) * std::log(nn) + std::lgamma(nn) - std::lgamma(kk) - std::lgamma(nn - kk + 1) -
                          (nn - 1) * std::log(nn + 1);
      EXPECT_NEAR(p[k], std::exp(logp), 1e-11 * std::max(std::exp(logp), 1e-300));
      total += p[k];
    }
    EXPECT_EQ(p[0], 0.0);
    EXPECT_NEAR(total, 1.0, 1e-14);
  }
}

TEST(Distances, PointMass) {
  const auto p = normalized_probabilities(cv({0, 0, 5, 0}));
  LimitStats st{2.0, 1.0, 3};
  EXPECT_GE(clt_distance(p, st), 0.5);
  EXPECT_GE(llt_distance(p, st), 1.0 - standard_normal_pdf(0.0));
  EXPECT_THROW(clt_distance(p, LimitStats{2.0, 0.0, 3}), InputError);
  EXPECT_THROW(llt_distance(p, LimitStats{2.0, -1.0, 3}), InputError);
}

TEST(Distances, CompleteGraphK2ByHand) {
  // p = [0, 2/3, 1/3], mu = 4/3, sigma = sqrt(2)/3. The CDF steps at k = 1
  // and k = 2 sit at z = -1/sqrt2 and z = +sqrt2.
  const auto p = normalized_probabilities(closed_form::complete(2));
  const auto st = mean_variance(closed_form_spectrum(spec(Family::complete, 2)));
  const double phi_a = 0.5 * std::erfc(1.0 / 2.0);  // Phi(-1/sqrt2)
  const double phi_b = 0.5 * std::erfc(-1.0);       // Phi(sqrt2)
  const double clt = std::max({phi_a, std::abs(2.0 / 3.0 - phi_a), std::abs(2.0 / 3.0 - phi_b), 1.0 - phi_b});
  EXPECT_NEAR(clt_distance(p, st), clt, 1e-14);
  EXPECT_NEAR(clt_distance(p, st), 0.42691660557318993, 1e-14);
  // LLT peak is the gap at the left edge of cell 1: phi(-1/sqrt2) against 0.
  EXPECT_NEAR(llt_distance(p, st), std::exp(-0.25) / std::sqrt(2 * std::numbers::pi), 1e-14);
}

TEST(Distances, ScaleInvariance) {
  const auto c = closed_form::cycle(30);
  CoefficientVector scaled = c;
  for (auto& v : scaled.coeffs) v *= 7;
  const auto st = mean_variance(closed_form_spectrum(spec(Family::cycle, 30)));
  EXPECT_DOUBLE_EQ(clt_distance(normalized_probabilities(c), st), clt_distance(normalized_probabilities(scaled), st));
}

TEST(Distances, CltInUnitInterval) {
  for (std::size_t n : {3u, 10u, 40u}) {
    for (Family f : {Family::path, Family::star, Family::complete}) {
      const auto [clt, llt] = distances(spec(f, n));
      EXPECT_GE(clt, 0.0);
      EXPECT_LE(clt, 1.0);
      EXPECT_GE(llt, 0.0);
    }
  }
}

TEST(Distances, PathTrendGolden) {
  const double clt_golden[] = {0.1001, 0.0504, 0.0252};
  const double llt_golden[] = {0.1059, 0.0533, 0.0267};
  double prev_clt = 1;
  double prev_llt = 10;
  int i = 0;
  for (std::size_t n : {25u, 100u, 400u}) {
    const auto [clt, llt] = distances(spec(Family::path, n));
    EXPECT_NEAR(clt, clt_golden[i], 1e-3);
    EXPECT_NEAR(llt, llt_golden[i], 1e-3);
    EXPECT_LT(clt, prev_clt);
    EXPECT_LT(llt, prev_llt);
    prev_clt = clt;
    prev_llt = llt;
    ++i;
  }
}

TEST(Distances, CycleFarCloserToNormalThanComplete) {
  EXPECT_LT(5 * distances(spec(Family::cycle, 200)).second, distances(spec(Family::complete, 200)).second);
}

TEST(Poisson, Reference) {
  const auto r = poisson_reference(1.0, 1, 5);
  EXPECT_EQ(r[0], 0.0);
  EXPECT_NEAR(r[1], std::exp(-1.0), 1e-16);
  EXPECT_NEAR(r[2], std::exp(-1.0), 1e-16);
  EXPECT_NEAR(r[3], std::exp(-1.0) / 2, 1e-16);
  EXPECT_NEAR(poisson_reference(2.0, 1, 3)[1], std::exp(-2.0), 1e-16);
  EXPECT_THROW(poisson_reference(0.0, 0, 3), InputError);
}

TEST(Poisson, CompleteGraphsApproachShiftedPoisson) {
  const auto p50 = normalized_probabilities(closed_form::complete(50));
  EXPECT_LE(poisson_distance(p50, 1.0, 1, 1, 10), 0.02);
  const auto p200 = normalized_probabilities(closed_form::complete(200));
  EXPECT_LT(poisson_distance(p200, 1.0, 1), poisson_distance(p50, 1.0, 1));
  const auto kb = normalized_probabilities(closed_form::complete_bipartite(25, 25));
  EXPECT_LE(poisson_distance(kb, 2.0, 1), 0.05);
}

TEST(VarianceBounds, Examples) {
  EXPECT_DOUBLE_EQ(hypercube_variance_lower_bound(3), 6.0 / 7.0);
  EXPECT_DOUBLE_EQ(variance_lower_bound(Graph::empty(5)), 0.0);
  const Graph g = random_regular(20, 3, 1);
  EXPECT_DOUBLE_EQ(variance_lower_bound(g), 20.0 * 3 / 49.0);
  EXPECT_DOUBLE_EQ(cone_variance_lower_bound(10, 2), 9.0 * 5 / 36.0);
  for (std::size_t n = 3; n <= 60; ++n) {
    const auto s = mean_variance(closed_form_spectrum(spec(Family::wheel, n)));
    EXPECT_GE(s.sigma2, cone_variance_lower_bound(n, 2));
  }
  for (std::size_t d = 1; d <= 12; ++d)
    EXPECT_GE(mean_variance(closed_form_spectrum(spec(Family::hypercube, d))).sigma2,
              hypercube_variance_lower_bound(d));
}

TEST(MomentConsistency, CoefficientAndSpectralSidesAgree) {
  for (const Graph& g : {random_regular(12, 4, 2), random_tree(14, 3), wheel_graph(9), hypercube_graph(4),
                         disjoint_union(cycle_graph(5), path_graph(4))}) {
    const auto [mean, var] = coefficient_moments(laplacian_coefficients(g));
    const auto st = mean_variance(laplacian_spectrum(g));
    EXPECT_NEAR(mean, st.mu, 1e-9);
    EXPECT_NEAR(var, st.sigma2, 1e-9);
  }
  const auto [mean, var] = coefficient_moments(closed_form::cycle(1500));
  const auto st = mean_variance(closed_form_spectrum(spec(Family::cycle, 1500)));
  EXPECT_NEAR(mean, st.mu, 1e-8);
  EXPECT_NEAR(var, st.sigma2, 1e-8);
}

TEST(LimitConstants, Values) {
  const auto path = family_limit_constants(Family::path);
  const auto cycle = family_limit_constants(Family::cycle);
  EXPECT_NEAR(path.mu_per_vertex, 0.2236068, 1e-7);
  EXPECT_NEAR(path.sigma2_per_vertex, 0.0894427, 1e-7);
  EXPECT_NEAR(cycle.mu_per_vertex, 0.4472136, 1e-7);
  EXPECT_NEAR(cycle.sigma2_per_vertex, 0.1788854, 1e-7);
  EXPECT_DOUBLE_EQ(cycle.sigma2_per_vertex, 2 * path.sigma2_per_vertex);
  EXPECT_THROW(family_limit_constants(Family::star), InputError);
}

// The cycle error decays like ((3 - sqrt5)/2)^n, far below double rounding,
// so the trend is measured in 250-bit arithmetic.
TEST(LimitConstants, CycleErrorStrictlyDecreasing) {
  const auto lim = family_limit_constants<Big>(Family::cycle);
  Big prev_mu = 1;
  Big prev_var = 1;
  for (std::size_t n : {100u, 400u, 1600u}) {
    const auto st = mean_variance(closed_form_spectrum<Big>(spec(Family::cycle, n)));
    const Big e_mu = abs(st.mu / n - lim.mu_per_vertex);
    const Big e_var = abs(st.sigma2 / n - lim.sigma2_per_vertex);
    EXPECT_LT(e_mu, prev_mu);
    EXPECT_LT(e_var, prev_var);
    prev_mu = e_mu;
    prev_var = e_var;
  }
}

// Measured behaviour: path statistics per vertex approach the cycle
// constants, with error of order 1/n.
TEST(LimitConstants, PathApproachesCycleConstants) {
  const auto lim = family_limit_constants(Family::cycle);
  double prev_mu = 1;
  double prev_var = 1;
  for (std::size_t n : {100u, 400u, 1600u}) {
    const auto st = mean_variance(closed_form_spectrum(spec(Family::path, n)));
    const double e_mu = std::abs(st.mu / static_cast<double>(n) - lim.mu_per_vertex);
    const double e_var = std::abs(st.sigma2 / static_cast<double>(n) - lim.sigma2_per_vertex);
    EXPECT_LT(e_mu, prev_mu);
    EXPECT_LT(e_var, prev_var);
    EXPECT_LT(e_mu, 1.0 / static_cast<double>(n));
    prev_mu = e_mu;
    prev_var = e_var;
  }
}

TEST(Regime, Classification) {
  const std::pair<double, double> growing[] = {{10, 2.0}, {20, 4.1}, {40, 8.0}};
  const std::pair<double, double> bounded[] = {{10, 0.80}, {20, 0.90}, {40, 0.95}};
  const std::pair<double, double> wobbly[] = {{10, 2.0}, {20, 4.5}, {40, 4.4}};
  EXPECT_EQ(classify_variance_growth(growing), Regime::normal);
  EXPECT_EQ(classify_variance_growth(bounded), Regime::poisson);
  EXPECT_EQ(classify_variance_growth(wobbly), Regime::poisson);
  EXPECT_EQ(classify_variance_growth(std::span(growing, 1)), Regime::undetermined);
  EXPECT_STREQ(regime_label(Regime::poisson), "poisson-regime");
  EXPECT_STREQ(regime_label(Regime::normal), "normal-regime");
}
