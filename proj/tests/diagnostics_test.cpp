#include <gtest/gtest.h>

#include "lapcoef/diagnostics.hpp"
#include "lapcoef/report.hpp"

using namespace lapcoef;

namespace {
FamilySpec spec(Family f, std::size_t n, std::size_t m = 0) { return {f, n, m, std::nullopt}; }
}  // namespace

TEST(Diagnose, CompleteGraphIsPoissonRegime) {
  const auto r = diagnose(spec(Family::complete, 50));
  ASSERT_TRUE(r.poisson_distance);
  EXPECT_LE(*r.poisson_distance, 0.02);
  EXPECT_EQ(r.verdict, "poisson-regime");
  EXPECT_EQ(r.verdict_detail, "not CLT-normal by the real-rooted variance criterion: sigma_n^2 bounded");
  EXPECT_EQ(r.vertices, 50u);
  EXPECT_EQ(r.edges, 1225u);
  EXPECT_EQ(r.max_degree, 49u);
  EXPECT_FALSE(r.mu_per_vertex);
}

TEST(Diagnose, BalancedBipartiteIsPoissonRegime) {
  const auto r = diagnose(spec(Family::complete_bipartite, 25, 25));
  ASSERT_TRUE(r.poisson_distance);
  EXPECT_LE(*r.poisson_distance, 0.05);
  EXPECT_EQ(r.verdict, "poisson-regime");
  EXPECT_FALSE(diagnose(spec(Family::complete_bipartite, 3, 9)).poisson_distance);
}

TEST(Diagnose, GrowingVarianceFamiliesAreNormalRegime) {
  for (const auto& s : {spec(Family::path, 100), spec(Family::cycle, 60), spec(Family::hypercube, 5),
                        spec(Family::wheel, 40), spec(Family::star, 30), spec(Family::complete_binary_tree, 3),
                        FamilySpec{Family::random_regular, 40, 3, 1}}) {
    const auto r = diagnose(s);
    EXPECT_EQ(r.verdict, "normal-regime") << describe(s);
    EXPECT_EQ(r.verdict_detail, "sigma_n^2 -> infinity evidence: increasing");
    EXPECT_GE(r.sigma2, r.sigma2_lower_bound);
  }
}

TEST(Diagnose, FamilyBoundsAndLimits) {
  const auto w = diagnose(spec(Family::wheel, 20));
  ASSERT_TRUE(w.sigma2_family_bound);
  EXPECT_GE(w.sigma2, *w.sigma2_family_bound);
  const auto q = diagnose(spec(Family::hypercube, 6));
  ASSERT_TRUE(q.sigma2_family_bound);
  EXPECT_DOUBLE_EQ(*q.sigma2_family_bound, hypercube_variance_lower_bound(6));
  const auto c = diagnose(spec(Family::cycle, 200));
  ASSERT_TRUE(c.mu_limit_error);
  EXPECT_LE(*c.mu_limit_error, 1e-12);
  EXPECT_LE(*c.sigma2_limit_error, 1e-12);
}

TEST(Diagnose, ArbitraryGraphIsUndetermined) {
  const auto r = diagnose(random_regular(30, 4, 2), "rr");
  EXPECT_EQ(r.family, "rr");
  EXPECT_EQ(r.verdict, "undetermined");
  EXPECT_FALSE(r.poisson_distance);
  EXPECT_FALSE(r.sigma2_family_bound);
}

TEST(Diagnose, DegenerateAndGuardedInputs) {
  // A single vertex has sigma^2 = 0, so the distances are undefined.
  EXPECT_THROW(diagnose(spec(Family::complete, 1)), InputError);
  EXPECT_THROW(diagnose(FamilySpec{Family::random_tree, kExactVertexGuard + 1, 0, 1}), GuardError);
  EXPECT_THROW(diagnose(spec(Family::cycle, 2)), InputError);
}

TEST(Sweep, PathMeanOffsetDecreases) {
  const std::size_t ladder[] = {100, 400, 1600};
  const auto rows = sweep(spec(Family::path, 100), ladder, 1);
  ASSERT_EQ(rows.size(), 3u);
  double prev = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(rows[i].n, ladder[i]);
    EXPECT_EQ(rows[i].verdict, "normal-regime");
    const double off = std::abs(*rows[i].mu_per_vertex - 0.2236068);
    EXPECT_LT(off, prev);
    prev = off;
  }
}

TEST(Sweep, WheelVarianceGrowsAboveConeBound) {
  const std::size_t ladder[] = {10, 100, 1000};
  const auto rows = sweep(spec(Family::wheel, 10), ladder, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_GE(rows[i].sigma2, cone_variance_lower_bound(ladder[i], 2));
    if (i > 0) {
      EXPECT_GT(rows[i].sigma2, rows[i - 1].sigma2);
    }
  }
}

TEST(Sweep, IndependentOfThreadCount) {
  const std::size_t ladder[] = {12, 30, 8, 50};
  for (const auto& base : {spec(Family::cycle, 12), FamilySpec{Family::random_tree, 12, 0, 9}}) {
    const auto a = sweep(base, ladder, 1);
    const auto b = sweep(base, ladder, 4);
    EXPECT_EQ(a, b);
    EXPECT_EQ(report::to_json(a).dump(), report::to_json(b).dump());
  }
}

TEST(Sweep, Errors) {
  EXPECT_THROW(sweep(spec(Family::path, 3), {}, 1), InputError);
  const std::size_t bad[] = {5, 2};
  EXPECT_THROW(sweep(spec(Family::cycle, 5), bad, 1), InputError);
}

TEST(Sweep, SingleSizeUsesProbeLadder) {
  const std::size_t one[] = {40};
  EXPECT_EQ(sweep(spec(Family::complete, 40), one, 1).front().verdict, "poisson-regime");
  EXPECT_EQ(sweep(spec(Family::cycle, 40), one, 1).front().verdict, "normal-regime");
}

TEST(Report, JsonAndCsvCarrySameValues) {
  const std::size_t ladder[] = {20, 40};
  const auto rows = sweep(spec(Family::cycle, 20), ladder, 1);
  std::ostringstream csv;
  report::write_diagnostics_csv(csv, rows);
  std::istringstream in(csv.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.substr(0, 17), "family,n,vertices");
  const auto j = report::to_json(rows);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    std::getline(in, line);
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
    EXPECT_EQ(std::stod(fields[5]), j[i]["mu"].get<double>());
    EXPECT_EQ(std::stod(fields[6]), j[i]["sigma2"].get<double>());
    EXPECT_EQ(std::stod(fields[9]), j[i]["clt_distance"].get<double>());
    EXPECT_EQ(fields[12], j[i]["verdict"].get<std::string>());
  }
}

TEST(Report, ShortestRoundTripDoubles) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, 0.0}) EXPECT_EQ(std::stod(report::format_double(v)), v);
  EXPECT_EQ(report::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(report::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}
