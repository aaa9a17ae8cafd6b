#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "lapcoef/cli.hpp"

using namespace lapcoef;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lapcoef");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(LAPCOEF_TEST_DIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}
}  // namespace

TEST(Cli, CoeffsCompleteGraph) {
  const auto r = run_cli({"coeffs", "--family", "complete", "--n", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,c_k\n0,0\n1,9\n2,6\n3,1\n");
  const auto j = report::Json::parse(run_cli({"coeffs", "--family", "complete", "--n", "3"}).out);
  EXPECT_EQ(j["coefficients"], report::Json::parse(R"(["0","9","6","1"])"));
  EXPECT_EQ(j["graph"], "complete(3)");
}

TEST(Cli, CoeffsFromEdgeList) {
  const auto path = temp_file("k2.txt", "2 1\n0 1\n");
  const auto r = run_cli({"coeffs", "--edge-list", path, "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,c_k\n0,0\n1,2\n2,1\n");
}

TEST(Cli, ClosedFormMatchesMatrixRouteByteForByte) {
  for (const char* fam : {"path", "cycle", "wheel", "complete_bipartite"}) {
    const auto a = run_cli({"coeffs", "--family", fam, "--n", "7"});
    const auto b = run_cli({"coeffs", "--family", fam, "--n", "7", "--closed-form"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << fam;
  }
}

TEST(Cli, LargeCoefficientsAreDecimalStrings) {
  const auto r = run_cli({"coeffs", "--family", "complete", "--n", "50"});
  const auto j = report::Json::parse(r.out);
  EXPECT_EQ(j["coefficients"][1].get<std::string>(), to_decimal(ipow(50, 49)));
}

TEST(Cli, SignlessSwitchesMatrix) {
  const auto r = run_cli({"coeffs", "--family", "complete", "--n", "3", "--signless", "--format", "csv"});
  EXPECT_EQ(r.out, "k,c_k\n0,4\n1,9\n2,6\n3,1\n");
  const auto j = report::Json::parse(run_cli({"spectrum", "--family", "complete", "--n", "3", "--signless"}).out);
  EXPECT_NEAR(j["values"][0].get<double>(), 4.0, 1e-12);
  EXPECT_EQ(j["matrix"], "signless");
}

TEST(Cli, SpectrumAndStats) {
  auto j = report::Json::parse(run_cli({"spectrum", "--family", "hypercube", "--n", "2", "--closed-form"}).out);
  EXPECT_EQ(j["values"], report::Json::parse("[4.0,2.0,2.0,0.0]"));
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["trace_residual"], 0.0);
  j = report::Json::parse(run_cli({"stats", "--family", "complete", "--n", "2"}).out);
  EXPECT_NEAR(j["mu"].get<double>(), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(j["sigma2"].get<double>(), 2.0 / 9.0, 1e-14);
  const auto csv = run_cli({"stats", "--family", "star", "--n", "4", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, 37), "n,vertices,mu,sigma2,sigma2_lower_bou");
}

TEST(Cli, DiagnoseCompleteFifty) {
  const auto r = run_cli({"diagnose", "--family", "complete", "--n", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = report::Json::parse(r.out);
  EXPECT_LE(j["poisson_distance"].get<double>(), 0.02);
  EXPECT_EQ(j["verdict"], "poisson-regime");
}

TEST(Cli, SweepOutputs) {
  const auto r = run_cli({"sweep", "--family", "path", "--ladder", "100,400,1600"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = report::Json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  double prev = 1;
  for (const auto& row : j) {
    const double off = std::abs(row["mu_per_vertex"].get<double>() - 0.2236068);
    EXPECT_LT(off, prev);
    prev = off;
  }
  const auto csv = run_cli({"sweep", "--family", "path", "--ladder", "100,400,1600", "--format", "csv"});
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);
}

TEST(Cli, SweepIsDeterministicAcrossThreads) {
  const auto a = run_cli({"sweep", "--family", "random_regular", "--degree", "3", "--seed", "4", "--ladder",
                          "10,20,40,80", "--threads", "1"});
  const auto b = run_cli({"sweep", "--family", "random_regular", "--degree", "3", "--seed", "4", "--ladder",
                          "10,20,40,80", "--threads", "4"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutputFile) {
  const std::string path = std::string(LAPCOEF_TEST_DIR) + "/coeffs_out.csv";
  const auto r = run_cli({"coeffs", "--family", "path", "--n", "3", "--format", "csv", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "k,c_k\n0,0\n1,3\n2,4\n3,1\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"frobnicate"},
      {"coeffs"},
      {"coeffs", "--family", "path"},
      {"coeffs", "--family", "petersen", "--n", "4"},
      {"coeffs", "--family", "cycle", "--n", "2"},
      {"coeffs", "--family", "path", "--n", "3", "--edge-list", "x.txt"},
      {"coeffs", "--family", "random_tree", "--n", "5"},
      {"coeffs", "--family", "path", "--n", "5", "--seed", "3"},
      {"coeffs", "--family", "random_tree", "--n", "5", "--seed", "1", "--closed-form"},
      {"coeffs", "--edge-list", "/nonexistent/file.txt"},
      {"coeffs", "--family", "path", "--n", "3", "--format", "xml"},
      {"sweep", "--family", "path"},
      {"diagnose", "--family", "complete", "--n", "1"},
      {"verify", "--family", "path"},
  };
  for (const auto& args : bad) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]) << " " << r.err;
    EXPECT_FALSE(r.err.empty());
  }
  const auto malformed = temp_file("bad.txt", "3 1\n0 5\n");
  EXPECT_EQ(run_cli({"coeffs", "--edge-list", malformed}).code, 2);
}

TEST(Cli, GuardErrorsExitThree) {
  const auto r = run_cli({"coeffs", "--family", "random_tree", "--n", "500", "--seed", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("guard"), std::string::npos);
  EXPECT_EQ(run_cli({"spectrum", "--family", "random_tree", "--n", "700", "--seed", "1"}).code, 3);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, 0); }
