#include <gtest/gtest.h>

#include <map>

#include "lapcoef/verify.hpp"

using namespace lapcoef;

namespace {
const std::vector<CorpusEntry>& corpus() {
  static const auto c = verification_corpus();
  return c;
}
}  // namespace

TEST(Corpus, PinnedContents) {
  std::map<std::pair<Family, std::size_t>, int> seeded;
  std::size_t with_family = 0;
  for (const auto& e : corpus()) {
    if (!e.family) continue;
    ++with_family;
    if (e.family->seed) ++seeded[{e.family->family, e.family->n * 100 + e.family->m}];
    EXPECT_EQ(e.graph.vertex_count(), family_vertex_count(*e.family)) << e.label;
  }
  for (std::size_t n = 4; n <= 9; ++n) EXPECT_EQ((seeded[{Family::random_tree, n * 100}]), 20) << n;
  EXPECT_EQ((seeded[{Family::random_regular, 803}]), 10);
  EXPECT_EQ((seeded[{Family::random_regular, 1003}]), 10);
  EXPECT_EQ((seeded[{Family::random_regular, 1004}]), 10);
  EXPECT_GT(with_family, 100u);
}

TEST(Verify, AllInvariantsPass) {
  const auto res = run_verification(corpus(), 2);
  for (const auto& s : res.invariants) {
    EXPECT_TRUE(s.passed()) << s.name << ": " << s.first_failure;
    EXPECT_GT(s.checked, 0u) << s.name;
  }
  EXPECT_TRUE(res.passed());
  const auto text = render_text(res);
  EXPECT_NE(text.find("forest-oracle equality: PASS (all graphs ≤ 7 vertices"), std::string::npos);
  EXPECT_NE(text.find("bipartite signless equality: PASS"), std::string::npos);
  EXPECT_NE(text.find("Zhou–Gutman tree identity: PASS (trees ≤ 9"), std::string::npos);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  std::vector<CorpusEntry> part(corpus().begin(), corpus().begin() + 80);
  EXPECT_EQ(render_text(run_verification(part, 1)), render_text(run_verification(part, 3)));
}

TEST(Verify, DetectsMismatchedClosedForm) {
  // A cycle labelled as a path: the closed-form comparisons must fail.
  std::vector<CorpusEntry> bad{{"mislabelled", cycle_graph(5), FamilySpec{Family::path, 5, 0, std::nullopt}, false}};
  const auto res = run_verification(bad, 1);
  EXPECT_FALSE(res.passed());
  const auto& cf = res.invariants[static_cast<std::size_t>(Invariant::closed_form)];
  EXPECT_EQ(cf.failed, 1u);
  EXPECT_NE(cf.first_failure.find("mislabelled"), std::string::npos);
  EXPECT_NE(render_text(res).find("closed-form coefficient equality: FAIL"), std::string::npos);
}
