#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace circumlab;

TEST(VerifyCorpus, AllFiveVertexGraphsClean) {
  const auto graphs = enumerate_two_connected(5);
  const VerificationReport r = verify_corpus(graphs, {});
  EXPECT_EQ(r.total_graphs(), 10);
  EXPECT_TRUE(r.clean());
  EXPECT_EQ(r.violations.size(), kAllChecks.size());
}

TEST(VerifyCorpus, K34IsMidPathTight) {
  const std::vector<Graph> graphs{make::complete_bipartite(3, 4)};
  VerifyOptions opt;
  opt.checks = {Check::thm1};
  const VerificationReport r = verify_corpus(graphs, opt);
  EXPECT_EQ(r.case_counts.at(Theorem1Case::MidPath), 1);
  EXPECT_EQ(r.tight_counts.at(Theorem1Case::MidPath), 1);
  EXPECT_TRUE(r.clean());
}

TEST(VerifyCorpus, RejectsGraphsOutsidePrerequisites) {
  const std::vector<Graph> graphs{make::path(4)};
  VerifyOptions opt;
  opt.checks = {Check::thm1};
  try {
    verify_corpus(graphs, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PrereqViolation);
  }
  opt.checks = {Check::lemma1, Check::oracle, Check::roundtrip};
  EXPECT_TRUE(verify_corpus(graphs, opt).clean());
  opt.witness_cap = 0;
  EXPECT_THROW(verify_corpus(graphs, opt), Error);
}

TEST(VerifyCorpus, ReportIndependentOfThreadCount) {
  const auto graphs = enumerate_two_connected(6);
  VerifyOptions one;
  VerifyOptions four;
  four.jobs = 4;
  const Json a = to_json(verify_corpus(graphs, one));
  const Json b = to_json(verify_corpus(graphs, four));
  EXPECT_EQ(a, b);
}

TEST(VerifyCorpus, CatchesAFalseClaim) {
  const BoundReport r = make_bound_report(8, 8, 4, 3, 3);
  EXPECT_FALSE(r.thm1_ok);
  EXPECT_FALSE(r.thmC_ok);
}

TEST(ReportIo, CsvAndJsonShapes) {
  const std::vector<Graph> graphs{make::complete_bipartite(3, 4), clique_join(2, 3, 2).graph};
  const VerificationReport r = verify_corpus(graphs, {});
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "graph6,n,p,c,delta,kappa,thm1_case,thm1_bound_num,thm1_bound_den_or_radical_form,tight,violations");
  EXPECT_NE(csv.find(",7,7,6,3,3,MidPath,6,1,true,"), std::string::npos);
  EXPECT_NE(csv.find(",8,8,6,3,2,LongPath,7,(7+sqrt(25))/2,true,"), std::string::npos);
  const Json j = to_json(r);
  EXPECT_EQ(j["total_graphs"], 2);
  EXPECT_EQ(j["graphs"].size(), 2U);
  EXPECT_NE(to_human(r).find("violations: 0"), std::string::npos);
}

TEST(ExploreLemma3, RunsOnSmallCorpus) {
  std::vector<Graph> graphs;
  for (int n = 3; n <= 5; ++n) {
    const auto level = enumerate_two_connected(n);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }
  const ArbitraryVineExploration e = explore_lemma3_all_vines(graphs, 50);
  EXPECT_EQ(e.graphs, 14);
  EXPECT_GT(e.vines_checked, 0);
}
