#include <gtest/gtest.h>

#include "tgraph/experiment.hpp"

using namespace tgraph;

TEST(Experiment, SmallSuitesPass) {
  for (const char* suite : {"formula", "ds", "euler", "tangency", "tangled"}) {
    ExperimentReport r = run_experiment(suite);
    EXPECT_TRUE(r.ok()) << suite;
  }
}

TEST(Experiment, SeededSuitesAreDeterministic) {
  ExperimentConfig c{5, 7, 1};
  for (const char* suite : {"parity", "splitting", "facesize", "bisection"}) {
    ExperimentReport a = run_experiment(suite, c), b = run_experiment(suite, c);
    EXPECT_TRUE(a.ok()) << suite;
    EXPECT_EQ(report_to_csv(a), report_to_csv(b));
    EXPECT_EQ(a.rows.back().seed, 11u);
  }
}

TEST(Experiment, DsTableMatchesBruteForce) {
  ExperimentReport r = run_experiment("ds");
  ASSERT_EQ(r.rows.size(), 16u);
  for (const ReportRow& row : r.rows) EXPECT_EQ(row.metrics["lambda"], row.metrics["table"]);
}

TEST(Experiment, Reports) {
  ExperimentReport r = run_experiment("euler");
  std::string csv = report_to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,seed,n,m,k,ratio,contradiction,pass");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  Json j = report_to_json(r);
  EXPECT_EQ(j["summary"]["instances"], 3);
  EXPECT_EQ(j["rows"][2]["k"], 200);
  EXPECT_GT(j["rows"][2]["ratio"].get<double>(), 3.3);
  EXPECT_THROW(run_experiment("nope"), Error);
  EXPECT_THROW(run_experiment("parity", {1, 0, 0}), Error);
}
