// Copyright 2026 The cgftune Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgftune/tuner.h"

#include <gtest/gtest.h>

#include <sstream>

#include "cgftune/error.h"

namespace cgftune {
namespace {

IlpInstance Toy() {
  IlpInstance inst;
  inst.m = 1;
  inst.n = 1;
  inst.A = {{Rational(2)}};
  inst.b = {Rational(3)};
  inst.c = {Rational(1)};
  inst.rho = 2;
  return inst;
}

TEST(Grid1dTest, Sizes) {
  EXPECT_EQ(Grid1d(Ratio(1, 10)).size(), 121u);
  EXPECT_EQ(Grid1d(Ratio(1, 2)).size(), 9u);
  const std::vector<Parameter> unit = Grid1d(1);
  ASSERT_EQ(unit.size(), 4u);
  EXPECT_EQ(unit[0], (Parameter{0, 0}));
  EXPECT_EQ(unit[1], (Parameter{0, 1}));
  EXPECT_EQ(unit[2], (Parameter{1, 0}));
  EXPECT_EQ(unit[3], (Parameter{1, 1}));
  EXPECT_THROW(Grid1d(Ratio(2, 3)), Error);
  EXPECT_THROW(Grid1d(0), Error);
}

TEST(TreeSizeForTest, ToyGmi) {
  const EvalResult result = TreeSizeFor(Toy(), Strategy{StrategyKind::kGmi}, {});
  EXPECT_EQ(result.tree.nodes, 1);
  EXPECT_EQ(result.tree.optimum, 1);
  EXPECT_FALSE(result.no_cut);
}

TEST(TreeSizeForTest, IntegralRootHasNoCut) {
  IlpInstance inst = Toy();
  inst.A = {{Rational(1)}};
  inst.b = {Rational(2)};
  const EvalResult result = TreeSizeFor(inst, Strategy{StrategyKind::kGmi}, {});
  EXPECT_TRUE(result.no_cut);
  EXPECT_EQ(result.tree.nodes, 1);
}

TEST(TreeSizeForTest, KRowNotApplicableOnSingleRowKnapsack) {
  Strategy strategy{StrategyKind::kKRow};
  const IlpInstance inst = GenKnapsack(20, 1, 3);
  const EvalResult result =
      TreeSizeFor(inst, strategy, {Ratio(1, 2), Ratio(1, 2)});
  EXPECT_TRUE(result.not_applicable || result.no_cut);
}

TEST(TreeSizeForTest, ZeroMuIsGmi) {
  Strategy one_row{StrategyKind::kOneRow};
  for (uint64_t seed = 0; seed < 8; ++seed) {
    const IlpInstance inst = GenKnapsack(12, 1, seed, 100);
    EXPECT_EQ(TreeSizeFor(inst, one_row, {0, 0}).tree,
              TreeSizeFor(inst, Strategy{StrategyKind::kGmi}, {}).tree);
  }
}

TEST(ErmTest, SingleCandidateAndOrdering) {
  std::vector<IlpInstance> train;
  for (uint64_t seed = 0; seed < 4; ++seed) {
    train.push_back(GenKnapsack(10, 1, seed, 100));
  }
  Strategy one_row{StrategyKind::kOneRow};
  const std::vector<Parameter> single{{0, 0}};
  const ErmResult lone = ErmSelect(train, single, one_row);
  EXPECT_EQ(lone.best, 0);
  EXPECT_EQ(lone.param, single[0]);

  const std::vector<Parameter> grid = Grid1d(Ratio(1, 2));
  const EvalMatrix matrix = EvaluateAll(train, grid, one_row, {});
  const ErmResult erm = ErmSelect(matrix, grid);
  for (const Rational& mean : erm.candidate_means) EXPECT_LE(erm.train_mean, mean);
  EXPECT_LE(erm.train_mean, erm.candidate_means[0]);  // (0,0) is GMI
  EXPECT_LE(BestPerInstance(matrix), erm.train_mean);
  EXPECT_EQ(BestPerInstance(EvaluateAll(train, single, one_row, {})),
            lone.train_mean);
  // Threads do not change the matrix.
  const EvalMatrix threaded = EvaluateAll(train, grid, one_row, {}, 3);
  for (size_t i = 0; i < train.size(); ++i) {
    for (size_t c = 0; c < grid.size(); ++c) {
      EXPECT_EQ(threaded.cells[i][c].tree, matrix.cells[i][c].tree);
    }
  }
}

TEST(ErmTest, NotApplicableAborts) {
  std::vector<IlpInstance> train{GenKnapsack(20, 1, 1)};
  Strategy strategy{StrategyKind::kKRow};
  const std::vector<Parameter> candidates = Candidates(strategy, 1);
  const EvalMatrix matrix = EvaluateAll(train, candidates, strategy, {});
  if (!matrix.cells[0][0].not_applicable) GTEST_SKIP() << "integral root";
  try {
    ErmSelect(matrix, candidates);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotApplicableStrategy);
  }
}

TEST(ParameterTest, RoundTrip) {
  EXPECT_EQ(SerializeParameter({Ratio(1, 2), Rational(0)}), "1/2;0");
  EXPECT_EQ(ParseParameter("1/2;0"), (Parameter{Ratio(1, 2), 0}));
  EXPECT_TRUE(ParseParameter("").empty());
}

TEST(ExperimentSpecTest, Parse) {
  std::istringstream text(
      "# desk run\nfamily = packing\nshape=4x8\ntrain_count=3\ntest_count=2\n"
      "strategy=k_row\nk=3\ntau=500\ncandidate_count=7\nnode_cap=99\n"
      "master_seed=5\n");
  const ExperimentSpec spec = ParseExperimentSpec(text);
  EXPECT_EQ(spec.generator.family, Family::kPacking);
  EXPECT_EQ(spec.generator.rows, 4);
  EXPECT_EQ(spec.generator.cols, 8);
  EXPECT_EQ(spec.train_count, 3);
  EXPECT_EQ(spec.strategy.kind, StrategyKind::kKRow);
  EXPECT_EQ(spec.strategy.k, 3);
  EXPECT_EQ(spec.strategy.tau, 500);
  EXPECT_EQ(spec.bnc.node_cap, 99);
  EXPECT_EQ(spec.master_seed, 5u);

  std::istringstream bad("colour=blue\n");
  EXPECT_THROW(ParseExperimentSpec(bad), Error);
  std::istringstream bad_value("train_count=many\n");
  EXPECT_THROW(ParseExperimentSpec(bad_value), Error);
}

ExperimentSpec SmallSpec() {
  ExperimentSpec spec;
  spec.generator.family = Family::kKnapsack;
  spec.generator.cols = 8;
  spec.generator.rows = 1;
  spec.generator.scale = 60;
  spec.train_count = 1;
  spec.test_count = 1;
  spec.strategy.kind = StrategyKind::kOneRow;
  spec.strategy.grid_step = Ratio(1, 2);
  return spec;
}

TEST(RunExperimentTest, SmokeShapeAndDeterminism) {
  const ExperimentSpec spec = SmallSpec();
  const Report report = RunExperiment(spec);
  ASSERT_EQ(report.rows.size(), 4u);
  EXPECT_EQ(report.rows[0].instance_id, "train-000");
  EXPECT_EQ(report.rows[2].instance_id, "test-000");
  for (const ReportRow& row : report.rows) {
    EXPECT_FALSE(row.strategy.empty());
    EXPECT_GE(row.nodes, 1);
    EXPECT_FALSE(row.optimum.empty());
  }
  EXPECT_NE(report.train_seeds[0], report.test_seeds[0]);
  EXPECT_LE(report.best_per_instance_train, report.train_mean);
  EXPECT_LE(report.train_mean, report.gmi_train_mean);

  std::ostringstream a, b;
  WriteReportCsv(a, report);
  WriteReportCsv(b, RunExperiment(spec));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')),
            "instance_id,strategy,param_serialized,nodes,truncated,optimum");
}

TEST(RunExperimentTest, ReportMeansMatchRows) {
  ExperimentSpec spec = SmallSpec();
  spec.train_count = 3;
  spec.test_count = 3;
  const Report report = RunExperiment(spec);
  Integer test_total = 0, gmi_total = 0;
  for (const ReportRow& row : report.rows) {
    if (row.instance_id.rfind("test", 0) != 0) continue;
    (row.strategy == "gmi" ? gmi_total : test_total) += static_cast<long>(row.nodes);
  }
  EXPECT_EQ(report.test_mean, Ratio(test_total, 3));
  EXPECT_EQ(report.gmi_test_mean, Ratio(gmi_total, 3));
}

}  // namespace
}  // namespace cgftune
