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

// Parameter selection by empirical risk minimization over tree sizes.

#ifndef CGFTUNE_TUNER_H_
#define CGFTUNE_TUNER_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cgftune/branch_and_cut.h"
#include "cgftune/cgf_multi_dim.h"
#include "cgftune/cgf_one_dim.h"
#include "cgftune/ilp.h"
#include "cgftune/instance_gen.h"
#include "cgftune/lp_simplex.h"
#include "cgftune/rational.h"

namespace cgftune {

enum class StrategyKind { kGmi, kCg, kOneRow, kKRow, kBestOneRow };

struct Strategy {
  StrategyKind kind = StrategyKind::kGmi;
  // one_row / best_one_row
  int p = 2;
  int q = 2;
  Rational M = kDefaultSlopeRange;
  Rational grid_step = Rational(1, 10);
  // k_row
  int k = 2;
  Rational tau = kDefaultTau;
  int candidate_count = kDefaultCandidateCount;
};

std::string StrategyName(StrategyKind kind);
StrategyKind ParseStrategyKind(const std::string& text);

// A parameter is a rational vector: empty for gmi/cg, (mu1, mu2) for the
// 1-row family and mu for the k-row family. Serialized with ';'.
using Parameter = RationalVector;
std::string SerializeParameter(const Parameter& param);
Parameter ParseParameter(const std::string& text);

// Root LP data reused by every candidate on one instance.
struct RootData {
  LpSolution lp;
  std::optional<SimplexTableau> tableau;  // absent when the LP is not optimal
  bool integral = false;
};
RootData PrepareRoot(const IlpInstance& inst);

struct EvalResult {
  TreeSizeResult tree;
  bool not_applicable = false;  // too few fractional rows for k_row
  bool no_cut = false;          // integral root, nothing to separate
};

// The cut for one (instance, strategy, parameter); nullopt with
// *not_applicable set when the tableau has too few fractional rows.
std::optional<CutCanonical> BuildCut(const IlpInstance& inst,
                                     const RootData& root,
                                     const Strategy& strategy,
                                     const Parameter& param,
                                     bool* not_applicable);

EvalResult TreeSizeFor(const IlpInstance& inst, const RootData& root,
                       const Strategy& strategy, const Parameter& param,
                       const BnCConfig& config = {});
EvalResult TreeSizeFor(const IlpInstance& inst, const Strategy& strategy,
                       const Parameter& param, const BnCConfig& config = {});

// (i/d, j/d) for i, j = 0..d in row-major order; step must be 1/d.
std::vector<Parameter> Grid1d(const Rational& step);

// Candidate list of a strategy: the grid for one_row/best_one_row, sampled
// simplex points for k_row, a single empty parameter otherwise.
std::vector<Parameter> Candidates(const Strategy& strategy, uint64_t seed);

// cells[i][c] for instance i and candidate c.
struct EvalMatrix {
  std::vector<std::vector<EvalResult>> cells;
};

// Evaluates every (instance, candidate) pair. Identical cuts on an instance
// share one solve. `threads` > 1 fans out across instances; the result does
// not depend on it.
EvalMatrix EvaluateAll(const std::vector<IlpInstance>& instances,
                       const std::vector<Parameter>& candidates,
                       const Strategy& strategy, const BnCConfig& config,
                       int threads = 1);

struct ErmResult {
  int best = 0;
  Parameter param;
  Rational train_mean;
  std::vector<Rational> candidate_means;
};

// Candidate with the smallest exact mean tree size, ties to the earliest.
// Throws Error(kNotApplicableStrategy) on a not-applicable cell.
ErmResult ErmSelect(const EvalMatrix& matrix,
                    const std::vector<Parameter>& candidates);
ErmResult ErmSelect(const std::vector<IlpInstance>& train,
                    const std::vector<Parameter>& candidates,
                    const Strategy& strategy, const BnCConfig& config = {});

// Mean over instances of the per-instance minimum over candidates.
Rational BestPerInstance(const EvalMatrix& matrix);
Rational BestPerInstance(const std::vector<IlpInstance>& instances,
                         const std::vector<Parameter>& candidates,
                         const Strategy& strategy,
                         const BnCConfig& config = {});

struct ExperimentSpec {
  GeneratorSpec generator;
  int train_count = 40;
  int test_count = 40;
  Strategy strategy{StrategyKind::kOneRow};
  BnCConfig bnc;
  uint64_t master_seed = 1;
  int threads = 1;
};

// key=value lines, '#' comments. Keys: family, shape, scale, train_count,
// test_count, strategy, p, q, M, grid_step, k, tau, candidate_count,
// node_cap, master_seed, threads. Throws Error(kParseError).
ExperimentSpec ParseExperimentSpec(std::istream& in);
ExperimentSpec ReadExperimentSpecFile(const std::string& path);

struct ReportRow {
  std::string instance_id;
  std::string strategy;
  std::string param;
  int64_t nodes = 0;
  bool truncated = false;
  std::string optimum;
};

struct Report {
  std::vector<ReportRow> rows;
  Parameter selected;
  Rational train_mean;            // selected parameter on train
  Rational gmi_train_mean;
  Rational best_per_instance_train;
  Rational test_mean;             // selected parameter on test
  Rational gmi_test_mean;
  std::vector<uint64_t> train_seeds;
  std::vector<uint64_t> test_seeds;
};

// Draws train seeds then test seeds from SplitMix64(master_seed), selects
// on train and evaluates the selection and the GMI baseline on test.
Report RunExperiment(const ExperimentSpec& spec);

// Header "instance_id,strategy,param_serialized,nodes,truncated,optimum".
void WriteReportCsv(std::ostream& out, const Report& report);
// key=value summary with means printed to 6 decimals.
void WriteReportSummary(std::ostream& out, const ExperimentSpec& spec,
                        const Report& report);

}  // namespace cgftune

#endif  // CGFTUNE_TUNER_H_
