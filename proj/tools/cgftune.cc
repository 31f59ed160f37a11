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

// cgftune command line: generate, solve, tune, plot-cgf, validate-cgf.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgftune/branch_and_cut.h"
#include "cgftune/cgf_multi_dim.h"
#include "cgftune/cgf_one_dim.h"
#include "cgftune/cut_pipeline.h"
#include "cgftune/error.h"
#include "cgftune/ilp.h"
#include "cgftune/instance_gen.h"
#include "cgftune/rng.h"
#include "cgftune/tuner.h"

namespace {

using namespace cgftune;

struct GenerateArgs {
  std::string family = "knapsack";
  std::string shape = "20x1";
  int count = 1;
  uint64_t seed = 1;
  int64_t scale = kDefaultKnapsackScale;
  std::string out_dir = ".";
};

struct SolveArgs {
  std::string instance;
  std::string strategy = "none";
  std::string param;
  int p = kDefaultPieces;
  int q = kDefaultPieces;
  std::string M = std::to_string(kDefaultSlopeRange);
  int k = 2;
  std::string tau = std::to_string(kDefaultTau);
  int64_t node_cap = kDefaultNodeCap;
  std::string cut_out;
};

struct TuneArgs {
  std::string spec;
  std::string out = "report.csv";
  std::string summary;
};

struct CgfArgs {
  std::string family = "one_row";
  std::string f;
  int p = kDefaultPieces;
  int q = kDefaultPieces;
  std::string s1, s2;
  std::string mu1 = "0", mu2 = "0";
  std::string M = std::to_string(kDefaultSlopeRange);
  std::string mu;  // k_row, ';'-separated
  std::string tau = std::to_string(kDefaultTau);
  int resolution = 1000;
  int samples = 10000;
  uint64_t seed = 1;
  std::string out;
};

std::ostream& OpenOut(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  return file;
}

void RunGenerate(const GenerateArgs& args) {
  GeneratorSpec spec;
  spec.family = ParseFamily(args.family);
  ParseShape(args.shape, &spec);
  spec.scale = args.scale;
  if (args.count < 1) throw Error(ErrorCode::kInvalidArgument, "count < 1");
  std::filesystem::create_directories(args.out_dir);
  SplitMix64 rng(args.seed);
  std::vector<ManifestEntry> manifest;
  for (int i = 0; i < args.count; ++i) {
    const uint64_t seed = rng.Next();
    const IlpInstance inst = Generate(spec, seed);
    ValidateInstance(inst);
    char name[64];
    std::snprintf(name, sizeof(name), "%s_%04d.txt", args.family.c_str(), i);
    WriteInstanceFile((std::filesystem::path(args.out_dir) / name).string(),
                      inst);
    manifest.push_back({name, seed, FamilyName(spec.family), ShapeText(spec)});
  }
  std::ofstream out(std::filesystem::path(args.out_dir) / "manifest.csv");
  WriteManifest(out, manifest);
  std::cout << "wrote " << args.count << " instances to " << args.out_dir
            << '\n';
}

void RunSolve(const SolveArgs& args) {
  const IlpInstance inst = ReadInstanceFile(args.instance);
  ValidateInstance(inst);
  BnCConfig config;
  config.node_cap = args.node_cap;
  if (args.strategy == "none") {
    std::cout << FormatTreeSize(SolveBnc(inst, {}, config)) << '\n';
    return;
  }
  Strategy strategy;
  strategy.kind = ParseStrategyKind(args.strategy);
  strategy.p = args.p;
  strategy.q = args.q;
  strategy.M = ParseRational(args.M);
  strategy.k = args.k;
  strategy.tau = ParseRational(args.tau);
  Parameter param = ParseParameter(args.param);
  if (param.empty() && (strategy.kind == StrategyKind::kOneRow ||
                        strategy.kind == StrategyKind::kBestOneRow)) {
    param = {0, 0};
  }
  const RootData root = PrepareRoot(inst);
  bool not_applicable = false;
  const auto cut = BuildCut(inst, root, strategy, param, &not_applicable);
  if (not_applicable) {
    throw Error(ErrorCode::kNotApplicableStrategy,
                "fewer than k fractional rows in the root tableau");
  }
  if (cut && !args.cut_out.empty()) {
    std::ofstream file;
    WriteCutCsv(OpenOut(args.cut_out, file), *cut);
  }
  const EvalResult result = TreeSizeFor(inst, root, strategy, param, config);
  std::cout << FormatTreeSize(result.tree)
            << (result.no_cut ? " cut=none" : " cut=root") << '\n';
}

void RunTune(const TuneArgs& args) {
  const ExperimentSpec spec = ReadExperimentSpecFile(args.spec);
  const Report report = RunExperiment(spec);
  {
    std::ofstream file;
    WriteReportCsv(OpenOut(args.out, file), report);
  }
  if (!args.summary.empty()) {
    std::ofstream file;
    WriteReportSummary(OpenOut(args.summary, file), spec, report);
  }
  WriteReportSummary(std::cout, spec, report);
}

RationalVector ParseVector(const std::string& text) {
  return ParseParameter(text);
}

OneDimCgf MakeOneDim(const CgfArgs& args) {
  const Rational f = ParseRational(args.f);
  if (!args.s1.empty() || !args.s2.empty()) {
    if (args.s1.empty() || args.s2.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "give both --s1 and --s2");
    }
    return OneDimCgf(f, args.p, args.q, ParseRational(args.s1),
                     ParseRational(args.s2));
  }
  return OneDimCgf::FromMu(f, args.p, args.q, ParseRational(args.mu1),
                           ParseRational(args.mu2), ParseRational(args.M));
}

void RunPlot(const CgfArgs& args) {
  std::ofstream file;
  std::ostream& out = OpenOut(args.out, file);
  if (args.family == "gmi" || args.family == "cg") {
    const Rational f = ParseRational(args.f);
    const bool gmi = args.family == "gmi";
    WritePlotCsv(
        out,
        [&](const Rational& r) { return gmi ? EvalGmi(f, r) : EvalCg(f, r); },
        args.resolution);
    return;
  }
  if (args.family != "one_row") {
    throw Error(ErrorCode::kInvalidArgument,
                "plot-cgf supports gmi, cg and one_row");
  }
  const OneDimCgf cgf = MakeOneDim(args);
  WritePlotCsv(
      out, [&](const Rational& r) { return cgf.Evaluate(r); },
      args.resolution);
}

void PrintValidity(const ValidityReport& report) {
  std::cout << "valid=1 nonnegativity_checks=" << report.nonnegativity_checks
            << " periodicity_checks=" << report.periodicity_checks
            << " subadditivity_checks=" << report.subadditivity_checks
            << '\n';
}

void RunValidate(const CgfArgs& args) {
  if (args.family == "one_row") {
    const OneDimCgf cgf = MakeOneDim(args);
    PrintValidity(CheckValidity1d(cgf, args.samples, args.seed));
    return;
  }
  if (args.family == "k_row") {
    const MultiDimCgf cgf(ParseVector(args.f), ParseVector(args.mu),
                          ParseRational(args.tau));
    PrintValidity(CheckValidityKd(cgf, args.samples, args.seed));
    return;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "validate-cgf supports one_row and k_row");
}

void AddCgfOptions(CLI::App* cmd, CgfArgs* args) {
  cmd->add_option("--family", args->family, "gmi, cg, one_row or k_row")
      ->capture_default_str();
  cmd->add_option("--f", args->f, "f as p/q (k_row: ';'-separated vector)")
      ->required();
  cmd->add_option("--p", args->p)->capture_default_str();
  cmd->add_option("--q", args->q)->capture_default_str();
  cmd->add_option("--s1", args->s1, "left slope");
  cmd->add_option("--s2", args->s2, "right slope");
  cmd->add_option("--mu1", args->mu1)->capture_default_str();
  cmd->add_option("--mu2", args->mu2)->capture_default_str();
  cmd->add_option("--M", args->M, "truncation of unbounded slope ranges")
      ->capture_default_str();
  cmd->add_option("--mu", args->mu, "k_row mu, ';'-separated");
  cmd->add_option("--tau", args->tau)->capture_default_str();
  cmd->add_option("--out", args->out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut generating function tuning for integer programs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write seeded instances");
  generate->add_option("--family", gen.family, "knapsack or packing")
      ->capture_default_str();
  generate->add_option("--shape", gen.shape, "NxK (knapsack) or mxn (packing)")
      ->capture_default_str();
  generate->add_option("--count", gen.count)->capture_default_str();
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("--scale", gen.scale, "knapsack weight bound")
      ->capture_default_str();
  generate->add_option("--out-dir", gen.out_dir)->capture_default_str();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "branch and bound with a root cut");
  solve->add_option("instance", solve_args.instance)->required();
  solve->add_option("--strategy", solve_args.strategy,
                    "none, gmi, cg, one_row or k_row")
      ->capture_default_str();
  solve->add_option("--param", solve_args.param, "';'-separated mu");
  solve->add_option("--p", solve_args.p)->capture_default_str();
  solve->add_option("--q", solve_args.q)->capture_default_str();
  solve->add_option("--M", solve_args.M)->capture_default_str();
  solve->add_option("--k", solve_args.k)->capture_default_str();
  solve->add_option("--tau", solve_args.tau)->capture_default_str();
  solve->add_option("--node-cap", solve_args.node_cap)->capture_default_str();
  solve->add_option("--cut-out", solve_args.cut_out, "write the cut as CSV");

  TuneArgs tune_args;
  auto* tune = app.add_subcommand("tune", "run an experiment spec");
  tune->add_option("spec", tune_args.spec)->required();
  tune->add_option("--out", tune_args.out, "report CSV")->capture_default_str();
  tune->add_option("--summary", tune_args.summary, "summary file");

  CgfArgs plot_args;
  auto* plot = app.add_subcommand("plot-cgf", "(r, pi(r)) CSV");
  AddCgfOptions(plot, &plot_args);
  plot->add_option("--resolution", plot_args.resolution)->capture_default_str();

  CgfArgs validate_args;
  auto* validate = app.add_subcommand("validate-cgf", "exact validity checks");
  AddCgfOptions(validate, &validate_args);
  validate->add_option("--samples", validate_args.samples)
      ->capture_default_str();
  validate->add_option("--seed", validate_args.seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) RunGenerate(gen);
    if (*solve) RunSolve(solve_args);
    if (*tune) RunTune(tune_args);
    if (*plot) RunPlot(plot_args);
    if (*validate) RunValidate(validate_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
