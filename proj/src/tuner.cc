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

#include <atomic>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "cgftune/cut_pipeline.h"
#include "cgftune/error.h"
#include "cgftune/rng.h"

namespace cgftune {

std::string StrategyName(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kGmi:
      return "gmi";
    case StrategyKind::kCg:
      return "cg";
    case StrategyKind::kOneRow:
      return "one_row";
    case StrategyKind::kKRow:
      return "k_row";
    case StrategyKind::kBestOneRow:
      return "best_one_row";
  }
  return "?";
}

StrategyKind ParseStrategyKind(const std::string& text) {
  for (StrategyKind kind :
       {StrategyKind::kGmi, StrategyKind::kCg, StrategyKind::kOneRow,
        StrategyKind::kKRow, StrategyKind::kBestOneRow}) {
    if (StrategyName(kind) == text) return kind;
  }
  throw Error(ErrorCode::kParseError, "unknown strategy '" + text + "'");
}

std::string SerializeParameter(const Parameter& param) {
  return JoinRationals(param, ";");
}

Parameter ParseParameter(const std::string& text) {
  Parameter param;
  if (text.empty()) return param;
  std::stringstream parts(text);
  std::string field;
  while (std::getline(parts, field, ';')) param.push_back(ParseRational(field));
  return param;
}

RootData PrepareRoot(const IlpInstance& inst) {
  RootData root;
  root.lp = SolveLp(inst);
  if (root.lp.status != LpStatus::kOptimal) return root;
  root.tableau = ExtractTableau(inst, root.lp);
  root.integral = true;
  for (const Rational& v : root.lp.x) {
    root.integral = root.integral && IsInteger(v);
  }
  return root;
}

std::optional<CutCanonical> BuildCut(const IlpInstance& inst,
                                     const RootData& root,
                                     const Strategy& strategy,
                                     const Parameter& param,
                                     bool* not_applicable) {
  *not_applicable = false;
  if (!root.tableau || root.integral) return std::nullopt;
  const SimplexTableau& tab = *root.tableau;
  auto wrong_size = [&](size_t expected) {
    if (param.size() != expected) {
      throw Error(ErrorCode::kInvalidParameters,
                  StrategyName(strategy.kind) + " expects " +
                      std::to_string(expected) + " parameters, got '" +
                      SerializeParameter(param) + "'");
    }
  };
  CutStandardForm cut;
  switch (strategy.kind) {
    case StrategyKind::kGmi:
    case StrategyKind::kCg: {
      wrong_size(0);
      const CgfInput input = SelectRows(tab, 1);
      const Rational f = input.f[0];
      const bool gmi = strategy.kind == StrategyKind::kGmi;
      cut = CutFromCgf(input, [&](const RationalVector& r) {
        return gmi ? EvalGmi(f, r[0]) : EvalCg(f, r[0]);
      });
      break;
    }
    case StrategyKind::kOneRow:
    case StrategyKind::kBestOneRow: {
      wrong_size(2);
      const CgfInput input = SelectRows(tab, 1);
      const OneDimCgf cgf = OneDimCgf::FromMu(input.f[0], strategy.p,
                                              strategy.q, param[0], param[1],
                                              strategy.M);
      cut = CutFromCgf(input,
                       [&](const RationalVector& r) { return cgf.Evaluate(r[0]); });
      break;
    }
    case StrategyKind::kKRow: {
      wrong_size(strategy.k);
      CgfInput input;
      try {
        input = SelectRows(tab, strategy.k);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInsufficientFractionalRows) throw;
        *not_applicable = true;
        return std::nullopt;
      }
      const MultiDimCgf cgf(input.f, param, strategy.tau);
      cut = CutFromCgf(input,
                       [&](const RationalVector& r) { return EvalPiKd(cgf, r); });
      break;
    }
  }
  return ToCanonical(cut, inst);
}

EvalResult TreeSizeFor(const IlpInstance& inst, const RootData& root,
                       const Strategy& strategy, const Parameter& param,
                       const BnCConfig& config) {
  EvalResult result;
  if (root.integral) {
    // The root LP solve is the whole tree.
    result.no_cut = true;
    result.tree.nodes = 1;
    result.tree.optimum = root.lp.objective;
    for (const Rational& v : root.lp.x) {
      result.tree.incumbent.push_back(v.get_num());
    }
    return result;
  }
  const std::optional<CutCanonical> cut =
      BuildCut(inst, root, strategy, param, &result.not_applicable);
  if (result.not_applicable) return result;
  if (!cut) {
    result.no_cut = true;
    result.tree = SolveBnc(inst, {}, config);
    return result;
  }
  result.tree = SolveBnc(inst, std::span<const CutCanonical>(&*cut, 1), config);
  return result;
}

EvalResult TreeSizeFor(const IlpInstance& inst, const Strategy& strategy,
                       const Parameter& param, const BnCConfig& config) {
  return TreeSizeFor(inst, PrepareRoot(inst), strategy, param, config);
}

std::vector<Parameter> Grid1d(const Rational& step) {
  if (step <= 0 || step.get_num() != 1) {
    throw Error(ErrorCode::kInvalidParameters,
                "grid step must be 1/d, got " + ToString(step));
  }
  const Integer& d = step.get_den();
  std::vector<Parameter> grid;
  for (Integer i = 0; i <= d; ++i) {
    for (Integer j = 0; j <= d; ++j) {
      grid.push_back({Ratio(i, d), Ratio(j, d)});
    }
  }
  return grid;
}

std::vector<Parameter> Candidates(const Strategy& strategy, uint64_t seed) {
  switch (strategy.kind) {
    case StrategyKind::kOneRow:
    case StrategyKind::kBestOneRow:
      return Grid1d(strategy.grid_step);
    case StrategyKind::kKRow:
      if (strategy.candidate_count < 1) {
        throw Error(ErrorCode::kInvalidParameters, "candidate_count < 1");
      }
      return SampleSimplex(strategy.k, strategy.candidate_count, strategy.tau,
                           seed);
    default:
      return {Parameter{}};
  }
}

EvalMatrix EvaluateAll(const std::vector<IlpInstance>& instances,
                       const std::vector<Parameter>& candidates,
                       const Strategy& strategy, const BnCConfig& config,
                       int threads) {
  EvalMatrix matrix;
  matrix.cells.assign(instances.size(), {});
  auto evaluate_instance = [&](size_t i) {
    const IlpInstance& inst = instances[i];
    const RootData root = PrepareRoot(inst);
    std::map<std::string, TreeSizeResult> solved;
    std::vector<EvalResult> row;
    row.reserve(candidates.size());
    for (const Parameter& param : candidates) {
      EvalResult cell;
      if (root.integral) {
        cell = TreeSizeFor(inst, root, strategy, param, config);
        row.push_back(std::move(cell));
        continue;
      }
      const std::optional<CutCanonical> cut =
          BuildCut(inst, root, strategy, param, &cell.not_applicable);
      if (cell.not_applicable || !cut) {
        cell = TreeSizeFor(inst, root, strategy, param, config);
        row.push_back(std::move(cell));
        continue;
      }
      const std::string key =
          JoinRationals(cut->alpha, ",") + "|" + ToString(cut->beta);
      auto it = solved.find(key);
      if (it == solved.end()) {
        it = solved
                 .emplace(key, SolveBnc(inst, std::span<const CutCanonical>(
                                                  &*cut, 1),
                                        config))
                 .first;
      }
      cell.tree = it->second;
      row.push_back(std::move(cell));
    }
    matrix.cells[i] = std::move(row);
  };

  if (threads <= 1 || instances.size() <= 1) {
    for (size_t i = 0; i < instances.size(); ++i) evaluate_instance(i);
    return matrix;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < instances.size(); i = next++) {
        try {
          evaluate_instance(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (failure) std::rethrow_exception(failure);
  return matrix;
}

ErmResult ErmSelect(const EvalMatrix& matrix,
                    const std::vector<Parameter>& candidates) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no candidates");
  }
  if (matrix.cells.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no instances");
  }
  ErmResult result;
  const Integer count(static_cast<long>(matrix.cells.size()));
  for (size_t c = 0; c < candidates.size(); ++c) {
    Integer total = 0;
    for (const auto& row : matrix.cells) {
      if (row[c].not_applicable) {
        throw Error(ErrorCode::kNotApplicableStrategy,
                    "candidate " + SerializeParameter(candidates[c]) +
                        " is not applicable to a training instance");
      }
      total += static_cast<long>(row[c].tree.nodes);
    }
    const Rational mean = Ratio(total, count);
    result.candidate_means.push_back(mean);
    if (c == 0 || mean < result.train_mean) {
      result.best = static_cast<int>(c);
      result.train_mean = mean;
    }
  }
  result.param = candidates[result.best];
  return result;
}

ErmResult ErmSelect(const std::vector<IlpInstance>& train,
                    const std::vector<Parameter>& candidates,
                    const Strategy& strategy, const BnCConfig& config) {
  return ErmSelect(EvaluateAll(train, candidates, strategy, config),
                   candidates);
}

Rational BestPerInstance(const EvalMatrix& matrix) {
  if (matrix.cells.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no instances");
  }
  Integer total = 0;
  for (const auto& row : matrix.cells) {
    if (row.empty()) throw Error(ErrorCode::kInvalidArgument, "no candidates");
    int64_t best = -1;
    for (const EvalResult& cell : row) {
      if (cell.not_applicable) continue;
      if (best < 0 || cell.tree.nodes < best) best = cell.tree.nodes;
    }
    if (best < 0) {
      throw Error(ErrorCode::kNotApplicableStrategy,
                  "no applicable candidate for an instance");
    }
    total += static_cast<long>(best);
  }
  return Ratio(total, Integer(static_cast<long>(matrix.cells.size())));
}

Rational BestPerInstance(const std::vector<IlpInstance>& instances,
                         const std::vector<Parameter>& candidates,
                         const Strategy& strategy, const BnCConfig& config) {
  return BestPerInstance(EvaluateAll(instances, candidates, strategy, config));
}

namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int64_t ParseInt(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError,
                key + " must be an integer, got '" + value + "'");
  }
}

uint64_t ParseSeed(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size() || value[0] == '-') {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError,
                key + " must be an unsigned integer, got '" + value + "'");
  }
}

Rational MeanNodes(const std::vector<EvalResult>& cells) {
  Integer total = 0;
  for (const EvalResult& cell : cells) total += static_cast<long>(cell.tree.nodes);
  return Ratio(total, Integer(static_cast<long>(cells.size())));
}

std::vector<EvalResult> Column(const EvalMatrix& matrix, size_t c) {
  std::vector<EvalResult> out;
  for (const auto& row : matrix.cells) {
    if (row[c].not_applicable) {
      throw Error(ErrorCode::kNotApplicableStrategy,
                  "selected parameter is not applicable to an instance");
    }
    out.push_back(row[c]);
  }
  return out;
}

std::string InstanceId(const char* prefix, size_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  return std::string(prefix) + "-" + digits;
}

ReportRow MakeRow(const std::string& id, const std::string& strategy,
                  const Parameter& param, const EvalResult& cell) {
  ReportRow row;
  row.instance_id = id;
  row.strategy = strategy;
  row.param = SerializeParameter(param);
  row.nodes = cell.tree.nodes;
  row.truncated = cell.tree.truncated;
  row.optimum =
      cell.tree.infeasible ? "infeasible" : ToString(cell.tree.optimum);
  return row;
}

}  // namespace

ExperimentSpec ParseExperimentSpec(std::istream& in) {
  ExperimentSpec spec;
  std::string shape;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key == "family") {
      spec.generator.family = ParseFamily(value);
    } else if (key == "shape") {
      shape = value;
    } else if (key == "scale") {
      spec.generator.scale = ParseInt(key, value);
    } else if (key == "train_count") {
      spec.train_count = static_cast<int>(ParseInt(key, value));
    } else if (key == "test_count") {
      spec.test_count = static_cast<int>(ParseInt(key, value));
    } else if (key == "strategy") {
      spec.strategy.kind = ParseStrategyKind(value);
    } else if (key == "p") {
      spec.strategy.p = static_cast<int>(ParseInt(key, value));
    } else if (key == "q") {
      spec.strategy.q = static_cast<int>(ParseInt(key, value));
    } else if (key == "M") {
      spec.strategy.M = ParseRational(value);
    } else if (key == "grid_step") {
      spec.strategy.grid_step = ParseRational(value);
    } else if (key == "k") {
      spec.strategy.k = static_cast<int>(ParseInt(key, value));
    } else if (key == "tau") {
      spec.strategy.tau = ParseRational(value);
    } else if (key == "candidate_count") {
      spec.strategy.candidate_count = static_cast<int>(ParseInt(key, value));
    } else if (key == "node_cap") {
      spec.bnc.node_cap = ParseInt(key, value);
    } else if (key == "master_seed") {
      spec.master_seed = ParseSeed(key, value);
    } else if (key == "threads") {
      spec.threads = static_cast<int>(ParseInt(key, value));
    } else {
      throw Error(ErrorCode::kParseError, "unknown key '" + key + "'");
    }
  }
  // The shape's meaning depends on the family, so it is applied last.
  if (!shape.empty()) ParseShape(shape, &spec.generator);
  if (spec.train_count < 1 || spec.test_count < 1) {
    throw Error(ErrorCode::kParseError, "train/test counts must be >= 1");
  }
  if (spec.bnc.node_cap < 1) {
    throw Error(ErrorCode::kParseError, "node_cap must be >= 1");
  }
  return spec;
}

ExperimentSpec ReadExperimentSpecFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return ParseExperimentSpec(in);
}

Report RunExperiment(const ExperimentSpec& spec) {
  Report report;
  SplitMix64 rng(spec.master_seed);
  for (int i = 0; i < spec.train_count; ++i) report.train_seeds.push_back(rng.Next());
  for (int i = 0; i < spec.test_count; ++i) report.test_seeds.push_back(rng.Next());
  const uint64_t candidate_seed = rng.Next();

  std::vector<IlpInstance> train, test;
  for (uint64_t s : report.train_seeds) train.push_back(Generate(spec.generator, s));
  for (uint64_t s : report.test_seeds) test.push_back(Generate(spec.generator, s));

  const Strategy& strategy = spec.strategy;
  const std::string name = StrategyName(strategy.kind);
  const std::vector<Parameter> candidates = Candidates(strategy, candidate_seed);
  const Strategy gmi{StrategyKind::kGmi};
  const std::vector<Parameter> none{Parameter{}};

  const EvalMatrix train_matrix =
      EvaluateAll(train, candidates, strategy, spec.bnc, spec.threads);
  const ErmResult erm = ErmSelect(train_matrix, candidates);
  report.selected = erm.param;
  report.train_mean = erm.train_mean;
  report.best_per_instance_train = BestPerInstance(train_matrix);
  const EvalMatrix gmi_train = EvaluateAll(train, none, gmi, spec.bnc, spec.threads);
  report.gmi_train_mean = MeanNodes(Column(gmi_train, 0));

  const EvalMatrix gmi_test = EvaluateAll(test, none, gmi, spec.bnc, spec.threads);
  const std::vector<EvalResult> gmi_test_cells = Column(gmi_test, 0);
  report.gmi_test_mean = MeanNodes(gmi_test_cells);

  std::vector<ReportRow> test_rows;
  if (strategy.kind == StrategyKind::kBestOneRow) {
    // Per-instance best over the whole grid on the test set.
    const EvalMatrix test_matrix =
        EvaluateAll(test, candidates, strategy, spec.bnc, spec.threads);
    report.test_mean = BestPerInstance(test_matrix);
    for (size_t i = 0; i < test.size(); ++i) {
      size_t best = 0;
      for (size_t c = 1; c < candidates.size(); ++c) {
        if (test_matrix.cells[i][c].tree.nodes <
            test_matrix.cells[i][best].tree.nodes) {
          best = c;
        }
      }
      test_rows.push_back(MakeRow(InstanceId("test", i), name, candidates[best],
                                  test_matrix.cells[i][best]));
    }
  } else {
    const EvalMatrix test_matrix = EvaluateAll(
        test, {erm.param}, strategy, spec.bnc, spec.threads);
    const std::vector<EvalResult> cells = Column(test_matrix, 0);
    report.test_mean = MeanNodes(cells);
    for (size_t i = 0; i < test.size(); ++i) {
      test_rows.push_back(MakeRow(InstanceId("test", i), name, erm.param, cells[i]));
    }
  }

  for (size_t i = 0; i < train.size(); ++i) {
    report.rows.push_back(MakeRow(InstanceId("train", i), name, erm.param,
                                  train_matrix.cells[i][erm.best]));
  }
  for (size_t i = 0; i < train.size(); ++i) {
    report.rows.push_back(
        MakeRow(InstanceId("train", i), "gmi", {}, gmi_train.cells[i][0]));
  }
  for (auto& row : test_rows) report.rows.push_back(std::move(row));
  for (size_t i = 0; i < test.size(); ++i) {
    report.rows.push_back(
        MakeRow(InstanceId("test", i), "gmi", {}, gmi_test_cells[i]));
  }
  return report;
}

void WriteReportCsv(std::ostream& out, const Report& report) {
  out << "instance_id,strategy,param_serialized,nodes,truncated,optimum\n";
  for (const ReportRow& row : report.rows) {
    out << row.instance_id << ',' << row.strategy << ',' << row.param << ','
        << row.nodes << ',' << (row.truncated ? 1 : 0) << ',' << row.optimum
        << '\n';
  }
}

void WriteReportSummary(std::ostream& out, const ExperimentSpec& spec,
                        const Report& report) {
  out << "family=" << FamilyName(spec.generator.family) << '\n'
      << "shape=" << ShapeText(spec.generator) << '\n'
      << "strategy=" << StrategyName(spec.strategy.kind) << '\n'
      << "master_seed=" << spec.master_seed << '\n'
      << "selected=" << SerializeParameter(report.selected) << '\n'
      << "train_mean=" << FormatDecimal(report.train_mean, 6) << '\n'
      << "gmi_train_mean=" << FormatDecimal(report.gmi_train_mean, 6) << '\n'
      << "best_per_instance_train="
      << FormatDecimal(report.best_per_instance_train, 6) << '\n'
      << "test_mean=" << FormatDecimal(report.test_mean, 6) << '\n'
      << "gmi_test_mean=" << FormatDecimal(report.gmi_test_mean, 6) << '\n';
}

}  // namespace cgftune
