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

// Acceptance run: one PASS/FAIL line per criterion 1-9.
//
// All comparisons are exact (rational arithmetic, zero tolerance). Each
// criterion also has a wall-clock limit; exceeding it fails the line.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgftune/branch_and_cut.h"
#include "cgftune/cgf_multi_dim.h"
#include "cgftune/cgf_one_dim.h"
#include "cgftune/cut_pipeline.h"
#include "cgftune/error.h"
#include "cgftune/instance_gen.h"
#include "cgftune/rng.h"
#include "cgftune/tuner.h"

namespace {

using namespace cgftune;

const Rational kTau(1000);
constexpr uint64_t kSeed = 20260601;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Rational RandomFraction(SplitMix64& rng, int64_t den) {
  return Ratio(rng.UniformInt(1, den - 1), den);
}

// f in [0,1)^k \ {0}.
RationalVector RandomF(SplitMix64& rng, int k) {
  RationalVector f(k);
  bool nonzero = false;
  for (auto& x : f) {
    x = Ratio(rng.UniformInt(0, 59), 60);
    nonzero = nonzero || x != 0;
  }
  if (!nonzero) f[rng.UniformInt(0, k - 1)] = RandomFraction(rng, 60);
  return f;
}

RationalVector RandomPoint(SplitMix64& rng, int k) {
  RationalVector r(k);
  for (auto& x : r) x = Ratio(rng.UniformInt(-400, 400), rng.UniformInt(1, 97));
  return r;
}

Outcome OracleEquivalence() {
  Outcome out;
  std::ostringstream detail;
  SplitMix64 rng(kSeed + 1);
  for (int k : {2, 3, 5}) {
    const auto mus = SampleSimplex(k, 1000, kTau, rng.Next());
    int mismatches = 0;
    for (const RationalVector& mu : mus) {
      const RationalVector f = RandomF(rng, k);
      const RationalVector r = RandomPoint(rng, k);
      const MultiDimCgf cgf(f, mu, kTau);
      if (EvalPiKd(cgf, r) != EvalPiKdOracle(f, mu, r, OracleRadius(kTau))) {
        ++mismatches;
      }
    }
    detail << " k=" << k << ":" << mismatches << "/1000 mismatches";
    out.ok = out.ok && mismatches == 0;
  }
  out.detail = detail.str();
  return out;
}

Outcome GmiReductions() {
  Outcome out;
  SplitMix64 rng(kSeed + 2);
  int one_dim_bad = 0;
  for (int t = 0; t < 20; ++t) {
    const Rational f = RandomFraction(rng, 1000);
    for (int p = 2; p <= 4; ++p) {
      const OneDimCgf cgf = OneDimCgf::FromMu(f, p, p, 0, 0);
      for (int i = 0; i < 1000; ++i) {
        const Rational r = Ratio(i, 1000);
        if (cgf.Evaluate(r) != EvalGmi(f, r)) ++one_dim_bad;
      }
    }
  }
  int k_dim_bad = 0;
  for (int k = 2; k <= 3; ++k) {
    for (int t = 0; t < 200; ++t) {
      RationalVector f(k);
      for (auto& x : f) x = RandomFraction(rng, 100);
      const RationalVector r = RandomPoint(rng, k);
      const int i = static_cast<int>(rng.UniformInt(0, k - 1));
      RationalVector mu(k, Rational(0));
      mu[i] = 1;
      if (EvalPiKdOracle(f, mu, r, OracleRadius(kTau)) != EvalGmi(f[i], r[i])) {
        ++k_dim_bad;
      }
    }
  }
  out.ok = one_dim_bad == 0 && k_dim_bad == 0;
  out.detail = " (a) " + std::to_string(one_dim_bad) +
               "/60000 1-D mismatches, (b) " + std::to_string(k_dim_bad) +
               "/400 k-D mismatches";
  return out;
}

Outcome ValiditySuites() {
  Outcome out;
  std::ostringstream detail;
  SplitMix64 rng(kSeed + 3);
  int one_dim_fail = 0;
  for (int p = 2; p <= 4; ++p) {
    for (int q = 2; q <= 4; ++q) {
      for (int t = 0; t < 50; ++t) {
        const OneDimCgf cgf = OneDimCgf::FromMu(
            RandomFraction(rng, 100), p, q, Ratio(rng.UniformInt(0, 100), 100),
            Ratio(rng.UniformInt(0, 100), 100));
        try {
          CheckValidity1d(cgf, 10000, rng.Next());
        } catch (const Error&) {
          ++one_dim_fail;
        }
      }
    }
  }
  detail << " 1-D: " << one_dim_fail << "/450 failing draws;";
  out.ok = one_dim_fail == 0;
  for (int k : {2, 3, 5, 10}) {
    const auto mus = SampleSimplex(k, 50, kTau, rng.Next());
    int fail = 0;
    for (const RationalVector& mu : mus) {
      const MultiDimCgf cgf(RandomF(rng, k), mu, kTau);
      try {
        CheckValidityKd(cgf, 10000, rng.Next());
      } catch (const Error&) {
        ++fail;
      }
    }
    detail << " k=" << k << ": " << fail << "/50";
    out.ok = out.ok && fail == 0;
  }
  out.detail = detail.str() + " failing draws";
  return out;
}

// Instances and cuts shared by criteria 4 and 5.
struct CutCase {
  IlpInstance inst;
  std::vector<std::string> names;
  std::vector<CutCanonical> cuts;
  std::vector<bool> separates;  // verify_lp_violation per cut
  std::vector<std::string> errors;
};

std::vector<CutCase> BuildCutCases() {
  std::vector<CutCase> cases;
  SplitMix64 rng(kSeed + 4);
  for (int t = 0; t < 200; ++t) {
    CutCase c;
    c.inst = t < 100 ? GenKnapsack(10, 1, rng.Next())
                     : GenPacking(4, 8, rng.Next());
    const LpSolution sol = SolveLp(c.inst);
    const SimplexTableau tab = ExtractTableau(c.inst, sol);
    auto add = [&](const std::string& name, int k,
                   const std::function<Rational(const CgfInput&,
                                                const RationalVector&)>& pi) {
      CgfInput input;
      try {
        input = SelectRows(tab, k);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInsufficientFractionalRows) return;
        throw;
      }
      try {
        const CutStandardForm cut = CutFromCgf(
            input, [&](const RationalVector& r) { return pi(input, r); });
        c.names.push_back(name);
        c.separates.push_back(VerifyLpViolation(tab, cut));
        c.cuts.push_back(ToCanonical(cut, c.inst));
      } catch (const Error& e) {
        c.errors.push_back(name + ": " + e.what());
      }
    };
    add("gmi", 1, [](const CgfInput& in, const RationalVector& r) {
      return EvalGmi(in.f[0], r[0]);
    });
    add("cg", 1, [](const CgfInput& in, const RationalVector& r) {
      return EvalCg(in.f[0], r[0]);
    });
    const Rational mu1 = Ratio(rng.UniformInt(0, 100), 100);
    const Rational mu2 = Ratio(rng.UniformInt(0, 100), 100);
    add("one_row", 1, [&](const CgfInput& in, const RationalVector& r) {
      return OneDimCgf::FromMu(in.f[0], 2, 2, mu1, mu2).Evaluate(r[0]);
    });
    for (int k : {2, 3}) {
      const RationalVector mu = SampleSimplex(k, 2, kTau, rng.Next())[1];
      add("k_row" + std::to_string(k), k,
          [&](const CgfInput& in, const RationalVector& r) {
            return EvalPiKd(MultiDimCgf(in.f, mu, kTau), r);
          });
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

struct Shared {
  std::vector<CutCase> cases;
  std::vector<PointScan> scans;
};

Outcome CutSoundness(Shared* shared) {
  shared->scans.clear();
  shared->cases = BuildCutCases();
  Outcome out;
  int cuts = 0, invalid = 0, not_separating = 0, errors = 0;
  std::set<std::string> invalid_kinds;
  int64_t points = 0;
  for (const CutCase& c : shared->cases) {
    shared->scans.push_back(ScanFeasiblePoints(c.inst, c.cuts));
    const PointScan& scan = shared->scans.back();
    points += scan.point_count;
    errors += static_cast<int>(c.errors.size());
    for (size_t k = 0; k < c.cuts.size(); ++k) {
      ++cuts;
      if (scan.violators[k]) {
        ++invalid;
        invalid_kinds.insert(c.names[k]);
      }
      if (!c.separates[k]) ++not_separating;
    }
  }
  out.ok = invalid == 0 && not_separating == 0 && errors == 0;
  out.detail = " " + std::to_string(cuts) + " cuts over " +
               std::to_string(points) + " feasible points: " +
               std::to_string(invalid) + " invalid, " +
               std::to_string(not_separating) + " not separating, " +
               std::to_string(errors) + " construction errors";
  if (!invalid_kinds.empty()) {
    out.detail += " (invalid:";
    for (const auto& kind : invalid_kinds) out.detail += " " + kind;
    out.detail += ")";
  }
  return out;
}

Outcome SolverCorrectness(Shared* shared) {
  if (shared->cases.empty() || shared->scans.size() != shared->cases.size()) {
    CutSoundness(shared);
  }
  Outcome out;
  int solves = 0, plain_bad = 0, neutral_bad = 0, truncated = 0;
  for (size_t i = 0; i < shared->cases.size(); ++i) {
    const CutCase& c = shared->cases[i];
    const PointScan& scan = shared->scans[i];
    auto same = [](const TreeSizeResult& t, const BruteForceResult& b) {
      return t.infeasible == b.infeasible &&
             (t.infeasible || t.optimum == b.optimum);
    };
    const TreeSizeResult plain = SolveBnc(c.inst);
    ++solves;
    truncated += plain.truncated;
    if (!same(plain, scan.base)) ++plain_bad;
    for (size_t k = 0; k < c.cuts.size(); ++k) {
      const TreeSizeResult with =
          SolveBnc(c.inst, std::span<const CutCanonical>(&c.cuts[k], 1));
      ++solves;
      truncated += with.truncated;
      // Same optimum as the brute force with the cut and as the uncut ILP.
      if (!same(with, scan.with_cut[k]) || !same(with, scan.base)) {
        ++neutral_bad;
      }
    }
  }
  out.ok = plain_bad == 0 && neutral_bad == 0 && truncated == 0;
  out.detail = " " + std::to_string(solves) + " solves: " +
               std::to_string(plain_bad) + " uncut mismatches, " +
               std::to_string(neutral_bad) + " cut mismatches, " +
               std::to_string(truncated) + " truncated";
  return out;
}

Outcome IntersectionPoints() {
  Outcome out;
  SplitMix64 rng(kSeed + 6);
  int checked = 0, bad = 0;
  for (int t = 0; t < 20; ++t) {
    const Rational f = RandomFraction(rng, 1000);
    for (int p = 2; p <= 4; ++p) {
      for (int q = 2; q <= 4; ++q) {
        // mu in (0,1] moves both slopes strictly off the GMI corner.
        const OneDimCgf cgf = OneDimCgf::FromMu(
            f, p, q, Ratio(rng.UniformInt(1, 1000), 1000),
            Ratio(rng.UniformInt(1, 1000), 1000));
        for (const Rational& x : IntersectionBreakpoints(f, p, q)) {
          ++checked;
          if (cgf.Evaluate(x) != EvalGmi(f, x)) ++bad;
        }
      }
    }
  }
  out.ok = bad == 0;
  out.detail = " " + std::to_string(bad) + "/" + std::to_string(checked) +
               " breakpoints differ from GMI";
  return out;
}

Outcome PiecewiseAffinity() {
  Outcome out;
  SplitMix64 rng(kSeed + 7);
  int bad = 0, unresolved = 0;
  for (int t = 0; t < 100; ++t) {
    const Rational f = RandomFraction(rng, 100);
    const int p = static_cast<int>(rng.UniformInt(2, 4));
    const int q = static_cast<int>(rng.UniformInt(2, 4));
    const SlopeBox box = TruncateDomain(ValidDomain(f, p, q), 10);
    const auto [s1, s2] =
        MapMuToSlopes(Ratio(rng.UniformInt(1, 99), 100),
                      Ratio(rng.UniformInt(1, 99), 100), box);
    const Rational r = Ratio(rng.UniformInt(0, 9999), 10000);
    const bool along_s1 = t % 2 == 0;
    // Step inward so all three points stay in the domain.
    Rational eps = along_s1 ? (box.l1 - s1) / 4 : (box.u2 - s2) / 4;
    bool resolved = false;
    for (int halvings = 0; halvings < 60 && !resolved; ++halvings) {
      ActivePiece a, b, c;
      auto eval = [&](int step, ActivePiece* piece) {
        const Rational d = eps * step;
        const OneDimCgf cgf(f, p, q, along_s1 ? s1 + d : s1,
                            along_s1 ? s2 : s2 + d);
        return cgf.Evaluate(r, piece);
      };
      const Rational v0 = eval(0, &a), v1 = eval(1, &b), v2 = eval(2, &c);
      if (a == b && b == c) {
        resolved = true;
        if (v0 - 2 * v1 + v2 != 0) ++bad;
      } else {
        eps /= 2;
      }
    }
    if (!resolved) ++unresolved;
  }
  out.ok = bad == 0 && unresolved == 0;
  out.detail = " " + std::to_string(bad) +
               "/100 nonzero second differences, " +
               std::to_string(unresolved) + " without a one-region segment";
  return out;
}

ExperimentSpec DefaultKnapsackSpec() {
  ExperimentSpec spec;
  spec.generator.family = Family::kKnapsack;
  spec.generator.cols = 20;
  spec.generator.rows = 1;
  spec.train_count = 40;
  spec.test_count = 40;
  spec.strategy.kind = StrategyKind::kOneRow;
  spec.bnc.node_cap = kDefaultNodeCap;
  return spec;
}

std::string ReportBytes(const Report& report) {
  std::ostringstream out;
  WriteReportCsv(out, report);
  return out.str();
}

Outcome TreeSizeDirection(std::string* report_bytes) {
  Outcome out;
  const ExperimentSpec spec = DefaultKnapsackSpec();
  const Report report = RunExperiment(spec);
  *report_bytes = ReportBytes(report);
  const bool reduction = report.test_mean <= Ratio(9, 10) * report.gmi_test_mean;
  const bool best_below = report.best_per_instance_train <= report.train_mean;
  out.ok = reduction && best_below;
  out.detail = " test mean " + FormatDecimal(report.test_mean, 3) +
               " vs gmi " + FormatDecimal(report.gmi_test_mean, 3) +
               " (ratio " +
               FormatDecimal(report.gmi_test_mean == 0
                                 ? Rational(0)
                                 : report.test_mean / report.gmi_test_mean,
                             3) +
               ", need <= 0.9); best-per-instance " +
               FormatDecimal(report.best_per_instance_train, 3) +
               " <= erm train " + FormatDecimal(report.train_mean, 3) +
               "; selected mu = " + SerializeParameter(report.selected);
  return out;
}

Outcome Determinism(const std::string& first_bytes) {
  Outcome out;
  const std::string again = ReportBytes(RunExperiment(DefaultKnapsackSpec()));
  out.ok = !first_bytes.empty() && again == first_bytes;
  out.detail = " rerun report " + std::to_string(again.size()) + " bytes, " +
               (out.ok ? "identical" : "different");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria 1-9"};
  std::vector<int> only;
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);
  auto wanted = [&](int id) {
    return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
  };

  Shared shared;
  std::string report_bytes;
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "k-row evaluation vs oracle", 30, OracleEquivalence},
      {2, "GMI reductions", 10, GmiReductions},
      {3, "CGF validity suites", 60, ValiditySuites},
      {4, "cut soundness", 120, [&] { return CutSoundness(&shared); }},
      {5, "solver correctness", 300, [&] { return SolverCorrectness(&shared); }},
      {6, "intersection points", 5, IntersectionPoints},
      {7, "piecewise affinity", 5, PiecewiseAffinity},
      {8, "tree size direction", 900,
       [&] { return TreeSizeDirection(&report_bytes); }},
      {9, "determinism", 900,
       [&] {
         if (report_bytes.empty()) {
           report_bytes = ReportBytes(RunExperiment(DefaultKnapsackSpec()));
         }
         return Determinism(report_bytes);
       }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!wanted(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string(" aborted: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    failures += !pass;
    char timing[96];
    std::snprintf(timing, sizeof(timing), " [%.1fs, limit %.0fs%s]", seconds,
                  c.limit_seconds, in_time ? "" : ", over");
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " "
              << c.title << ":" << outcome.detail << timing << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
