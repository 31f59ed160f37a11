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

#include "cgftune/branch_and_cut.h"

#include <gtest/gtest.h>

#include "cgftune/cgf_one_dim.h"
#include "cgftune/error.h"
#include "cgftune/instance_gen.h"
#include "cgftune/rng.h"

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

TEST(SolveBncTest, ToyWithoutCut) {
  const TreeSizeResult result = SolveBnc(Toy());
  EXPECT_EQ(result.nodes, 3);
  EXPECT_FALSE(result.truncated);
  EXPECT_FALSE(result.infeasible);
  EXPECT_EQ(result.optimum, 1);
  EXPECT_EQ(result.incumbent, std::vector<Integer>{1});
}

TEST(SolveBncTest, ToyWithCut) {
  const CutCanonical cut{{Rational(1)}, Rational(1)};
  const TreeSizeResult result = SolveBnc(Toy(), {&cut, 1});
  EXPECT_EQ(result.nodes, 1);
  EXPECT_EQ(result.optimum, 1);
}

TEST(SolveBncTest, NodeCap) {
  BnCConfig config;
  config.node_cap = 1;
  const TreeSizeResult result = SolveBnc(Toy(), {}, config);
  EXPECT_EQ(result.nodes, 1);
  EXPECT_TRUE(result.truncated);
}

TEST(SolveBncTest, InfeasibleIlp) {
  // 2x = 1 has no integer solution: 2x <= 1 and -2x <= -1.
  IlpInstance inst = Toy();
  inst.m = 2;
  inst.A = {{Rational(2)}, {Rational(-2)}};
  inst.b = {Rational(1), Rational(-1)};
  const TreeSizeResult result = SolveBnc(inst);
  EXPECT_TRUE(result.infeasible);
  EXPECT_FALSE(result.truncated);
  EXPECT_EQ(result.nodes, 3);
  EXPECT_TRUE(SolveIlpBruteforce(inst).infeasible);
}

TEST(BruteForceTest, Examples) {
  EXPECT_EQ(SolveIlpBruteforce(Toy()).optimum, 1);
  IlpInstance inst = Toy();
  inst.b = {Rational(-1)};
  EXPECT_TRUE(SolveIlpBruteforce(inst).infeasible);
}

TEST(SolveBncTest, MatchesBruteForceAndIsCutNeutral) {
  SplitMix64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const IlpInstance inst = t % 2 == 0 ? GenKnapsack(7, 1, rng.Next(), 25)
                                        : GenPacking(3, 6, rng.Next());
    const auto points = EnumerateFeasiblePoints(inst);
    const BruteForceResult brute = SolveIlpBruteforce(inst, points);
    const TreeSizeResult plain = SolveBnc(inst);
    ASSERT_FALSE(plain.truncated);
    ASSERT_EQ(plain.infeasible, brute.infeasible);
    ASSERT_EQ(plain.optimum, brute.optimum);

    const SimplexTableau tab = ExtractTableau(inst, SolveLp(inst));
    CgfInput input;
    try {
      input = SelectRows(tab, 1);
    } catch (const Error&) {
      continue;
    }
    const OneDimCgf cgf = OneDimCgf::FromMu(input.f[0], 2, 2, Ratio(1, 2),
                                            Ratio(3, 10));
    const CutCanonical cut = ToCanonical(
        CutFromCgf(input,
                   [&](const RationalVector& r) { return cgf.Evaluate(r[0]); }),
        inst);
    const TreeSizeResult with_cut = SolveBnc(inst, {&cut, 1});
    EXPECT_EQ(with_cut.optimum, plain.optimum);
    EXPECT_EQ(SolveIlpBruteforce(inst, points, {&cut, 1}).optimum,
              brute.optimum);
  }
}

TEST(SolveBncTest, DeterministicAndMonotoneInCap) {
  const IlpInstance inst = GenKnapsack(20, 1, 5);
  const TreeSizeResult a = SolveBnc(inst);
  EXPECT_EQ(a, SolveBnc(inst));
  ASSERT_FALSE(a.truncated);
  for (int64_t cap : {int64_t{1}, a.nodes / 2, a.nodes, a.nodes + 10}) {
    BnCConfig config;
    config.node_cap = std::max<int64_t>(cap, 1);
    const TreeSizeResult capped = SolveBnc(inst, {}, config);
    EXPECT_LE(capped.nodes, a.nodes);
    EXPECT_EQ(capped.truncated, capped.nodes < a.nodes);
    if (!capped.truncated) EXPECT_EQ(capped, a);
    if (capped.truncated) EXPECT_EQ(capped.nodes, config.node_cap);
  }
}

TEST(FormatTreeSizeTest, Text) {
  EXPECT_EQ(FormatTreeSize(SolveBnc(Toy())), "nodes=3 truncated=0 optimum=1");
}

}  // namespace
}  // namespace cgftune
