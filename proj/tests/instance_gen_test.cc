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

#include "cgftune/instance_gen.h"

#include <gtest/gtest.h>

#include <sstream>

#include "cgftune/error.h"
#include "cgftune/lp_simplex.h"

namespace cgftune {
namespace {

TEST(GenKnapsackTest, Structure) {
  const IlpInstance inst = GenKnapsack(20, 1, 0);
  ASSERT_EQ(inst.m, 1);
  ASSERT_EQ(inst.n, 20);
  Rational total = 0;
  for (const Rational& a : inst.A[0]) {
    EXPECT_GE(a, 1);
    EXPECT_LE(a, 1000);
    total += a;
  }
  EXPECT_EQ(inst.b[0], Floor(total / 2));
  EXPECT_EQ(inst.c, inst.A[0]);
  EXPECT_EQ(inst.rho, inst.b[0].get_num().get_si());
  EXPECT_NO_THROW(ValidateInstance(inst));
  EXPECT_EQ(inst, GenKnapsack(20, 1, 0));
  EXPECT_NE(inst, GenKnapsack(20, 1, 1));
}

TEST(GenKnapsackTest, MultipleKnapsacks) {
  const IlpInstance inst = GenKnapsack(10, 3, 4, 50);
  ASSERT_EQ(inst.m, 3);
  EXPECT_EQ(inst.c, inst.A[0]);
  Rational rho = 0;
  for (const Rational& b : inst.b) rho = std::max(rho, b);
  EXPECT_EQ(inst.rho, rho.get_num().get_si());
  const LpSolution sol = SolveLp(inst);
  EXPECT_GT(sol.objective, 0);
}

TEST(GenPackingTest, Ranges) {
  const IlpInstance inst = GenPacking(15, 30, 9);
  ASSERT_EQ(inst.m, 15);
  ASSERT_EQ(inst.n, 30);
  for (int j = 0; j < inst.n; ++j) {
    bool positive = false;
    for (int i = 0; i < inst.m; ++i) {
      EXPECT_GE(inst.A[i][j], 0);
      EXPECT_LE(inst.A[i][j], 5);
      positive = positive || inst.A[i][j] > 0;
    }
    EXPECT_TRUE(positive);
    EXPECT_GE(inst.c[j], 1);
    EXPECT_LE(inst.c[j], 10);
  }
  for (const Rational& b : inst.b) {
    EXPECT_GE(b, 270);
    EXPECT_LE(b, 300);
  }
  EXPECT_NO_THROW(ValidateInstance(inst));
  EXPECT_EQ(inst, GenPacking(15, 30, 9));
}

TEST(GenPackingTest, MostlyFractionalRoots) {
  int fractional = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const IlpInstance inst = GenPacking(4, 8, seed);
    const LpSolution sol = SolveLp(inst);
    for (const Rational& v : sol.x) {
      if (!IsInteger(v)) {
        ++fractional;
        break;
      }
    }
  }
  EXPECT_GE(fractional, 50);
}

TEST(GeneratorSpecTest, ShapeText) {
  GeneratorSpec spec;
  spec.family = Family::kKnapsack;
  ParseShape("20x1", &spec);
  EXPECT_EQ(spec.cols, 20);
  EXPECT_EQ(spec.rows, 1);
  EXPECT_EQ(ShapeText(spec), "20x1");
  spec.family = Family::kPacking;
  ParseShape("4x8", &spec);
  EXPECT_EQ(spec.rows, 4);
  EXPECT_EQ(spec.cols, 8);
  EXPECT_THROW(ParseShape("4by8", &spec), Error);
  EXPECT_THROW(ParseShape("0x8", &spec), Error);
  EXPECT_THROW(ParseFamily("tsp"), Error);
}

TEST(ManifestTest, Csv) {
  std::ostringstream out;
  WriteManifest(out, {{"a.txt", 7, "packing", "4x8"}});
  EXPECT_EQ(out.str(), "file,seed,family,shape\na.txt,7,packing,4x8\n");
}

}  // namespace
}  // namespace cgftune
