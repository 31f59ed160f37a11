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

#include "cgftune/rational.h"

#include <gtest/gtest.h>

#include "cgftune/error.h"
#include "cgftune/rng.h"

namespace cgftune {
namespace {

TEST(RationalTest, RatioCanonicalizes) {
  const Rational r = Ratio(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
}

TEST(RationalTest, FloorCeilFrac) {
  EXPECT_EQ(Floor(Ratio(-3, 2)), -2);
  EXPECT_EQ(Ceil(Ratio(-3, 2)), -1);
  EXPECT_EQ(FracPart(Ratio(-3, 2)), Ratio(1, 2));
  EXPECT_EQ(FracPart(Rational(4)), 0);
  EXPECT_TRUE(IsInteger(Ratio(8, 4)));
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(ParseRational("3/6"), Ratio(1, 2));
  EXPECT_EQ(ParseRational("-7"), Rational(-7));
  EXPECT_EQ(ToString(Ratio(-2, 4)), "-1/2");
  EXPECT_EQ(ToString(Rational(5)), "5");
  for (const char* bad : {"", "1/0", "x", "1/2/3", "1.5"}) {
    try {
      ParseRational(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError);
    }
  }
}

TEST(RationalTest, FormatDecimalRoundsHalfAway) {
  EXPECT_EQ(FormatDecimal(Ratio(1, 8), 2), "0.13");
  EXPECT_EQ(FormatDecimal(Ratio(-1, 8), 2), "-0.13");
  EXPECT_EQ(FormatDecimal(Ratio(2, 3), 6), "0.666667");
  EXPECT_EQ(FormatDecimal(Rational(12), 1), "12.0");
}

TEST(RationalTest, DenominatorLcm) {
  const RationalVector v{Ratio(1, 4), Ratio(5, 6), Rational(3)};
  EXPECT_EQ(DenominatorLcm(v), 12);
  EXPECT_EQ(DenominatorLcm({}), 1);
}

TEST(SplitMix64Test, KnownSequenceAndDeterminism) {
  SplitMix64 a(0);
  EXPECT_EQ(a.Next(), 0xE220A8397B1DCDAFULL);
  SplitMix64 b(42), c(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(b.Next(), c.Next());
}

TEST(SplitMix64Test, UniformIntStaysInRange) {
  SplitMix64 rng(7);
  bool hit_low = false, hit_high = false;
  for (int i = 0; i < 5000; ++i) {
    const int64_t v = rng.UniformInt(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    hit_low = hit_low || v == -3;
    hit_high = hit_high || v == 3;
  }
  EXPECT_TRUE(hit_low && hit_high);
}

}  // namespace
}  // namespace cgftune
