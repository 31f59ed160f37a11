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

// Exact arithmetic helpers on top of GMP. Every Rational is kept canonical
// (lowest terms, positive denominator); gmpxx arithmetic preserves that, and
// the parsing entry points here canonicalize explicitly.

#ifndef CGFTUNE_RATIONAL_H_
#define CGFTUNE_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cgftune {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// num/den in lowest terms; den must be nonzero. Prefer this to the raw
// two-argument mpq_class constructor, which does not canonicalize.
Rational Ratio(const Integer& num, const Integer& den);

Integer Floor(const Rational& x);
Integer Ceil(const Rational& x);

// [x] = x - floor(x), always in [0, 1).
Rational FracPart(const Rational& x);

inline bool IsInteger(const Rational& x) { return x.get_den() == 1; }

// Least common multiple of all denominators (1 for an empty span).
Integer DenominatorLcm(std::span<const Rational> values);

// "p/q" or "p"; throws Error(kParseError) on malformed text or q == 0.
Rational ParseRational(std::string_view text);

// Canonical text form, "p/q" or "p" when integral.
std::string ToString(const Rational& x);

// Decimal rendering with exactly `digits` fractional digits, rounded half
// away from zero. The rounding is done on the exact value.
std::string FormatDecimal(const Rational& x, int digits);

std::string JoinRationals(std::span<const Rational> values,
                          std::string_view separator);

}  // namespace cgftune

#endif  // CGFTUNE_RATIONAL_H_
