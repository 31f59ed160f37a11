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

#ifndef CGFTUNE_ILP_H_
#define CGFTUNE_ILP_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cgftune/rational.h"

namespace cgftune {

// max c^T x  s.t.  A x <= b, x >= 0, x integer.
// A and b are held as rationals so that ValidateInstance can reject
// non-integral data read from a file; everything downstream requires them
// to be integral.
struct IlpInstance {
  int m = 0;
  int n = 0;
  std::vector<RationalVector> A;  // m rows of length n
  RationalVector b;
  RationalVector c;
  int64_t rho = 1;  // every feasible point lies in [0, rho]^n

  bool operator==(const IlpInstance&) const = default;
};

// An integer row  coeffs^T x <= rhs  appended to an instance (branching
// bound or cut).
struct LinearRow {
  std::vector<Integer> coeffs;
  Integer rhs;

  bool operator==(const LinearRow&) const = default;
};

// Clears denominators by the LCM so that the row stays integral; the
// inequality is unchanged because the multiplier is positive.
LinearRow IntegerRowFromRational(const RationalVector& coeffs,
                                 const Rational& rhs);

struct ValidationReport {
  // Per-coordinate LP maximum of x_j over {Ax <= b, x >= 0}; empty when the
  // feasible set is empty.
  RationalVector coordinate_max;
  bool structural = false;  // bounded by the nonnegative-matrix argument
  bool empty = false;
};

// Checks integrality of A, b and that the LP relaxation of the feasible set
// lies in [0, rho]^n. Throws Error(kNonIntegerData) or
// Error(kUnboundedFeasibleSet).
ValidationReport ValidateInstance(const IlpInstance& inst);

// Visit budget of the enumerators (partial assignments and last-coordinate
// segments), a few seconds of work.
inline constexpr int64_t kDefaultEnumerationBudget = 200'000'000;

// Same enumeration, grouped by the first n-1 coordinates: `visit(x, lo, hi)`
// gets every feasible point x with x[n-1] in [lo, hi], x[n-1] set to lo.
void ForEachFeasibleSegment(
    const IlpInstance& inst,
    const std::function<void(std::vector<int64_t>&, int64_t, int64_t)>& visit,
    int64_t max_visits = kDefaultEnumerationBudget);

// Calls `visit` on every integer point of {Ax <= b, x >= 0} (inside
// [0, rho]^n) in lexicographic order without storing them. Same pruning and
// budget as EnumerateFeasiblePoints.
void ForEachFeasiblePoint(
    const IlpInstance& inst,
    const std::function<void(const std::vector<int64_t>&)>& visit,
    int64_t max_visits = kDefaultEnumerationBudget);

// All integer points of {Ax <= b, x >= 0} (inside [0, rho]^n), in
// lexicographic order. Depth-first over coordinates with row-wise pruning;
// throws Error(kEnumerationTooLarge) once more than `max_visits` partial
// assignments have been tried, or when data does not fit 64-bit integers.
std::vector<std::vector<int64_t>> EnumerateFeasiblePoints(
    const IlpInstance& inst, int64_t max_visits = kDefaultEnumerationBudget);

// Line-oriented text format:
//   m n rho
//   <m rows of A>
//   <b>
//   <c>
// Entries are integers or "p/q". Throws Error(kParseError).
IlpInstance ReadInstance(std::istream& in);
IlpInstance ReadInstanceFile(const std::string& path);
void WriteInstance(std::ostream& out, const IlpInstance& inst);
void WriteInstanceFile(const std::string& path, const IlpInstance& inst);

}  // namespace cgftune

#endif  // CGFTUNE_ILP_H_
