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

// From CGF values on tableau columns to an inequality on x.
//
// A CGF pi applied to the rows of  y_B + R y_N = b~  gives the standard-form
// cut  sum_j pi(r^j) y_{N_j} >= 1. Substituting the slacks s = b - A x turns
// it into  alpha^T x <= beta.

#ifndef CGFTUNE_CUT_PIPELINE_H_
#define CGFTUNE_CUT_PIPELINE_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "cgftune/ilp.h"
#include "cgftune/lp_simplex.h"
#include "cgftune/rational.h"

namespace cgftune {

// coeffs^T y >= 1 over y = [x | s], zero on basic variables.
struct CutStandardForm {
  RationalVector coeffs;
};

// alpha^T x <= beta.
struct CutCanonical {
  RationalVector alpha;
  Rational beta;

  bool operator==(const CutCanonical&) const = default;
};

// values[j] = pi(r^j) for the j-th nonbasic column of `input`. Throws
// Error(kNegativeCoefficient) on a negative value and Error(kInfeasibleCut)
// when every value is zero.
CutStandardForm CutFromValues(const CgfInput& input,
                              const RationalVector& values);

// Evaluates `pi` on every column of `input` and builds the cut.
CutStandardForm CutFromCgf(
    const CgfInput& input,
    const std::function<Rational(const RationalVector&)>& pi);

// alpha = A^T a_s - a_x, beta = b^T a_s - 1. The cut must be indexed over
// [x | s] with one slack per row of `inst`.
CutCanonical ToCanonical(const CutStandardForm& cut, const IlpInstance& inst);

// Exhaustive maximum of c^T x; argmax is the lexicographically first
// maximizer.
struct BruteForceResult {
  bool infeasible = true;
  Rational optimum;
  std::vector<int64_t> argmax;
};

// One enumeration pass over the feasible integer points of `inst` that
// checks every cut and solves the ILP with no cut and with each cut alone.
struct PointScan {
  int64_t point_count = 0;
  // First violating point per cut.
  std::vector<std::optional<std::vector<int64_t>>> violators;
  BruteForceResult base;
  std::vector<BruteForceResult> with_cut;
};

// Throws Error(kEnumerationTooLarge).
PointScan ScanFeasiblePoints(const IlpInstance& inst,
                             std::span<const CutCanonical> cuts,
                             int64_t max_visits = kDefaultEnumerationBudget);

// First point of `points` violating the cut, if any.
std::optional<std::vector<int64_t>> FindCutViolator(
    const std::vector<std::vector<int64_t>>& points, const CutCanonical& cut);

// Enumerates the feasible integer points of `inst` and returns the first one
// that violates the cut. Throws Error(kEnumerationTooLarge).
std::optional<std::vector<int64_t>> VerifyCutValid(const IlpInstance& inst,
                                                   const CutCanonical& cut);

// True iff the LP optimum of `tab` (nonbasics at zero) violates the cut.
// Throws Error(kCutContractViolation) if the cut puts weight on a basic
// variable.
bool VerifyLpViolation(const SimplexTableau& tab, const CutStandardForm& cut);

// One CSV row "alpha_1,...,alpha_n,beta" in exact rational text.
void WriteCutCsv(std::ostream& out, const CutCanonical& cut);
CutCanonical ReadCutCsv(std::istream& in);

}  // namespace cgftune

#endif  // CGFTUNE_CUT_PIPELINE_H_
