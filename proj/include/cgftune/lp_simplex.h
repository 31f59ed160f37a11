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

// Exact LP relaxation solver and simplex-tableau access.
//
// Variables are indexed as y = [x_1..x_n | s_1..s_R] where R counts the
// instance rows followed by any appended rows, each with its own slack.
// All indices in this header are 0-based.

#ifndef CGFTUNE_LP_SIMPLEX_H_
#define CGFTUNE_LP_SIMPLEX_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cgftune/ilp.h"
#include "cgftune/rational.h"

namespace cgftune {

// Integral constraint system  G x <= h, x >= 0  with objective max c^T x.
struct ConstraintSystem {
  int num_structural = 0;
  std::vector<std::vector<Integer>> G;
  std::vector<Integer> h;
  RationalVector c;

  int num_rows() const { return static_cast<int>(G.size()); }
  int num_vars() const { return num_structural + num_rows(); }
};

// Instance rows followed by `extra_rows`. Throws Error(kNonIntegerData) if
// A or b has a fractional entry.
ConstraintSystem BuildConstraintSystem(const IlpInstance& inst,
                                       std::span<const LinearRow> extra_rows);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<int> basis;  // ascending variable indices, one per row
  Rational objective;
  RationalVector x;  // structural part
  RationalVector y;  // all variables, slacks included
  int64_t pivots = 0;
};

struct LpOptions {
  // Exceeding this throws Error(kPivotLimitExceeded); Bland's rule cannot
  // cycle, so hitting it indicates a bug.
  int64_t max_pivots = 100000;
};

// Two-phase primal simplex with Bland's rule in fraction-free integer
// arithmetic. Infeasible/unbounded are reported through the status.
LpSolution SolveLp(const ConstraintSystem& system, const LpOptions& options = {});
LpSolution SolveLp(const IlpInstance& inst,
                   std::span<const LinearRow> extra_rows = {},
                   const LpOptions& options = {});

// y_B + coeffs * y_N = rhs for the basis of an optimal solution.
struct SimplexTableau {
  int num_structural = 0;
  std::vector<int> basic_var_of_row;  // ascending
  std::vector<int> nonbasis;          // ascending
  std::vector<RationalVector> coeffs;  // rows x |nonbasis|
  RationalVector rhs;

  int num_rows() const { return static_cast<int>(rhs.size()); }
  int num_vars() const {
    return static_cast<int>(basic_var_of_row.size() + nonbasis.size());
  }
};

// Recomputes A_B^{-1} A_N and A_B^{-1} h from the basis alone by exact
// Gauss-Jordan elimination. Throws Error(kSingularBasis) or
// Error(kInvalidArgument) when `sol` is not optimal.
SimplexTableau ExtractTableau(const ConstraintSystem& system,
                              const LpSolution& sol);
SimplexTableau ExtractTableau(const IlpInstance& inst, const LpSolution& sol,
                              std::span<const LinearRow> extra_rows = {});

// The k-row system  z + sum_i r^i y_{N_i} = f  that a cut generating
// function consumes.
struct CgfInput {
  int k = 0;
  std::vector<int> rows;                // selected tableau rows
  std::vector<RationalVector> columns;  // one k-vector per nonbasic variable
  RationalVector f;                     // fractional parts of selected rhs
  std::vector<int> nonbasic_ids;
  int num_vars = 0;
};

// First k tableau rows (in row order) whose rhs is fractional. Throws
// Error(kInsufficientFractionalRows) when fewer exist.
CgfInput SelectRows(const SimplexTableau& tab, int k);

}  // namespace cgftune

#endif  // CGFTUNE_LP_SIMPLEX_H_
