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

#include <utility>
#include <vector>

#include "cgftune/error.h"
#include "cgftune/lp_simplex.h"

namespace cgftune {
namespace {

constexpr int64_t kMaxDualPivots = 100000;

// Bounded-variable tableau over y = [x | slacks]. Branching changes bounds
// of structural variables in place; a child starts from its parent's
// optimal basis and is repaired by dual simplex.
struct NodeLp {
  std::vector<RationalVector> T;  // rows x vars, unit columns for basics
  RationalVector d;               // reduced costs, zero on basics
  RationalVector val;             // current value of every variable
  std::vector<int> basic;         // variable of each row
  std::vector<int> row_of;        // -1 when nonbasic
  std::vector<char> at_upper;
  std::vector<Integer> lo, hi;
  std::vector<char> has_hi;
};

NodeLp RootNode(const SimplexTableau& tab, const IlpInstance& inst) {
  const int rows = tab.num_rows();
  const int vars = tab.num_vars();
  NodeLp lp;
  lp.T.assign(rows, RationalVector(vars, Rational(0)));
  lp.d.assign(vars, Rational(0));
  lp.val.assign(vars, Rational(0));
  lp.basic = tab.basic_var_of_row;
  lp.row_of.assign(vars, -1);
  lp.at_upper.assign(vars, 0);
  lp.lo.assign(vars, Integer(0));
  lp.hi.assign(vars, Integer(0));
  lp.has_hi.assign(vars, 0);
  for (int j = 0; j < inst.n; ++j) lp.d[j] = inst.c[j];
  for (int i = 0; i < rows; ++i) {
    const int b = lp.basic[i];
    lp.row_of[b] = i;
    lp.T[i][b] = 1;
    for (size_t k = 0; k < tab.nonbasis.size(); ++k) {
      lp.T[i][tab.nonbasis[k]] = tab.coeffs[i][k];
    }
    lp.val[b] = tab.rhs[i];
  }
  for (int i = 0; i < rows; ++i) {
    const int b = lp.basic[i];
    if (b >= inst.n || inst.c[b] == 0) continue;
    for (int j = 0; j < vars; ++j) lp.d[j] -= inst.c[b] * lp.T[i][j];
  }
  return lp;
}

bool Violates(const NodeLp& lp, int v, bool* above) {
  *above = lp.has_hi[v] && lp.val[v] > lp.hi[v];
  return *above || lp.val[v] < lp.lo[v];
}

// Dual simplex, smallest-index rule for both choices. False if infeasible.
bool Reoptimize(NodeLp& lp) {
  const int rows = static_cast<int>(lp.basic.size());
  const int vars = static_cast<int>(lp.val.size());
  Rational ratio, best, delta;
  std::vector<int> support;
  for (int64_t pivots = 0;; ++pivots) {
    if (pivots == kMaxDualPivots) {
      throw Error(ErrorCode::kPivotLimitExceeded, "node dual simplex");
    }
    int r = -1;
    bool decrease = false;
    for (int i = 0; i < rows; ++i) {
      bool above = false;
      if (Violates(lp, lp.basic[i], &above) &&
          (r < 0 || lp.basic[i] < lp.basic[r])) {
        r = i;
        decrease = above;
      }
    }
    if (r < 0) return true;
    const RationalVector& row = lp.T[r];
    int e = -1;
    for (int j = 0; j < vars; ++j) {
      if (lp.row_of[j] >= 0 || row[j] == 0) continue;
      if (lp.has_hi[j] && lp.lo[j] == lp.hi[j]) continue;
      const bool positive = row[j] > 0;
      if (decrease != (lp.at_upper[j] ? !positive : positive)) continue;
      ratio = abs(lp.d[j] / row[j]);
      if (e < 0 || ratio < best) {
        e = j;
        best = ratio;
      }
    }
    if (e < 0) return false;

    const int v = lp.basic[r];
    const Integer& bound = decrease ? lp.hi[v] : lp.lo[v];
    delta = (lp.val[v] - bound) / row[e];
    for (int i = 0; i < rows; ++i) {
      if (lp.T[i][e] != 0) lp.val[lp.basic[i]] -= lp.T[i][e] * delta;
    }
    lp.val[e] += delta;
    lp.val[v] = bound;

    const Rational pivot = row[e];
    support.clear();
    for (int j = 0; j < vars; ++j) {
      if (lp.T[r][j] != 0) {
        lp.T[r][j] /= pivot;
        support.push_back(j);
      }
    }
    auto eliminate = [&](RationalVector& target) {
      if (target[e] == 0) return;
      const Rational factor = target[e];
      for (int j : support) target[j] -= factor * lp.T[r][j];
    };
    for (int i = 0; i < rows; ++i) {
      if (i != r) eliminate(lp.T[i]);
    }
    eliminate(lp.d);
    lp.row_of[v] = -1;
    lp.at_upper[v] = decrease;
    lp.row_of[e] = r;
    lp.at_upper[e] = 0;
    lp.basic[r] = e;
  }
}

}  // namespace

TreeSizeResult SolveBnc(const IlpInstance& inst,
                        std::span<const CutCanonical> root_cuts,
                        const BnCConfig& config) {
  if (config.node_cap < 1) {
    throw Error(ErrorCode::kInvalidArgument, "node cap must be >= 1");
  }
  std::vector<LinearRow> cut_rows;
  for (const CutCanonical& cut : root_cuts) {
    if (static_cast<int>(cut.alpha.size()) != inst.n) {
      throw Error(ErrorCode::kInvalidArgument, "cut has the wrong dimension");
    }
    cut_rows.push_back(IntegerRowFromRational(cut.alpha, cut.beta));
  }

  TreeSizeResult result;
  result.infeasible = true;
  const LpSolution root = SolveLp(inst, cut_rows);
  if (root.status == LpStatus::kUnbounded) {
    throw Error(ErrorCode::kUnboundedFeasibleSet, "root LP is unbounded");
  }
  if (root.status == LpStatus::kInfeasible) {
    result.nodes = 1;
    return result;
  }
  std::vector<NodeLp> stack;
  stack.push_back(RootNode(ExtractTableau(inst, root, cut_rows), inst));
  const Rational half(1, 2);
  Rational objective, frac, gap, best_gap;
  while (!stack.empty()) {
    if (result.nodes == config.node_cap) {
      result.truncated = true;
      break;
    }
    NodeLp node = std::move(stack.back());
    stack.pop_back();
    const bool feasible = Reoptimize(node);
    ++result.nodes;
    if (!feasible) continue;
    objective = 0;
    for (int j = 0; j < inst.n; ++j) {
      if (inst.c[j] != 0) objective += inst.c[j] * node.val[j];
    }
    if (!result.infeasible && objective <= result.optimum) continue;

    int branch = -1;
    for (int j = 0; j < inst.n; ++j) {
      frac = FracPart(node.val[j]);
      if (frac == 0) continue;
      gap = abs(frac - half);
      if (branch < 0 || gap < best_gap) {
        branch = j;
        best_gap = gap;
      }
    }
    if (branch < 0) {
      result.infeasible = false;
      result.optimum = objective;
      result.incumbent.clear();
      for (int j = 0; j < inst.n; ++j) {
        result.incumbent.push_back(node.val[j].get_num());
      }
      continue;
    }

    // floor(v) is below any existing upper bound and floor(v) + 1 above any
    // lower bound, so plain assignment keeps the tightest pair.
    const Integer down = Floor(node.val[branch]);
    NodeLp up_child = node;
    up_child.lo[branch] = down + 1;
    node.hi[branch] = down;
    node.has_hi[branch] = 1;
    stack.push_back(std::move(up_child));
    stack.push_back(std::move(node));
  }
  return result;
}

BruteForceResult SolveIlpBruteforce(
    const IlpInstance& inst, const std::vector<std::vector<int64_t>>& points,
    std::span<const CutCanonical> cuts) {
  std::vector<LinearRow> cut_rows;
  for (const CutCanonical& cut : cuts) {
    cut_rows.push_back(IntegerRowFromRational(cut.alpha, cut.beta));
  }
  BruteForceResult result;
  Integer lhs;
  Rational value;
  for (const auto& x : points) {
    bool ok = true;
    for (const LinearRow& row : cut_rows) {
      lhs = 0;
      for (size_t j = 0; j < x.size(); ++j) {
        if (x[j] != 0) lhs += row.coeffs[j] * static_cast<long>(x[j]);
      }
      if (lhs > row.rhs) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    value = 0;
    for (size_t j = 0; j < x.size(); ++j) {
      if (x[j] != 0) value += inst.c[j] * static_cast<long>(x[j]);
    }
    if (result.infeasible || value > result.optimum) {
      result.infeasible = false;
      result.optimum = value;
      result.argmax = x;
    }
  }
  return result;
}

BruteForceResult SolveIlpBruteforce(const IlpInstance& inst,
                                    std::span<const CutCanonical> cuts) {
  if (cuts.empty()) return ScanFeasiblePoints(inst, {}).base;
  // All cuts at once.
  std::vector<std::vector<int64_t>> points;
  ForEachFeasiblePoint(inst, [&](const std::vector<int64_t>& x) {
    points.push_back(x);
  });
  return SolveIlpBruteforce(inst, points, cuts);
}

std::string FormatTreeSize(const TreeSizeResult& result) {
  return "nodes=" + std::to_string(result.nodes) +
         " truncated=" + (result.truncated ? "1" : "0") + " optimum=" +
         (result.infeasible ? std::string("infeasible")
                            : ToString(result.optimum));
}

}  // namespace cgftune
