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

// Deterministic LP-based branch and bound with optional root cuts.
//
// Node order is depth first with the floor child explored first. Every node
// whose LP is solved counts toward the tree size, including the root and
// infeasible or pruned leaves.

#ifndef CGFTUNE_BRANCH_AND_CUT_H_
#define CGFTUNE_BRANCH_AND_CUT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgftune/cut_pipeline.h"
#include "cgftune/ilp.h"

namespace cgftune {

inline constexpr int64_t kDefaultNodeCap = 1'000'000;

struct BnCConfig {
  int64_t node_cap = kDefaultNodeCap;  // B
};

struct TreeSizeResult {
  int64_t nodes = 0;
  bool truncated = false;
  bool infeasible = false;  // no incumbent found (the ILP is infeasible
                            // whenever the run was not truncated)
  Rational optimum;         // meaningful when !infeasible
  std::vector<Integer> incumbent;

  bool operator==(const TreeSizeResult&) const = default;
};

// Appends the cuts as rows and branches on the most fractional variable
// (ties to the lowest index), x_j <= floor(v) before x_j >= ceil(v). Bounds
// are appended after the cuts, one row per bounded variable and side.
TreeSizeResult SolveBnc(const IlpInstance& inst,
                        std::span<const CutCanonical> root_cuts = {},
                        const BnCConfig& config = {});

// Exhaustive maximum of c^T x over the enumerated feasible points that also
// satisfy every cut. Throws Error(kEnumerationTooLarge).
BruteForceResult SolveIlpBruteforce(const IlpInstance& inst,
                                    std::span<const CutCanonical> cuts = {});
BruteForceResult SolveIlpBruteforce(
    const IlpInstance& inst, const std::vector<std::vector<int64_t>>& points,
    std::span<const CutCanonical> cuts = {});

// "nodes=<n> truncated=<0|1> optimum=<p/q|infeasible>"
std::string FormatTreeSize(const TreeSizeResult& result);

}  // namespace cgftune

#endif  // CGFTUNE_BRANCH_AND_CUT_H_
