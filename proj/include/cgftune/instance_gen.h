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

// Seeded instance generators: Chvatal-style (multiple) knapsack and packing.

#ifndef CGFTUNE_INSTANCE_GEN_H_
#define CGFTUNE_INSTANCE_GEN_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cgftune/ilp.h"

namespace cgftune {

inline constexpr int kDefaultKnapsackScale = 1000;

enum class Family { kKnapsack, kPacking };

struct PackingRanges {
  int64_t a_max = 5;         // A_ij in {0..a_max}
  int64_t b_low_per_n = 9;   // b_i in {b_low_per_n * n .. b_high_per_n * n}
  int64_t b_high_per_n = 10;
  int64_t c_max = 10;        // c_j in {1..c_max}
};

struct GeneratorSpec {
  Family family = Family::kKnapsack;
  int rows = 1;   // K for knapsack, m for packing
  int cols = 20;  // N for knapsack, n for packing
  int64_t scale = kDefaultKnapsackScale;
  PackingRanges packing;
};

// K knapsack rows over N items, weights uniform in {1..scale},
// b_j = floor(sum_i a^j_i / 2), c = a^1, rho = max_j b_j.
IlpInstance GenKnapsack(int N, int K, uint64_t seed,
                        int64_t scale = kDefaultKnapsackScale);

// A_ij uniform in {0..5} with all-zero columns redrawn, b_i uniform in
// {9n..10n}, c_j uniform in {1..10}, rho = max_i b_i.
IlpInstance GenPacking(int m, int n, uint64_t seed,
                       const PackingRanges& ranges = {});

IlpInstance Generate(const GeneratorSpec& spec, uint64_t seed);

// "knapsack" / "packing"; ParseFamily throws Error(kParseError).
std::string FamilyName(Family family);
Family ParseFamily(const std::string& text);

// "NxK" for knapsack, "mxn" for packing (e.g. "20x1", "4x8"); the family
// must be set before parsing. Throws Error(kParseError).
std::string ShapeText(const GeneratorSpec& spec);
void ParseShape(const std::string& text, GeneratorSpec* spec);

struct ManifestEntry {
  std::string file;
  uint64_t seed = 0;
  std::string family;
  std::string shape;
};

// CSV with header "file,seed,family,shape".
void WriteManifest(std::ostream& out, const std::vector<ManifestEntry>& rows);

}  // namespace cgftune

#endif  // CGFTUNE_INSTANCE_GEN_H_
