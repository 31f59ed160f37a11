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

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "cgftune/error.h"
#include "cgftune/rng.h"

namespace cgftune {

IlpInstance GenKnapsack(int N, int K, uint64_t seed, int64_t scale) {
  if (N < 1 || K < 1 || scale < 1) {
    throw Error(ErrorCode::kInvalidArgument, "knapsack needs N, K, scale >= 1");
  }
  SplitMix64 rng(seed);
  IlpInstance inst;
  inst.m = K;
  inst.n = N;
  int64_t rho = 1;
  for (int j = 0; j < K; ++j) {
    RationalVector row(N);
    int64_t total = 0;
    for (int i = 0; i < N; ++i) {
      const int64_t w = rng.UniformInt(1, scale);
      row[i] = w;
      total += w;
    }
    inst.A.push_back(std::move(row));
    inst.b.push_back(Rational(total / 2));
    rho = std::max(rho, total / 2);
  }
  inst.c = inst.A[0];
  inst.rho = rho;
  return inst;
}

IlpInstance GenPacking(int m, int n, uint64_t seed,
                       const PackingRanges& ranges) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "packing needs m, n >= 1");
  }
  if (ranges.a_max < 1 || ranges.c_max < 1 || ranges.b_low_per_n < 0 ||
      ranges.b_high_per_n < ranges.b_low_per_n) {
    throw Error(ErrorCode::kInvalidArgument, "bad packing ranges");
  }
  SplitMix64 rng(seed);
  IlpInstance inst;
  inst.m = m;
  inst.n = n;
  inst.A.assign(m, RationalVector(n));
  for (int j = 0; j < n; ++j) {
    bool positive = false;
    while (!positive) {
      for (int i = 0; i < m; ++i) {
        const int64_t v = rng.UniformInt(0, ranges.a_max);
        inst.A[i][j] = v;
        positive = positive || v > 0;
      }
    }
  }
  int64_t rho = 1;
  for (int i = 0; i < m; ++i) {
    const int64_t v = rng.UniformInt(ranges.b_low_per_n * n,
                                     ranges.b_high_per_n * n);
    inst.b.push_back(Rational(v));
    rho = std::max(rho, v);
  }
  for (int j = 0; j < n; ++j) {
    inst.c.push_back(Rational(rng.UniformInt(1, ranges.c_max)));
  }
  inst.rho = rho;
  return inst;
}

IlpInstance Generate(const GeneratorSpec& spec, uint64_t seed) {
  if (spec.family == Family::kKnapsack) {
    return GenKnapsack(spec.cols, spec.rows, seed, spec.scale);
  }
  return GenPacking(spec.rows, spec.cols, seed, spec.packing);
}

std::string FamilyName(Family family) {
  return family == Family::kKnapsack ? "knapsack" : "packing";
}

Family ParseFamily(const std::string& text) {
  if (text == "knapsack") return Family::kKnapsack;
  if (text == "packing") return Family::kPacking;
  throw Error(ErrorCode::kParseError, "unknown family '" + text + "'");
}

std::string ShapeText(const GeneratorSpec& spec) {
  if (spec.family == Family::kKnapsack) {
    return std::to_string(spec.cols) + "x" + std::to_string(spec.rows);
  }
  return std::to_string(spec.rows) + "x" + std::to_string(spec.cols);
}

void ParseShape(const std::string& text, GeneratorSpec* spec) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    size_t used = 0;
    const int first = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string tail = text.substr(x + 1);
    const int second = std::stoi(tail, &used);
    if (used != tail.size() || first < 1 || second < 1) {
      throw std::invalid_argument(text);
    }
    if (spec->family == Family::kKnapsack) {
      spec->cols = first;
      spec->rows = second;
    } else {
      spec->rows = first;
      spec->cols = second;
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError,
                "shape must be RxC with positive sizes, got '" + text + "'");
  }
}

void WriteManifest(std::ostream& out, const std::vector<ManifestEntry>& rows) {
  out << "file,seed,family,shape\n";
  for (const auto& row : rows) {
    out << row.file << ',' << row.seed << ',' << row.family << ',' << row.shape
        << '\n';
  }
}

}  // namespace cgftune
