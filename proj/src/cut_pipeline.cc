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

#include "cgftune/cut_pipeline.h"

#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include "cgftune/error.h"

namespace cgftune {

CutStandardForm CutFromValues(const CgfInput& input,
                              const RationalVector& values) {
  if (values.size() != input.nonbasic_ids.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one value per nonbasic column expected");
  }
  CutStandardForm cut;
  cut.coeffs.assign(input.num_vars, Rational(0));
  bool nonzero = false;
  for (size_t j = 0; j < values.size(); ++j) {
    if (values[j] < 0) {
      throw Error(ErrorCode::kNegativeCoefficient,
                  "pi(r^" + std::to_string(j) + ") = " + ToString(values[j]));
    }
    nonzero = nonzero || values[j] != 0;
    cut.coeffs[input.nonbasic_ids[j]] = values[j];
  }
  if (!nonzero) {
    throw Error(ErrorCode::kInfeasibleCut, "all coefficients are zero");
  }
  return cut;
}

CutStandardForm CutFromCgf(
    const CgfInput& input,
    const std::function<Rational(const RationalVector&)>& pi) {
  RationalVector values;
  values.reserve(input.columns.size());
  for (const RationalVector& column : input.columns) {
    values.push_back(pi(column));
  }
  return CutFromValues(input, values);
}

CutCanonical ToCanonical(const CutStandardForm& cut, const IlpInstance& inst) {
  if (static_cast<int>(cut.coeffs.size()) != inst.n + inst.m) {
    throw Error(ErrorCode::kInvalidArgument,
                "cut must have n + m coefficients");
  }
  CutCanonical out;
  out.alpha.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) {
    Rational v = -cut.coeffs[j];
    for (int i = 0; i < inst.m; ++i) v += inst.A[i][j] * cut.coeffs[inst.n + i];
    out.alpha[j] = v;
  }
  out.beta = -1;
  for (int i = 0; i < inst.m; ++i) out.beta += inst.b[i] * cut.coeffs[inst.n + i];
  return out;
}

namespace {

// x is bounded by 2^40 in absolute value, so a row with 64-bit coefficients
// sums exactly in 128 bits.
__int128 FloorDiv128(__int128 num, __int128 den) {
  __int128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

__int128 CeilDiv128(__int128 num, __int128 den) {
  return -FloorDiv128(-num, den);
}

struct IntRow {
  bool small = true;
  std::vector<int64_t> c64;
  __int128 rhs128 = 0;
  std::vector<Integer> big;
  Integer big_rhs;

  explicit IntRow(const LinearRow& row) : big(row.coeffs), big_rhs(row.rhs) {
    for (const Integer& v : row.coeffs) {
      if (!v.fits_slong_p()) small = false;
    }
    if (!row.rhs.fits_slong_p()) small = false;
    if (small) {
      for (const Integer& v : row.coeffs) c64.push_back(v.get_si());
      rhs128 = row.rhs.get_si();
    }
  }

  bool Violated(const std::vector<int64_t>& x) const {
    if (small) {
      __int128 lhs = 0;
      for (size_t j = 0; j < x.size(); ++j) {
        lhs += static_cast<__int128>(c64[j]) * x[j];
      }
      return lhs > rhs128;
    }
    Integer lhs = 0;
    for (size_t j = 0; j < x.size(); ++j) {
      if (x[j] != 0) lhs += big[j] * static_cast<long>(x[j]);
    }
    return lhs > big_rhs;
  }
};

// Objective scaled to integers; values are compared in 128 bits when the
// scaled coefficients fit 64 bits.
class ObjectiveTracker {
 public:
  ObjectiveTracker(const RationalVector& c, BruteForceResult* out)
      : out_(out) {
    scale_ = DenominatorLcm(c);
    std::vector<Integer> coeffs;
    for (const Rational& v : c) {
      const Rational scaled = v * scale_;
      coeffs.push_back(scaled.get_num());
    }
    row_ = std::make_unique<IntRow>(LinearRow{coeffs, Integer(0)});
  }

  // Small rows only: `x` with its last coordinate already chosen.
  void OfferValue(__int128 value, const std::vector<int64_t>& x) {
    if (!have_ || value > best_small_) {
      best_small_ = value;
      Take(x);
    }
  }

  void Offer(const std::vector<int64_t>& x) {
    if (row_->small) {
      __int128 v = 0;
      for (size_t j = 0; j < x.size(); ++j) {
        v += static_cast<__int128>(row_->c64[j]) * x[j];
      }
      if (!have_ || v > best_small_) {
        best_small_ = v;
        Take(x);
      }
      return;
    }
    Integer v = 0;
    for (size_t j = 0; j < x.size(); ++j) {
      if (x[j] != 0) v += row_->big[j] * static_cast<long>(x[j]);
    }
    if (!have_ || v > best_big_) {
      best_big_ = v;
      Take(x);
    }
  }

  void Finish() {
    out_->infeasible = !have_;
    if (!have_) return;
    Integer value;
    if (row_->small) {
      // Split the 128-bit value into two 64-bit halves for GMP.
      const bool negative = best_small_ < 0;
      unsigned __int128 mag =
          negative ? -static_cast<unsigned __int128>(best_small_)
                   : static_cast<unsigned __int128>(best_small_);
      Integer hi(static_cast<unsigned long>(mag >> 64));
      Integer lo(static_cast<unsigned long>(mag & ~uint64_t{0}));
      value = (hi << 64) + lo;
      if (negative) value = -value;
    } else {
      value = best_big_;
    }
    out_->optimum = Ratio(value, scale_);
  }

 private:
  void Take(const std::vector<int64_t>& x) {
    have_ = true;
    out_->argmax = x;
  }

  BruteForceResult* out_;
  Integer scale_;

 public:
  std::unique_ptr<IntRow> row_;

 private:
  bool have_ = false;
  __int128 best_small_ = 0;
  Integer best_big_;
};

}  // namespace

PointScan ScanFeasiblePoints(const IlpInstance& inst,
                             std::span<const CutCanonical> cuts,
                             int64_t max_visits) {
  std::vector<IntRow> rows;
  for (const CutCanonical& cut : cuts) {
    if (static_cast<int>(cut.alpha.size()) != inst.n) {
      throw Error(ErrorCode::kInvalidArgument, "cut has the wrong dimension");
    }
    rows.emplace_back(IntegerRowFromRational(cut.alpha, cut.beta));
  }
  PointScan scan;
  scan.violators.resize(cuts.size());
  scan.with_cut.resize(cuts.size());
  ObjectiveTracker base(inst.c, &scan.base);
  std::vector<ObjectiveTracker> trackers;
  trackers.reserve(cuts.size());
  for (auto& result : scan.with_cut) trackers.emplace_back(inst.c, &result);

  bool small = base.row_->small;
  for (const IntRow& row : rows) small = small && row.small;
  if (!small) {
    ForEachFeasiblePoint(
        inst,
        [&](const std::vector<int64_t>& x) {
          ++scan.point_count;
          base.Offer(x);
          for (size_t k = 0; k < rows.size(); ++k) {
            if (rows[k].Violated(x)) {
              if (!scan.violators[k]) scan.violators[k] = x;
            } else {
              trackers[k].Offer(x);
            }
          }
        },
        max_visits);
  } else {
    // Along a segment every row is linear in the last coordinate, so the
    // first violator and the best point sit at interval ends.
    const int last = inst.n - 1;
    auto prefix = [last](const IntRow& row, const std::vector<int64_t>& x) {
      __int128 sum = 0;
      for (int j = 0; j < last; ++j) {
        sum += static_cast<__int128>(row.c64[j]) * x[j];
      }
      return sum;
    };
    auto offer_best = [last](ObjectiveTracker& tracker, std::vector<int64_t>& x,
                             int64_t lo, int64_t hi) {
      const IntRow& obj = *tracker.row_;
      __int128 value = 0;
      for (int j = 0; j < last; ++j) {
        value += static_cast<__int128>(obj.c64[j]) * x[j];
      }
      x[last] = obj.c64[last] > 0 ? hi : lo;
      tracker.OfferValue(value + static_cast<__int128>(obj.c64[last]) * x[last],
                         x);
    };
    ForEachFeasibleSegment(
        inst,
        [&](std::vector<int64_t>& x, int64_t lo, int64_t hi) {
          scan.point_count += hi - lo + 1;
          offer_best(base, x, lo, hi);
          for (size_t k = 0; k < rows.size(); ++k) {
            const IntRow& row = rows[k];
            const __int128 slack = row.rhs128 - prefix(row, x);
            const int64_t coef = row.c64[last];
            // Satisfying values: coef * v <= slack.
            int64_t ok_lo = lo, ok_hi = hi;
            if (coef > 0) {
              ok_hi = static_cast<int64_t>(
                  std::min<__int128>(hi, FloorDiv128(slack, coef)));
            } else if (coef < 0) {
              ok_lo = static_cast<int64_t>(
                  std::max<__int128>(lo, CeilDiv128(slack, coef)));
            } else if (slack < 0) {
              ok_hi = lo - 1;
            }
            const bool any_ok = ok_lo <= ok_hi;
            if (!scan.violators[k] && (!any_ok || ok_lo > lo || ok_hi < hi)) {
              x[last] = !any_ok || ok_lo > lo ? lo : ok_hi + 1;
              scan.violators[k] = x;
            }
            if (any_ok) offer_best(trackers[k], x, ok_lo, ok_hi);
          }
          x[last] = lo;
        },
        max_visits);
  }
  base.Finish();
  for (auto& tracker : trackers) tracker.Finish();
  return scan;
}

std::optional<std::vector<int64_t>> FindCutViolator(
    const std::vector<std::vector<int64_t>>& points, const CutCanonical& cut) {
  const IntRow row(IntegerRowFromRational(cut.alpha, cut.beta));
  for (const auto& x : points) {
    if (row.Violated(x)) return x;
  }
  return std::nullopt;
}

std::optional<std::vector<int64_t>> VerifyCutValid(const IlpInstance& inst,
                                                   const CutCanonical& cut) {
  if (static_cast<int>(cut.alpha.size()) != inst.n) {
    throw Error(ErrorCode::kInvalidArgument, "cut has the wrong dimension");
  }
  return ScanFeasiblePoints(inst, {&cut, 1}).violators[0];
}

bool VerifyLpViolation(const SimplexTableau& tab, const CutStandardForm& cut) {
  if (static_cast<int>(cut.coeffs.size()) != tab.num_vars()) {
    throw Error(ErrorCode::kInvalidArgument, "cut/tableau size mismatch");
  }
  for (int var : tab.basic_var_of_row) {
    if (cut.coeffs[var] != 0) {
      throw Error(ErrorCode::kCutContractViolation,
                  "coefficient " + ToString(cut.coeffs[var]) +
                      " on basic variable y_" + std::to_string(var));
    }
  }
  // LHS at the vertex: basics take rhs, nonbasics are zero.
  Rational lhs = 0;
  for (int r = 0; r < tab.num_rows(); ++r) {
    lhs += cut.coeffs[tab.basic_var_of_row[r]] * tab.rhs[r];
  }
  return lhs < 1;
}

void WriteCutCsv(std::ostream& out, const CutCanonical& cut) {
  out << JoinRationals(cut.alpha, ",") << ',' << ToString(cut.beta) << '\n';
}

CutCanonical ReadCutCsv(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  RationalVector fields;
  std::stringstream parts(line);
  std::string field;
  while (std::getline(parts, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    if (b == std::string::npos) {
      throw Error(ErrorCode::kParseError, "empty field in cut CSV");
    }
    fields.push_back(ParseRational(field.substr(b, e - b + 1)));
  }
  if (fields.size() < 2) {
    throw Error(ErrorCode::kParseError, "cut CSV needs alpha and beta");
  }
  CutCanonical cut;
  cut.beta = fields.back();
  fields.pop_back();
  cut.alpha = std::move(fields);
  return cut;
}

}  // namespace cgftune
