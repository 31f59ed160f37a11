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

#include "cgftune/ilp.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cgftune/error.h"
#include "cgftune/lp_simplex.h"

namespace cgftune {

LinearRow IntegerRowFromRational(const RationalVector& coeffs,
                                 const Rational& rhs) {
  Integer lcm = DenominatorLcm(coeffs);
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs.get_den_mpz_t());
  LinearRow row;
  row.coeffs.reserve(coeffs.size());
  for (const Rational& v : coeffs) {
    const Rational scaled = v * lcm;
    row.coeffs.push_back(scaled.get_num());
  }
  const Rational scaled_rhs = rhs * lcm;
  row.rhs = scaled_rhs.get_num();
  return row;
}

ValidationReport ValidateInstance(const IlpInstance& inst) {
  if (static_cast<int>(inst.A.size()) != inst.m ||
      static_cast<int>(inst.b.size()) != inst.m ||
      static_cast<int>(inst.c.size()) != inst.n || inst.rho < 1) {
    throw Error(ErrorCode::kInvalidArgument, "instance dimensions mismatch");
  }
  for (int i = 0; i < inst.m; ++i) {
    if (static_cast<int>(inst.A[i].size()) != inst.n) {
      throw Error(ErrorCode::kInvalidArgument, "ragged constraint matrix");
    }
    for (const Rational& v : inst.A[i]) {
      if (!IsInteger(v)) {
        throw Error(ErrorCode::kNonIntegerData,
                    "A entry " + ToString(v) + " is not an integer");
      }
    }
    if (!IsInteger(inst.b[i])) {
      throw Error(ErrorCode::kNonIntegerData,
                  "b entry " + ToString(inst.b[i]) + " is not an integer");
    }
  }

  ValidationReport report;
  const Rational rho(inst.rho);
  auto check_bound = [&](int j, const Rational& max_value) {
    if (max_value > rho) {
      throw Error(ErrorCode::kUnboundedFeasibleSet,
                  "x_" + std::to_string(j) + " reaches " + ToString(max_value) +
                      " > rho = " + std::to_string(inst.rho));
    }
  };

  // Nonnegative A with a positive entry in every column bounds each x_j by
  // min_i b_i / A_ij, attained at x = t e_j when b >= 0.
  bool nonnegative = true;
  for (const auto& row : inst.A) {
    for (const Rational& v : row) nonnegative = nonnegative && v >= 0;
  }
  if (nonnegative) {
    bool every_column_positive = true;
    for (int j = 0; j < inst.n && every_column_positive; ++j) {
      bool positive = false;
      for (int i = 0; i < inst.m; ++i) positive = positive || inst.A[i][j] > 0;
      every_column_positive = positive;
    }
    if (every_column_positive) {
      report.structural = true;
      for (const Rational& v : inst.b) {
        if (v < 0) {
          report.empty = true;
          return report;
        }
      }
      for (int j = 0; j < inst.n; ++j) {
        Rational best;
        bool have = false;
        for (int i = 0; i < inst.m; ++i) {
          if (inst.A[i][j] <= 0) continue;
          const Rational bound = inst.b[i] / inst.A[i][j];
          if (!have || bound < best) best = bound;
          have = true;
        }
        check_bound(j, best);
        report.coordinate_max.push_back(best);
      }
      return report;
    }
  }

  // General case: maximize each coordinate over the LP relaxation.
  for (int j = 0; j < inst.n; ++j) {
    IlpInstance probe = inst;
    probe.c.assign(inst.n, Rational(0));
    probe.c[j] = 1;
    const LpSolution sol = SolveLp(probe);
    if (sol.status == LpStatus::kInfeasible) {
      report.empty = true;
      report.coordinate_max.clear();
      return report;
    }
    if (sol.status == LpStatus::kUnbounded) {
      throw Error(ErrorCode::kUnboundedFeasibleSet,
                  "x_" + std::to_string(j) + " is unbounded above");
    }
    check_bound(j, sol.objective);
    report.coordinate_max.push_back(sol.objective);
  }
  return report;
}

namespace {

int64_t ToInt64(const Rational& v, const char* what) {
  if (!IsInteger(v) || !v.get_num().fits_slong_p()) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                std::string(what) + " entry " + ToString(v) +
                    " is not a 64-bit integer");
  }
  const int64_t x = v.get_num().get_si();
  if (x > (int64_t{1} << 40) || x < -(int64_t{1} << 40)) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                std::string(what) + " entry too large to enumerate");
  }
  return x;
}

int64_t FloorDiv(int64_t num, int64_t den) {
  int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

int64_t CeilDiv(int64_t num, int64_t den) { return -FloorDiv(-num, den); }

}  // namespace

void ForEachFeasibleSegment(
    const IlpInstance& inst,
    const std::function<void(std::vector<int64_t>&, int64_t, int64_t)>& visit,
    int64_t max_visits) {
  const ValidationReport report = ValidateInstance(inst);
  if (report.empty) return;
  const int m = inst.m;
  const int n = inst.n;
  std::vector<int64_t> ub(n);
  for (int j = 0; j < n; ++j) {
    Integer bound = Floor(report.coordinate_max[j]);
    if (bound > inst.rho) bound = inst.rho;
    ub[j] = bound.get_si();
  }
  std::vector<std::vector<int64_t>> a(m, std::vector<int64_t>(n));
  std::vector<int64_t> residual(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = ToInt64(inst.A[i][j], "A");
    residual[i] = ToInt64(inst.b[i], "b");
  }
  // rest_min[i][d]: smallest value of sum_{j >= d} a_ij x_j over the box.
  std::vector<std::vector<int64_t>> rest_min(m, std::vector<int64_t>(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int d = n - 1; d >= 0; --d) {
      rest_min[i][d] = rest_min[i][d + 1] + std::min<int64_t>(0, a[i][d]) * ub[d];
    }
  }

  std::vector<int64_t> x(n, 0);
  int64_t visits = 0;
  auto count_visit = [&] {
    if (++visits > max_visits) {
      throw Error(ErrorCode::kEnumerationTooLarge,
                  "more than " + std::to_string(max_visits) +
                      " partial points visited");
    }
  };
  const int last = n - 1;
  auto search = [&](auto&& self, int d) -> void {
    if (d == last) {
      count_visit();
      int64_t lo = 0, hi = ub[last];
      for (int i = 0; i < m && lo <= hi; ++i) {
        const int64_t coef = a[i][last];
        if (coef > 0) {
          hi = std::min(hi, FloorDiv(residual[i], coef));
        } else if (coef < 0) {
          lo = std::max(lo, CeilDiv(residual[i], coef));
        } else if (residual[i] < 0) {
          hi = -1;
        }
      }
      if (lo <= hi) {
        x[last] = lo;
        visit(x, lo, hi);
        x[last] = 0;
      }
      return;
    }
    for (int64_t v = 0; v <= ub[d]; ++v) {
      count_visit();
      bool ok = true;
      bool can_recover = false;
      for (int i = 0; i < m; ++i) {
        if (a[i][d] * v + rest_min[i][d + 1] > residual[i]) {
          ok = false;
          if (a[i][d] < 0) can_recover = true;
        }
      }
      if (!ok) {
        if (can_recover) continue;
        break;
      }
      x[d] = v;
      for (int i = 0; i < m; ++i) residual[i] -= a[i][d] * v;
      self(self, d + 1);
      for (int i = 0; i < m; ++i) residual[i] += a[i][d] * v;
    }
    x[d] = 0;
  };
  search(search, 0);
}

void ForEachFeasiblePoint(
    const IlpInstance& inst,
    const std::function<void(const std::vector<int64_t>&)>& visit,
    int64_t max_visits) {
  ForEachFeasibleSegment(
      inst,
      [&](std::vector<int64_t>& x, int64_t lo, int64_t hi) {
        for (int64_t v = lo; v <= hi; ++v) {
          x.back() = v;
          visit(x);
        }
      },
      max_visits);
}

std::vector<std::vector<int64_t>> EnumerateFeasiblePoints(
    const IlpInstance& inst, int64_t max_visits) {
  std::vector<std::vector<int64_t>> points;
  ForEachFeasiblePoint(
      inst, [&](const std::vector<int64_t>& x) { points.push_back(x); },
      max_visits);
  return points;
}

namespace {

std::string NextDataLine(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return line;
  }
  throw Error(ErrorCode::kParseError,
              std::string("unexpected end of input reading ") + what);
}

RationalVector ParseRow(const std::string& line, int expected,
                        const char* what) {
  std::istringstream tokens(line);
  RationalVector row;
  std::string token;
  while (tokens >> token) row.push_back(ParseRational(token));
  if (static_cast<int>(row.size()) != expected) {
    throw Error(ErrorCode::kParseError,
                std::string(what) + ": expected " + std::to_string(expected) +
                    " entries, got " + std::to_string(row.size()));
  }
  return row;
}

}  // namespace

IlpInstance ReadInstance(std::istream& in) {
  IlpInstance inst;
  {
    std::istringstream header(NextDataLine(in, "header"));
    long long rho = 0;
    if (!(header >> inst.m >> inst.n >> rho) || inst.m < 1 || inst.n < 1 ||
        rho < 1) {
      throw Error(ErrorCode::kParseError, "header must be 'm n rho' (>= 1)");
    }
    inst.rho = rho;
  }
  for (int i = 0; i < inst.m; ++i) {
    inst.A.push_back(ParseRow(NextDataLine(in, "A"), inst.n, "row of A"));
  }
  inst.b = ParseRow(NextDataLine(in, "b"), inst.m, "b");
  inst.c = ParseRow(NextDataLine(in, "c"), inst.n, "c");
  return inst;
}

IlpInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return ReadInstance(in);
}

void WriteInstance(std::ostream& out, const IlpInstance& inst) {
  out << inst.m << ' ' << inst.n << ' ' << inst.rho << '\n';
  for (const auto& row : inst.A) out << JoinRationals(row, " ") << '\n';
  out << JoinRationals(inst.b, " ") << '\n';
  out << JoinRationals(inst.c, " ") << '\n';
}

void WriteInstanceFile(const std::string& path, const IlpInstance& inst) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
  WriteInstance(out, inst);
}

}  // namespace cgftune
