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

#include "cgftune/lp_simplex.h"

#include <algorithm>
#include <string>
#include <utility>

#include "cgftune/error.h"

namespace cgftune {
namespace {

Integer RequireInteger(const Rational& value, const char* what) {
  if (!IsInteger(value)) {
    throw Error(ErrorCode::kNonIntegerData,
                std::string(what) + " entry " + ToString(value) +
                    " is not an integer");
  }
  return value.get_num();
}

// Dense fraction-free (integer-preserving) simplex tableau.
//
// The stored matrix is D * B^{-1} [G' | I | art | h'] where D = |det B| and
// G', h' are the rows after sign normalization. Every entry stays integral
// and each pivot divides exactly by the previous D, so no gcd is ever taken.
// The objective rows hold D times the reduced costs.
class FractionFreeTableau {
 public:
  explicit FractionFreeTableau(const ConstraintSystem& system)
      : n_(system.num_structural), rows_(system.num_rows()) {
    for (int i = 0; i < rows_; ++i) {
      if (system.h[i] < 0) art_rows_.push_back(i);
    }
    num_art_ = static_cast<int>(art_rows_.size());
    cols_ = n_ + rows_ + num_art_;
    q_.assign(rows_, std::vector<Integer>(cols_ + 1));
    basis_.assign(rows_, -1);
    d_ = 1;
    int next_art = 0;
    for (int i = 0; i < rows_; ++i) {
      const bool negate = system.h[i] < 0;
      auto& row = q_[i];
      for (int j = 0; j < n_; ++j) {
        row[j] = negate ? Integer(-system.G[i][j]) : system.G[i][j];
      }
      row[n_ + i] = negate ? -1 : 1;
      row[cols_] = negate ? Integer(-system.h[i]) : system.h[i];
      if (negate) {
        const int art_col = n_ + rows_ + next_art++;
        row[art_col] = 1;
        basis_[i] = art_col;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  // Returns false when the system has no feasible point.
  bool RunPhaseOne(int64_t& pivots, int64_t max_pivots) {
    if (num_art_ == 0) return true;
    // maximize -sum(art); reduced cost of column j is -sum over artificial
    // rows of q[i][j] (artificial columns price out to zero).
    z_.assign(cols_ + 1, Integer(0));
    for (int i : art_rows_) {
      for (int j = 0; j <= cols_; ++j) {
        if (IsArtificial(j)) continue;
        z_[j] -= q_[i][j];
      }
    }
    if (!Optimize(pivots, max_pivots)) {
      // Phase one is bounded above by zero; unboundedness is impossible.
      throw Error(ErrorCode::kSingularBasis, "phase one reported unbounded");
    }
    if (z_[cols_] < 0) return false;
    // Drive zero-level artificials out of the basis.
    for (int r = 0; r < rows_; ++r) {
      if (!IsArtificial(basis_[r])) continue;
      int entering = -1;
      for (int j = 0; j < n_ + rows_; ++j) {
        if (q_[r][j] != 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) {
        throw Error(ErrorCode::kSingularBasis,
                    "artificial variable cannot leave the basis");
      }
      Pivot(r, entering);
      ++pivots;
    }
    DropArtificialColumns();
    return true;
  }

  // Returns false when the objective is unbounded.
  bool RunPhaseTwo(const std::vector<Integer>& c_scaled, int64_t& pivots,
                   int64_t max_pivots) {
    z_.assign(cols_ + 1, Integer(0));
    for (int j = 0; j <= cols_; ++j) {
      Integer acc = 0;
      for (int i = 0; i < rows_; ++i) {
        const int bv = basis_[i];
        if (bv < n_ && c_scaled[bv] != 0) acc += c_scaled[bv] * q_[i][j];
      }
      if (j < n_) acc -= d_ * c_scaled[j];
      z_[j] = std::move(acc);
    }
    return Optimize(pivots, max_pivots);
  }

  const std::vector<int>& basis() const { return basis_; }
  const Integer& denominator() const { return d_; }
  const Integer& rhs(int row) const { return q_[row][cols_]; }
  const Integer& objective() const { return z_[cols_]; }

 private:
  bool IsArtificial(int col) const { return col >= n_ + rows_ && col < cols_; }

  // Bland's rule: lowest-index improving column enters; ratio ties leave by
  // lowest basic variable index.
  bool Optimize(int64_t& pivots, int64_t max_pivots) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < cols_; ++j) {
        if (IsArtificial(j)) continue;
        if (z_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      for (int i = 0; i < rows_; ++i) {
        if (q_[i][entering] <= 0) continue;
        if (leaving < 0) {
          leaving = i;
          continue;
        }
        // compare rhs_i / a_i against rhs_l / a_l with a_i, a_l > 0
        const int cmp = cmp_ratio(i, leaving, entering);
        if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[leaving])) leaving = i;
      }
      if (leaving < 0) return false;
      if (++pivots > max_pivots) {
        throw Error(ErrorCode::kPivotLimitExceeded,
                    "simplex exceeded " + std::to_string(max_pivots) +
                        " pivots");
      }
      Pivot(leaving, entering);
    }
  }

  int cmp_ratio(int a, int b, int col) {
    mpz_mul(tmp1_.get_mpz_t(), q_[a][cols_].get_mpz_t(),
            q_[b][col].get_mpz_t());
    mpz_mul(tmp2_.get_mpz_t(), q_[b][cols_].get_mpz_t(),
            q_[a][col].get_mpz_t());
    return cmp(tmp1_, tmp2_);
  }

  void UpdateRow(std::vector<Integer>& row, const std::vector<Integer>& prow,
                 const Integer& piv, int col) {
    const Integer factor = row[col];
    mpz_srcptr f = factor.get_mpz_t();
    mpz_srcptr p = piv.get_mpz_t();
    mpz_srcptr d = d_.get_mpz_t();
    const bool zero_factor = mpz_sgn(f) == 0;
    for (size_t j = 0; j < row.size(); ++j) {
      mpz_ptr x = row[j].get_mpz_t();
      if (zero_factor || mpz_sgn(prow[j].get_mpz_t()) == 0) {
        if (mpz_sgn(x) == 0) continue;
        mpz_mul(x, x, p);
      } else {
        mpz_mul(x, x, p);
        mpz_submul(x, f, prow[j].get_mpz_t());
      }
      mpz_divexact(x, x, d);
    }
  }

  void Pivot(int r, int s) {
    const Integer piv = q_[r][s];
    const std::vector<Integer> prow = q_[r];
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      UpdateRow(q_[i], prow, piv, s);
    }
    if (!z_.empty()) UpdateRow(z_, prow, piv, s);
    d_ = piv;
    basis_[r] = s;
    if (d_ < 0) {
      d_ = -d_;
      for (auto& row : q_) {
        for (auto& v : row) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
      }
      for (auto& v : z_) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
    }
  }

  void DropArtificialColumns() {
    const int first = n_ + rows_;
    for (auto& row : q_) {
      row.erase(row.begin() + first, row.begin() + cols_);
    }
    cols_ = first;
    num_art_ = 0;
    z_.clear();
  }

  int n_;
  int rows_;
  int cols_ = 0;
  int num_art_ = 0;
  std::vector<int> art_rows_;
  std::vector<std::vector<Integer>> q_;
  std::vector<Integer> z_;
  std::vector<int> basis_;
  Integer d_;
  Integer tmp1_, tmp2_;
};

}  // namespace

ConstraintSystem BuildConstraintSystem(const IlpInstance& inst,
                                       std::span<const LinearRow> extra_rows) {
  ConstraintSystem system;
  system.num_structural = inst.n;
  system.c = inst.c;
  system.G.reserve(inst.m + extra_rows.size());
  for (int i = 0; i < inst.m; ++i) {
    std::vector<Integer> row(inst.n);
    for (int j = 0; j < inst.n; ++j) row[j] = RequireInteger(inst.A[i][j], "A");
    system.G.push_back(std::move(row));
    system.h.push_back(RequireInteger(inst.b[i], "b"));
  }
  for (const LinearRow& extra : extra_rows) {
    if (static_cast<int>(extra.coeffs.size()) != inst.n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "appended row has wrong length");
    }
    system.G.push_back(extra.coeffs);
    system.h.push_back(extra.rhs);
  }
  return system;
}

LpSolution SolveLp(const ConstraintSystem& system, const LpOptions& options) {
  const int n = system.num_structural;
  const int rows = system.num_rows();
  LpSolution sol;
  FractionFreeTableau tableau(system);
  if (!tableau.RunPhaseOne(sol.pivots, options.max_pivots)) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }
  const Integer scale = DenominatorLcm(system.c);
  std::vector<Integer> c_scaled(n);
  for (int j = 0; j < n; ++j) {
    const Rational scaled = system.c[j] * scale;
    c_scaled[j] = scaled.get_num();
  }
  if (!tableau.RunPhaseTwo(c_scaled, sol.pivots, options.max_pivots)) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.status = LpStatus::kOptimal;
  const Integer& d = tableau.denominator();
  sol.y.assign(n + rows, Rational(0));
  for (int i = 0; i < rows; ++i) {
    Rational value(tableau.rhs(i), d);
    value.canonicalize();
    sol.y[tableau.basis()[i]] = std::move(value);
  }
  sol.x.assign(sol.y.begin(), sol.y.begin() + n);
  sol.objective = Rational(tableau.objective(), d * scale);
  sol.objective.canonicalize();
  sol.basis = tableau.basis();
  std::sort(sol.basis.begin(), sol.basis.end());
  return sol;
}

LpSolution SolveLp(const IlpInstance& inst,
                   std::span<const LinearRow> extra_rows,
                   const LpOptions& options) {
  return SolveLp(BuildConstraintSystem(inst, extra_rows), options);
}

SimplexTableau ExtractTableau(const ConstraintSystem& system,
                              const LpSolution& sol) {
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInvalidArgument,
                "tableau requested for a non-optimal solution");
  }
  const int n = system.num_structural;
  const int rows = system.num_rows();
  const int vars = n + rows;
  if (static_cast<int>(sol.basis.size()) != rows) {
    throw Error(ErrorCode::kSingularBasis, "basis size does not match rows");
  }
  SimplexTableau tab;
  tab.num_structural = n;
  tab.basic_var_of_row = sol.basis;
  std::vector<bool> is_basic(vars, false);
  for (int v : sol.basis) is_basic[v] = true;
  for (int v = 0; v < vars; ++v) {
    if (!is_basic[v]) tab.nonbasis.push_back(v);
  }
  auto column = [&](int row, int var) -> Rational {
    if (var < n) return Rational(system.G[row][var]);
    return Rational(var - n == row ? 1 : 0);
  };
  // Augmented system [A_B | A_N | h], reduced to [I | A_B^{-1}A_N | A_B^{-1}h].
  const int width = rows + static_cast<int>(tab.nonbasis.size()) + 1;
  std::vector<RationalVector> aug(rows, RationalVector(width));
  for (int i = 0; i < rows; ++i) {
    for (int t = 0; t < rows; ++t) aug[i][t] = column(i, sol.basis[t]);
    for (size_t t = 0; t < tab.nonbasis.size(); ++t) {
      aug[i][rows + t] = column(i, tab.nonbasis[t]);
    }
    aug[i][width - 1] = Rational(system.h[i]);
  }
  for (int col = 0; col < rows; ++col) {
    int pivot_row = -1;
    for (int i = col; i < rows; ++i) {
      if (aug[i][col] != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) {
      throw Error(ErrorCode::kSingularBasis, "basis matrix is singular");
    }
    std::swap(aug[col], aug[pivot_row]);
    const Rational inv = 1 / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const Rational factor = aug[i][col];
      for (int j = col; j < width; ++j) aug[i][j] -= factor * aug[col][j];
    }
  }
  tab.coeffs.resize(rows);
  tab.rhs.resize(rows);
  for (int i = 0; i < rows; ++i) {
    tab.coeffs[i].assign(aug[i].begin() + rows, aug[i].end() - 1);
    tab.rhs[i] = aug[i][width - 1];
  }
  return tab;
}

SimplexTableau ExtractTableau(const IlpInstance& inst, const LpSolution& sol,
                              std::span<const LinearRow> extra_rows) {
  return ExtractTableau(BuildConstraintSystem(inst, extra_rows), sol);
}

CgfInput SelectRows(const SimplexTableau& tab, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  CgfInput input;
  input.k = k;
  for (int i = 0; i < tab.num_rows() && static_cast<int>(input.rows.size()) < k;
       ++i) {
    if (!IsInteger(tab.rhs[i])) input.rows.push_back(i);
  }
  if (static_cast<int>(input.rows.size()) < k) {
    throw Error(ErrorCode::kInsufficientFractionalRows,
                "only " + std::to_string(input.rows.size()) +
                    " fractional rows, " + std::to_string(k) + " requested");
  }
  for (int row : input.rows) input.f.push_back(FracPart(tab.rhs[row]));
  input.nonbasic_ids = tab.nonbasis;
  input.num_vars = tab.num_vars();
  input.columns.resize(tab.nonbasis.size());
  for (size_t t = 0; t < tab.nonbasis.size(); ++t) {
    input.columns[t].reserve(k);
    for (int row : input.rows) input.columns[t].push_back(tab.coeffs[row][t]);
  }
  return input;
}

}  // namespace cgftune
