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

// One-dimensional Gomory-Johnson cut generating functions
//
//   pi(r) = max( max_{i=1..p}   min(phi1_i(r), phi2_i(r)),
//                max_{j=1..q-1} min(psi1_j(r), psi2_j(r)) )
//
// on the fractional part of r, where
//
//   phi1_i(r) = s1 r + i (1 - f s1) / p
//   phi2_i(r) = s2 r + (i - 1) (1 - f s2) / (p - 1)
//   psi1_j(r) = s1 (r - 1) + (j - 1) (1 + (1 - f) s1) / (q - 1)
//   psi2_j(r) = s2 (r - 1) + j (1 + (1 - f) s2) / q
//
// plus the classical GMI and CG functions it generalizes. The slopes
// (s1, s2) = (1/(f-1), 1/f) reproduce GMI_f.

#ifndef CGFTUNE_CGF_ONE_DIM_H_
#define CGFTUNE_CGF_ONE_DIM_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "cgftune/rational.h"
#include "cgftune/validity.h"

namespace cgftune {

inline constexpr int kDefaultPieces = 2;   // p = q = 2
inline constexpr int kDefaultSlopeRange = 10;  // M

// Rectangle of slopes for which pi is a valid CGF. A missing s1_lower is
// -infinity, a missing s2_upper is +infinity.
struct SlopeDomain {
  std::optional<Rational> s1_lower;
  Rational s1_upper;  // 1/(f-1)
  Rational s2_lower;  // 1/f
  std::optional<Rational> s2_upper;

  bool Contains(const Rational& s1, const Rational& s2) const;
};

// Bounded slope box [l1, u1] x [l2, u2] with l1 <= u1 < 0 < l2 <= u2.
struct SlopeBox {
  Rational l1, u1, l2, u2;
};

SlopeDomain ValidDomain(const Rational& f, int p, int q);

// Replaces -inf by u1 - M and +inf by l2 + M.
SlopeBox TruncateDomain(const SlopeDomain& domain, const Rational& M);

// s1 = u1 - mu1 (u1 - l1),  s2 = l2 + mu2 (u2 - l2).
std::pair<Rational, Rational> MapMuToSlopes(const Rational& mu1,
                                            const Rational& mu2,
                                            const SlopeBox& box);

// Identifies which affine piece produced a value: the index into the
// max over the p + q - 1 min-pairs and which side of that min was taken.
struct ActivePiece {
  int pair = 0;  // 0..p-1 are the phi pairs, p..p+q-2 the psi pairs
  int side = 0;  // 0 for the s1 line, 1 for the s2 line

  bool operator==(const ActivePiece&) const = default;
};

class OneDimCgf {
 public:
  // Throws Error(kInvalidParameters) unless f in (0,1), p, q >= 2 and
  // (s1, s2) lies in ValidDomain(f, p, q).
  OneDimCgf(Rational f, int p, int q, Rational s1, Rational s2);

  // Slopes from (mu1, mu2) in [0,1]^2 through the M-truncated domain.
  static OneDimCgf FromMu(const Rational& f, int p, int q, const Rational& mu1,
                          const Rational& mu2,
                          const Rational& M = kDefaultSlopeRange);

  Rational Evaluate(const Rational& r) const;
  Rational Evaluate(const Rational& r, ActivePiece* piece) const;

  const Rational& f() const { return f_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const Rational& s1() const { return s1_; }
  const Rational& s2() const { return s2_; }

 private:
  Rational f_;
  int p_;
  int q_;
  Rational s1_;
  Rational s2_;
  // intercepts of the s1 and s2 lines of each min-pair
  RationalVector s1_intercepts_;
  RationalVector s2_intercepts_;
  // the same lines scaled by the common denominator den_
  Integer den_;
  Integer s1_num_, s2_num_;
  std::vector<Integer> s1_int_num_, s2_int_num_;
};

// GMI_f(r) = [r]/f if [r] <= f, else (1-[r])/(1-f). Requires f in (0,1).
Rational EvalGmi(const Rational& f, const Rational& r);

// CG_f(r) = [r]/[f]. Requires f not integral.
Rational EvalCg(const Rational& f, const Rational& r);

// Sorted, duplicate-free points where pi meets GMI_f for every strictly
// non-GMI slope pair: {if/p}, {if/(p-1)}, {1 - j(1-f)/q}, {1 - j(1-f)/(q-1)}.
RationalVector IntersectionBreakpoints(const Rational& f, int p, int q);

// Exact checks of pi(0)=0, pi(f)=1, nonnegativity, periodicity and sampled
// subadditivity. Throws Error(kValidityViolation) naming the witness.
ValidityReport CheckValidity1d(const OneDimCgf& cgf, int sample_count,
                               uint64_t seed);

// "r,pi" CSV over r = i/resolution, i = 0..resolution, values rendered with
// eight decimals.
void WritePlotCsv(std::ostream& out,
                  const std::function<Rational(const Rational&)>& fn,
                  int resolution);

}  // namespace cgftune

#endif  // CGFTUNE_CGF_ONE_DIM_H_
