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

// k-dimensional trivial-lifting cut generating functions
//
//   pi_{f,mu}(r) = min_{z in Z^k} max_{i=0..k} <a^i, r + z>
//
// with a^0 = mu / <mu, f> and a^i = e^i / (f_i - 1). The gauge of the
// simplex G(f, mu) = (f - 1) + {x >= 0 : <mu, x> <= 1}.

#ifndef CGFTUNE_CGF_MULTI_DIM_H_
#define CGFTUNE_CGF_MULTI_DIM_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cgftune/rational.h"
#include "cgftune/validity.h"

namespace cgftune {

inline constexpr int kDefaultTau = 1000;
inline constexpr int kDefaultCandidateCount = 121;

class MultiDimCgf {
 public:
  // Requires k = |f| = |mu| >= 2, f in [0,1)^k \ {0}, tau >= 2k, mu >= 1/tau
  // componentwise and sum(mu) = 1. Throws Error(kInvalidParameters).
  MultiDimCgf(RationalVector f, RationalVector mu, Rational tau);

  int k() const { return static_cast<int>(f_.size()); }
  const RationalVector& f() const { return f_; }
  const RationalVector& mu() const { return mu_; }
  const Rational& tau() const { return tau_; }
  // <mu, f>, positive by the constructor's invariants.
  const Rational& mu_dot_f() const { return mu_dot_f_; }

 private:
  RationalVector f_;
  RationalVector mu_;
  Rational tau_;
  Rational mu_dot_f_;
};

// Counts coordinate-level steps of one evaluation.
struct OpCounter {
  int64_t steps = 0;
};

// Closed-form evaluation in O(k): fold r into prod [f_i - 1, f_i), then
// minimize the gauge along the single axis that can improve it, at the
// floor and ceiling of the continuous minimizer.
Rational EvalPiKd(const MultiDimCgf& cgf, const RationalVector& r,
                  OpCounter* counter = nullptr);

// Reference evaluation straight from the definition: exact minimum of the
// gauge over all integer translates z in {-radius..radius}^k of the folded
// point. Only translates inside the current sublevel set are visited; those
// outside cannot lower the minimum, so the result equals the full box
// minimum. Accepts mu on the closed simplex (zero coordinates allowed).
// Throws Error(kDegenerateDirection) when <mu, f> = 0.
Rational EvalPiKdOracle(const RationalVector& f, const RationalVector& mu,
                        const RationalVector& r, int64_t radius);

// Oracle radius ceil(tau) + 1.
int64_t OracleRadius(const Rational& tau);

// `count` points of Delta_k^tau. The first is the barycenter; the rest are
// uniform on the simplex (sorted-uniform spacings on a 2^32 grid) mapped
// affinely onto {mu >= 1/tau, sum mu = 1}. Requires tau >= k.
std::vector<RationalVector> SampleSimplex(int k, int count,
                                          const Rational& tau, uint64_t seed);

// Exact checks of pi(0)=0, pi(f)=1, nonnegativity, periodicity under shifts
// in {-3..3}^k and sampled subadditivity. Throws Error(kValidityViolation).
ValidityReport CheckValidityKd(const MultiDimCgf& cgf, int sample_count,
                               uint64_t seed);

// One CSV row per vector, k rationals each.
void WriteMuCsv(std::ostream& out, const std::vector<RationalVector>& mus);
std::vector<RationalVector> ReadMuCsv(std::istream& in);

}  // namespace cgftune

#endif  // CGFTUNE_CGF_MULTI_DIM_H_
