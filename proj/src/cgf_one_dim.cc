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

#include "cgftune/cgf_one_dim.h"

#include <algorithm>
#include <ostream>
#include <string>

#include "cgftune/error.h"
#include "cgftune/rng.h"

namespace cgftune {
namespace {

void RequireFraction(const Rational& f) {
  if (f <= 0 || f >= 1) {
    throw Error(ErrorCode::kInvalidParameters,
                "f = " + ToString(f) + " is not in (0,1)");
  }
}

void RequirePieces(int p, int q) {
  if (p < 2 || q < 2) {
    throw Error(ErrorCode::kInvalidParameters,
                "p and q must be finite integers >= 2");
  }
}

std::string SlopeText(const Rational& s1, const Rational& s2) {
  return "(s1, s2) = (" + ToString(s1) + ", " + ToString(s2) + ")";
}

}  // namespace

bool SlopeDomain::Contains(const Rational& s1, const Rational& s2) const {
  if (s1 > s1_upper || s2 < s2_lower) return false;
  if (s1_lower && s1 < *s1_lower) return false;
  if (s2_upper && s2 > *s2_upper) return false;
  return true;
}

SlopeDomain ValidDomain(const Rational& f, int p, int q) {
  RequireFraction(f);
  RequirePieces(p, q);
  const Rational total(p + q - 1);
  SlopeDomain domain;
  domain.s1_upper = 1 / (f - 1);
  domain.s2_lower = 1 / f;
  const Rational left = total * f - p;
  if (left < 0) domain.s1_lower = total / left;
  const Rational right = total * (1 - f) - q;
  if (right < 0) domain.s2_upper = total / (-right);
  return domain;
}

SlopeBox TruncateDomain(const SlopeDomain& domain, const Rational& M) {
  if (M <= 0) throw Error(ErrorCode::kInvalidParameters, "M must be > 0");
  SlopeBox box;
  box.u1 = domain.s1_upper;
  box.l2 = domain.s2_lower;
  box.l1 = domain.s1_lower ? *domain.s1_lower : Rational(domain.s1_upper - M);
  box.u2 = domain.s2_upper ? *domain.s2_upper : Rational(domain.s2_lower + M);
  return box;
}

std::pair<Rational, Rational> MapMuToSlopes(const Rational& mu1,
                                            const Rational& mu2,
                                            const SlopeBox& box) {
  return {box.u1 - mu1 * (box.u1 - box.l1), box.l2 + mu2 * (box.u2 - box.l2)};
}

OneDimCgf::OneDimCgf(Rational f, int p, int q, Rational s1, Rational s2)
    : f_(std::move(f)), p_(p), q_(q), s1_(std::move(s1)), s2_(std::move(s2)) {
  const SlopeDomain domain = ValidDomain(f_, p_, q_);
  if (!domain.Contains(s1_, s2_)) {
    throw Error(ErrorCode::kInvalidParameters,
                SlopeText(s1_, s2_) + " outside the valid domain for f = " +
                    ToString(f_));
  }
  const Rational phi1_step = (1 - f_ * s1_) / p_;
  const Rational phi2_step = (1 - f_ * s2_) / (p_ - 1);
  for (int i = 1; i <= p_; ++i) {
    s1_intercepts_.push_back(i * phi1_step);
    s2_intercepts_.push_back((i - 1) * phi2_step);
  }
  const Rational psi1_step = (1 + (1 - f_) * s1_) / (q_ - 1);
  const Rational psi2_step = (1 + (1 - f_) * s2_) / q_;
  for (int j = 1; j <= q_ - 1; ++j) {
    s1_intercepts_.push_back((j - 1) * psi1_step - s1_);
    s2_intercepts_.push_back(j * psi2_step - s2_);
  }
  RationalVector all = {s1_, s2_};
  all.insert(all.end(), s1_intercepts_.begin(), s1_intercepts_.end());
  all.insert(all.end(), s2_intercepts_.begin(), s2_intercepts_.end());
  den_ = DenominatorLcm(all);
  auto scaled = [this](const Rational& v) {
    return Integer(v.get_num() * (den_ / v.get_den()));
  };
  s1_num_ = scaled(s1_);
  s2_num_ = scaled(s2_);
  for (const Rational& v : s1_intercepts_) s1_int_num_.push_back(scaled(v));
  for (const Rational& v : s2_intercepts_) s2_int_num_.push_back(scaled(v));
}

OneDimCgf OneDimCgf::FromMu(const Rational& f, int p, int q,
                            const Rational& mu1, const Rational& mu2,
                            const Rational& M) {
  if (mu1 < 0 || mu1 > 1 || mu2 < 0 || mu2 > 1) {
    throw Error(ErrorCode::kInvalidParameters, "mu must lie in [0,1]^2");
  }
  const SlopeBox box = TruncateDomain(ValidDomain(f, p, q), M);
  auto [s1, s2] = MapMuToSlopes(mu1, mu2, box);
  return OneDimCgf(f, p, q, std::move(s1), std::move(s2));
}

Rational OneDimCgf::Evaluate(const Rational& r) const {
  return Evaluate(r, nullptr);
}

Rational OneDimCgf::Evaluate(const Rational& r, ActivePiece* piece) const {
  // Lines compared as integers over den_ * den(x).
  const Rational x = FracPart(r);
  const Integer& xd = x.get_den();
  const Integer s1x = s1_num_ * x.get_num();
  const Integer s2x = s2_num_ * x.get_num();
  Integer best, line1, line2;
  for (size_t k = 0; k < s1_int_num_.size(); ++k) {
    line1 = s1x + s1_int_num_[k] * xd;
    line2 = s2x + s2_int_num_[k] * xd;
    const bool take_first = line1 <= line2;
    const Integer& value = take_first ? line1 : line2;
    if (k == 0 || value > best) {
      best = value;
      if (piece != nullptr) {
        piece->pair = static_cast<int>(k);
        piece->side = take_first ? 0 : 1;
      }
    }
  }
  return Ratio(best, den_ * xd);
}

Rational EvalGmi(const Rational& f, const Rational& r) {
  RequireFraction(f);
  const Rational x = FracPart(r);
  if (x <= f) return x / f;
  return (1 - x) / (1 - f);
}

Rational EvalCg(const Rational& f, const Rational& r) {
  const Rational frac_f = FracPart(f);
  if (frac_f == 0) {
    throw Error(ErrorCode::kInvalidParameters, "CG requires fractional f");
  }
  return FracPart(r) / frac_f;
}

RationalVector IntersectionBreakpoints(const Rational& f, int p, int q) {
  RequireFraction(f);
  RequirePieces(p, q);
  RationalVector points;
  for (int i = 0; i <= p; ++i) points.push_back(i * f / p);
  for (int i = 1; i <= p - 2; ++i) points.push_back(i * f / (p - 1));
  for (int j = 0; j <= q - 1; ++j) points.push_back(1 - j * (1 - f) / q);
  for (int j = 1; j <= q - 2; ++j) points.push_back(1 - j * (1 - f) / (q - 1));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

ValidityReport CheckValidity1d(const OneDimCgf& cgf, int sample_count,
                               uint64_t seed) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kValidityViolation, what);
  };
  ValidityReport report;
  if (cgf.Evaluate(0) != 0) fail("pi(0) = " + ToString(cgf.Evaluate(0)));
  if (cgf.Evaluate(cgf.f()) != 1) {
    fail("pi(f) = " + ToString(cgf.Evaluate(cgf.f())));
  }
  // Witnesses mix small denominators with multiples of the denominators
  // at which the pieces of pi change.
  Integer kink_den = cgf.f().get_den() * cgf.p() * (cgf.p() - 1) * cgf.q() *
                     (cgf.q() - 1);
  const int structured_den =
      kink_den.fits_sint_p() && kink_den.get_si() <= 5000
          ? static_cast<int>(kink_den.get_si())
          : 5000;
  SplitMix64 rng(seed);
  auto draw = [&]() {
    if (rng.Next() & 1) return SampleRational(rng, 64, 3);
    const int64_t mult = rng.UniformInt(1, 3);
    const int64_t den = structured_den * mult;
    return Ratio(rng.UniformInt(-3 * den, 3 * den), den);
  };
  for (int s = 0; s < sample_count; ++s) {
    const Rational r = draw();
    const Rational r2 = draw();
    const Rational pr = cgf.Evaluate(r);
    const Rational pr2 = cgf.Evaluate(r2);
    if (pr < 0) fail("pi(" + ToString(r) + ") = " + ToString(pr) + " < 0");
    ++report.nonnegativity_checks;
    const int64_t w = rng.UniformInt(-3, 3);
    const Rational shifted = cgf.Evaluate(r + w);
    if (shifted != pr) {
      fail("periodicity: pi(" + ToString(r) + ") = " + ToString(pr) +
           " but pi(" + ToString(r + w) + ") = " + ToString(shifted));
    }
    ++report.periodicity_checks;
    const Rational sum = cgf.Evaluate(r + r2);
    if (pr + pr2 < sum) {
      fail("subadditivity: r = " + ToString(r) + ", r' = " + ToString(r2) +
           ", pi(r) + pi(r') = " + ToString(pr + pr2) + " < pi(r + r') = " +
           ToString(sum));
    }
    ++report.subadditivity_checks;
  }
  return report;
}

void WritePlotCsv(std::ostream& out,
                  const std::function<Rational(const Rational&)>& fn,
                  int resolution) {
  if (resolution < 1) {
    throw Error(ErrorCode::kInvalidArgument, "resolution must be >= 1");
  }
  out << "r,pi\n";
  for (int i = 0; i <= resolution; ++i) {
    const Rational r = Ratio(i, resolution);
    out << FormatDecimal(r, 8) << ',' << FormatDecimal(fn(r), 8) << '\n';
  }
}

}  // namespace cgftune
