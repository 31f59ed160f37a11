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

#include "cgftune/cgf_multi_dim.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cgftune/error.h"
#include "cgftune/rng.h"

namespace cgftune {
namespace {

void Fail(const std::string& what) {
  throw Error(ErrorCode::kInvalidParameters, what);
}

// r - floor(r), shifted down by one where the fractional part reaches f_i,
// so the result lies in prod [f_i - 1, f_i).
RationalVector Fold(const RationalVector& f, const RationalVector& r) {
  RationalVector folded(r.size());
  for (size_t i = 0; i < r.size(); ++i) {
    folded[i] = FracPart(r[i]);
    if (folded[i] >= f[i]) folded[i] -= 1;
  }
  return folded;
}

std::string VecText(const RationalVector& v) {
  return "(" + JoinRationals(v, ", ") + ")";
}

}  // namespace

MultiDimCgf::MultiDimCgf(RationalVector f, RationalVector mu, Rational tau)
    : f_(std::move(f)), mu_(std::move(mu)), tau_(std::move(tau)) {
  const int k = static_cast<int>(f_.size());
  if (k < 2) Fail("k must be >= 2");
  if (static_cast<int>(mu_.size()) != k) Fail("mu and f differ in length");
  if (tau_ < 2 * k) Fail("tau = " + ToString(tau_) + " is below 2k");
  bool nonzero = false;
  for (const Rational& fi : f_) {
    if (fi < 0 || fi >= 1) Fail("f component " + ToString(fi) + " not in [0,1)");
    nonzero = nonzero || fi != 0;
  }
  if (!nonzero) Fail("f must be nonzero");
  const Rational floor_mu = 1 / tau_;
  Rational sum = 0;
  for (const Rational& m : mu_) {
    if (m < floor_mu) {
      Fail("mu component " + ToString(m) + " below 1/tau = " +
           ToString(floor_mu));
    }
    sum += m;
  }
  if (sum != 1) Fail("mu sums to " + ToString(sum) + ", not 1");
  for (int i = 0; i < k; ++i) mu_dot_f_ += mu_[i] * f_[i];
}

Rational EvalPiKd(const MultiDimCgf& cgf, const RationalVector& r,
                  OpCounter* counter) {
  const int k = cgf.k();
  if (static_cast<int>(r.size()) != k) {
    throw Error(ErrorCode::kInvalidArgument, "r has the wrong dimension");
  }
  const RationalVector& f = cgf.f();
  const RationalVector& mu = cgf.mu();
  const Rational& q = cgf.mu_dot_f();

  RationalVector folded = Fold(f, r);
  Rational p = 0;
  RationalVector s(k);
  for (int i = 0; i < k; ++i) {
    p += mu[i] * folded[i];
    s[i] = folded[i] / (f[i] - 1);
  }
  // argmax with ties to the lowest index, and the runner-up value
  int best = 0;
  for (int i = 1; i < k; ++i) {
    if (s[i] > s[best]) best = i;
  }
  const Rational& a = s[best];
  Rational b;
  bool have_b = false;
  for (int i = 0; i < k; ++i) {
    if (i == best) continue;
    if (!have_b || s[i] > b) b = s[i];
    have_b = true;
  }
  if (counter != nullptr) counter->steps += 3 * k;

  const Rational fm1 = f[best] - 1;
  const Rational lambda =
      (folded[best] * q - fm1 * p) / (mu[best] * fm1 - q);
  auto along_axis = [&](const Integer& step) {
    const Rational t(step);
    Rational value = (p + mu[best] * t) / q;
    const Rational axis_term = (folded[best] + t) / fm1;
    if (axis_term > value) value = axis_term;
    if (b > value) value = b;
    return value;
  };
  Rational result = along_axis(Ceil(lambda));
  const Rational down = along_axis(Floor(lambda));
  if (down < result) result = down;
  Rational stay = p / q;
  if (a > stay) stay = a;
  if (stay < result) result = stay;
  return result;
}

Rational EvalPiKdOracle(const RationalVector& f, const RationalVector& mu,
                        const RationalVector& r, int64_t radius) {
  const int k = static_cast<int>(f.size());
  if (k < 1 || static_cast<int>(mu.size()) != k ||
      static_cast<int>(r.size()) != k) {
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  }
  if (radius < 1) throw Error(ErrorCode::kInvalidArgument, "radius < 1");
  Rational sum = 0;
  Rational q = 0;
  for (int i = 0; i < k; ++i) {
    if (mu[i] < 0) Fail("mu has a negative component");
    if (f[i] < 0 || f[i] >= 1) Fail("f component not in [0,1)");
    sum += mu[i];
    q += mu[i] * f[i];
  }
  if (sum != 1) Fail("mu does not sum to 1");
  if (q == 0) {
    throw Error(ErrorCode::kDegenerateDirection,
                "<mu, f> = 0; a^0 is undefined");
  }

  const RationalVector folded = Fold(f, r);
  RationalVector inv_fm1(k);
  for (int i = 0; i < k; ++i) inv_fm1[i] = 1 / (f[i] - 1);
  const Rational rad(radius);

  // Coordinates with mu_i = 0 only enter through the decreasing term
  // (rbar_i + z_i)/(f_i - 1), so z_i = radius is optimal for them.
  Rational fixed_max;
  bool have_fixed = false;
  std::vector<int> free_coords;
  Rational base_sum = 0;  // sum over all i of mu_i * rbar_i
  for (int i = 0; i < k; ++i) {
    base_sum += mu[i] * folded[i];
    if (mu[i] == 0) {
      const Rational term = (folded[i] + rad) * inv_fm1[i];
      if (!have_fixed || term > fixed_max) fixed_max = term;
      have_fixed = true;
    } else {
      free_coords.push_back(i);
    }
  }

  auto gauge_at_zero = [&]() {
    Rational value = base_sum / q;
    for (int i : free_coords) {
      const Rational term = folded[i] * inv_fm1[i];
      if (term > value) value = term;
    }
    if (have_fixed && fixed_max > value) value = fixed_max;
    return value;
  };
  Rational best = gauge_at_zero();

  // Smallest z_i keeping (rbar_i + z_i)/(f_i - 1) <= best.
  auto lower = [&](int i) {
    Integer lo = Ceil(best * (f[i] - 1) - folded[i]);
    if (lo < -radius) lo = -radius;
    return lo;
  };

  const int depth_count = static_cast<int>(free_coords.size());
  // mu-weighted sum over assigned coordinates of z_i
  std::vector<Integer> z(depth_count);

  // Depth-first over the free coordinates; `weighted` is sum mu_i z_i over
  // assigned ones and `term_max` the largest axis term among them.
  auto search = [&](auto&& self, int depth, const Rational& weighted,
                    const Rational& term_max, bool have_term) -> void {
    if (have_term && term_max >= best) return;
    if (depth == depth_count) {
      Rational value = (base_sum + weighted) / q;
      if (have_term && term_max > value) value = term_max;
      if (have_fixed && fixed_max > value) value = fixed_max;
      if (value < best) best = value;
      return;
    }
    const int i = free_coords[depth];
    for (Integer zi = lower(i);; ++zi) {
      // <a^0, x> <= best bounds sum mu_j z_j from above; the unassigned
      // coordinates contribute at least mu_j * lower(j).
      Rational rest = 0;
      for (int d = depth + 1; d < depth_count; ++d) {
        const int j = free_coords[d];
        rest += mu[j] * Rational(lower(j));
      }
      const Rational budget = best * q - base_sum - weighted - rest;
      if (mu[i] * zi > budget || zi > radius) break;
      const Rational term = (folded[i] + Rational(zi)) * inv_fm1[i];
      const bool replace = !have_term || term > term_max;
      self(self, depth + 1, weighted + mu[i] * zi,
           replace ? term : term_max, true);
    }
  };
  search(search, 0, Rational(0), Rational(0), false);
  return best;
}

int64_t OracleRadius(const Rational& tau) {
  return Ceil(tau).get_si() + 1;
}

std::vector<RationalVector> SampleSimplex(int k, int count,
                                          const Rational& tau, uint64_t seed) {
  if (k < 1 || count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k and count must be >= 1");
  }
  if (tau < k) Fail("tau must be >= k");
  std::vector<RationalVector> out;
  out.push_back(RationalVector(k, Ratio(1, k)));
  const Integer grid = Integer(1) << 32;
  const Rational floor_mu = 1 / tau;
  const Rational spread = 1 - k / tau;
  SplitMix64 rng(seed);
  std::vector<Integer> cuts(k - 1);
  while (static_cast<int>(out.size()) < count) {
    for (auto& c : cuts) c = Integer(static_cast<unsigned long>(rng.Next() >> 32));
    std::sort(cuts.begin(), cuts.end());
    RationalVector mu(k);
    Integer prev = 0;
    for (int i = 0; i < k; ++i) {
      const Integer next = i + 1 < k ? cuts[i] : grid;
      mu[i] = floor_mu + spread * Ratio(next - prev, grid);
      prev = next;
    }
    out.push_back(std::move(mu));
  }
  return out;
}

ValidityReport CheckValidityKd(const MultiDimCgf& cgf, int sample_count,
                               uint64_t seed) {
  const int k = cgf.k();
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kValidityViolation, what);
  };
  ValidityReport report;
  const RationalVector zero(k, Rational(0));
  if (EvalPiKd(cgf, zero) != 0) fail("pi(0) != 0");
  if (EvalPiKd(cgf, cgf.f()) != 1) {
    fail("pi(f) = " + ToString(EvalPiKd(cgf, cgf.f())));
  }
  const Integer f_den = DenominatorLcm(cgf.f());
  const int structured_den =
      f_den.fits_sint_p() && f_den.get_si() <= 1000
          ? static_cast<int>(f_den.get_si())
          : 1000;
  SplitMix64 rng(seed);
  auto draw = [&]() {
    RationalVector v(k);
    const bool structured = rng.Next() & 1;
    for (auto& x : v) {
      if (structured) {
        const int64_t den = structured_den * rng.UniformInt(1, 4);
        x = Ratio(rng.UniformInt(-2 * den, 2 * den), den);
      } else {
        x = SampleRational(rng, 48, 2);
      }
    }
    return v;
  };
  RationalVector shifted(k), sum(k);
  for (int s = 0; s < sample_count; ++s) {
    const RationalVector r = draw();
    const RationalVector r2 = draw();
    const Rational pr = EvalPiKd(cgf, r);
    const Rational pr2 = EvalPiKd(cgf, r2);
    if (pr < 0) fail("pi" + VecText(r) + " = " + ToString(pr) + " < 0");
    ++report.nonnegativity_checks;
    for (int i = 0; i < k; ++i) shifted[i] = r[i] + rng.UniformInt(-3, 3);
    const Rational ps = EvalPiKd(cgf, shifted);
    if (ps != pr) {
      fail("periodicity: pi" + VecText(r) + " = " + ToString(pr) + " but pi" +
           VecText(shifted) + " = " + ToString(ps));
    }
    ++report.periodicity_checks;
    for (int i = 0; i < k; ++i) sum[i] = r[i] + r2[i];
    const Rational psum = EvalPiKd(cgf, sum);
    if (pr + pr2 < psum) {
      fail("subadditivity: r = " + VecText(r) + ", r' = " + VecText(r2) +
           ", pi(r) + pi(r') = " + ToString(pr + pr2) + " < pi(r + r') = " +
           ToString(psum));
    }
    ++report.subadditivity_checks;
  }
  return report;
}

void WriteMuCsv(std::ostream& out, const std::vector<RationalVector>& mus) {
  for (const auto& mu : mus) out << JoinRationals(mu, ",") << '\n';
}

std::vector<RationalVector> ReadMuCsv(std::istream& in) {
  std::vector<RationalVector> mus;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    RationalVector mu;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const auto b = field.find_first_not_of(" \t\r");
      const auto e = field.find_last_not_of(" \t\r");
      if (b == std::string::npos) {
        throw Error(ErrorCode::kParseError, "empty field in mu CSV");
      }
      mu.push_back(ParseRational(field.substr(b, e - b + 1)));
    }
    if (!mus.empty() && mu.size() != mus.front().size()) {
      throw Error(ErrorCode::kParseError, "ragged mu CSV");
    }
    mus.push_back(std::move(mu));
  }
  return mus;
}

}  // namespace cgftune
