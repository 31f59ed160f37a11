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

#include "cgftune/rational.h"

#include <cctype>
#include <string>

#include "cgftune/error.h"

namespace cgftune {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonIntegerData: return "NonIntegerData";
    case ErrorCode::kUnboundedFeasibleSet: return "UnboundedFeasibleSet";
    case ErrorCode::kSingularBasis: return "SingularBasis";
    case ErrorCode::kPivotLimitExceeded: return "PivotLimitExceeded";
    case ErrorCode::kInsufficientFractionalRows:
      return "InsufficientFractionalRows";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kValidityViolation: return "ValidityViolation";
    case ErrorCode::kDegenerateDirection: return "DegenerateDirection";
    case ErrorCode::kNegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::kInfeasibleCut: return "InfeasibleCutError";
    case ErrorCode::kCutContractViolation: return "CutContractViolation";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kNotApplicableStrategy: return "NotApplicableStrategy";
  }
  return "UnknownError";
}

Rational Ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Integer Floor(const Rational& x) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return result;
}

Integer Ceil(const Rational& x) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return result;
}

Rational FracPart(const Rational& x) { return x - Rational(Floor(x)); }

Integer DenominatorLcm(std::span<const Rational> values) {
  Integer lcm = 1;
  for (const Rational& v : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  return lcm;
}

namespace {

bool IsSignedDigits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsSignedDigits(num) || !IsSignedDigits(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::kParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Rational value;
  value.get_num() = Integer(num_str, 10);
  value.get_den() = Integer(std::string(den), 10);
  if (value.get_den() == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

std::string ToString(const Rational& x) { return x.get_str(10); }

std::string FormatDecimal(const Rational& x, int digits) {
  Integer scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = abs(x) * scale;
  // round half away from zero: floor(|x| * 10^d + 1/2)
  Integer rounded = Floor(scaled + Rational(1, 2));
  std::string body = rounded.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<size_t>(digits)) {
      body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  if (x < 0 && rounded != 0) body.insert(0, "-");
  return body;
}

std::string JoinRationals(std::span<const Rational> values,
                          std::string_view separator) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += separator;
    out += ToString(values[i]);
  }
  return out;
}

}  // namespace cgftune
