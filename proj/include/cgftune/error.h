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

#ifndef CGFTUNE_ERROR_H_
#define CGFTUNE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgftune {

enum class ErrorCode {
  kParseError,
  kInvalidArgument,
  kNonIntegerData,
  kUnboundedFeasibleSet,
  kSingularBasis,
  kPivotLimitExceeded,
  kInsufficientFractionalRows,
  kInvalidParameters,
  kValidityViolation,
  kDegenerateDirection,
  kNegativeCoefficient,
  kInfeasibleCut,
  kCutContractViolation,
  kEnumerationTooLarge,
  kNotApplicableStrategy,
};

// Stable name used in CLI diagnostics, e.g. "UnboundedFeasibleSet".
std::string_view ErrorName(ErrorCode code);

// All library failures are reported through this exception type; the code
// identifies the failure class and what() carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cgftune

#endif  // CGFTUNE_ERROR_H_
