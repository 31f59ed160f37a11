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

#ifndef CGFTUNE_VALIDITY_H_
#define CGFTUNE_VALIDITY_H_

#include <cstdint>

#include "cgftune/rational.h"
#include "cgftune/rng.h"

namespace cgftune {

// Counts of exact checks performed by a CGF validity run. A run that finds
// a violation throws Error(kValidityViolation) with the witness instead.
struct ValidityReport {
  int64_t nonnegativity_checks = 0;
  int64_t periodicity_checks = 0;
  int64_t subadditivity_checks = 0;
};

// Random rational a/d with d uniform in [1, max_denominator] and a drawn so
// that |a/d| <= magnitude. Used to generate validity witnesses.
Rational SampleRational(SplitMix64& rng, int max_denominator,
                        int64_t magnitude);

}  // namespace cgftune

#endif  // CGFTUNE_VALIDITY_H_
