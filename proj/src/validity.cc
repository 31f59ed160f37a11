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

#include "cgftune/validity.h"

namespace cgftune {

Rational SampleRational(SplitMix64& rng, int max_denominator,
                        int64_t magnitude) {
  const int64_t den = rng.UniformInt(1, max_denominator);
  const int64_t num = rng.UniformInt(-magnitude * den, magnitude * den);
  return Ratio(num, den);
}

}  // namespace cgftune
