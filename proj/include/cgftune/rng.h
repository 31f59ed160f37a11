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

#ifndef CGFTUNE_RNG_H_
#define CGFTUNE_RNG_H_

#include <cstdint>

namespace cgftune {

// SplitMix64 (Steele, Lea, Flood 2014). The state is a Weyl counter advanced
// by the golden-ratio increment; each output is the counter passed through a
// fixed 64-bit finalizer. Output is bit-identical on every platform, which
// the standard library engines/distributions do not guarantee.
class SplitMix64 {
 public:
  static constexpr uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;
  static constexpr uint64_t kMul1 = 0xBF58476D1CE4E5B9ULL;
  static constexpr uint64_t kMul2 = 0x94D049BB133111EBULL;

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    state_ += kIncrement;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * kMul1;
    z = (z ^ (z >> 27)) * kMul2;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi] by rejection, so no modulo bias. Requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi) {
    const uint64_t range = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
    if (range == UINT64_MAX) return static_cast<int64_t>(Next());
    const uint64_t span = range + 1;
    const uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
    uint64_t draw;
    do {
      draw = Next();
    } while (draw > limit);
    return static_cast<int64_t>(static_cast<uint64_t>(lo) + draw % span);
  }

 private:
  uint64_t state_;
};

}  // namespace cgftune

#endif  // CGFTUNE_RNG_H_
