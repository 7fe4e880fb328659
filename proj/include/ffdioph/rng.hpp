// Copyright 2026 The ffdioph Authors
//
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

#ifndef FFDIOPH_RNG_HPP_
#define FFDIOPH_RNG_HPP_

#include <cstdint>

namespace ffdioph {

// Deterministic, platform-independent generator (xoshiro256**), seeded via
// splitmix64.  Every random draw in the library goes through this type so that
// a (seed, stream) pair pins the exact byte stream on every platform; the
// standard <random> distributions are avoided on purpose, since their output
// is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& w : s_) w = SplitMix64(&x);
  }

  // Independent stream derivation: trial i of a run with master seed m uses
  // Rng::Stream(m, i).  Streams are decorrelated by hashing, not by jumping,
  // which keeps derivation stateless and order-independent.
  static Rng Stream(uint64_t master_seed, uint64_t stream_index) {
    uint64_t x = master_seed;
    uint64_t a = SplitMix64(&x);
    uint64_t y = stream_index + 0x9e3779b97f4a7c15ULL;
    uint64_t b = SplitMix64(&y);
    return Rng(a ^ (b + 0x632be59bd9b4e019ULL + (a << 6) + (a >> 2)));
  }

  uint64_t Next() {
    const uint64_t result = Rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = Rotl(s_[3], 45);
    return result;
  }

  // Unbiased uniform draw from [0, bound) by rejection.
  uint32_t Below(uint32_t bound) {
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
    uint64_t v = Next();
    while (v >= limit) v = Next();
    return static_cast<uint32_t>(v % bound);
  }

 private:
  static uint64_t Rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static uint64_t SplitMix64(uint64_t* state) {
    uint64_t z = (*state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t s_[4];
};

}  // namespace ffdioph

#endif  // FFDIOPH_RNG_HPP_
