// Copyright 2026 tcslab contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace tcs {

// splitmix64 step. Used both as a mixer for deriving stream seeds and as
// the state transition of Rng, so results are reproducible across
// platforms and standard-library versions.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from a base seed and salts. All
// randomness in the project flows through this, so a run is a pure
// function of the base seed regardless of thread count or trial order.
inline uint64_t derive_seed(uint64_t base, uint64_t salt_a, uint64_t salt_b = 0,
                            uint64_t salt_c = 0) {
    uint64_t s = base;
    s ^= 0xd1b54a32d192ed03ULL + salt_a;
    (void)splitmix64(s);
    s ^= 0x8cb92ba72f3d8dd7ULL + salt_b;
    (void)splitmix64(s);
    s ^= 0x2545f4914f6cdd1dULL + salt_c;
    uint64_t t = s;
    return splitmix64(t);
}

// Minimal deterministic RNG (splitmix64 stream).
class Rng {
   public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bool() { return (next_u64() >> 63) != 0; }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, n). Rejection-free modulo is fine here: n is always
    // tiny compared to 2^64 and determinism matters more than the
    // (immeasurable) modulo bias.
    uint64_t next_below(uint64_t n) { return next_u64() % n; }

   private:
    uint64_t state_;
};

}  // namespace tcs
