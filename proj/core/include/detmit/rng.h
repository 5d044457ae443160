// Copyright 2026 The detmit Authors
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

#ifndef DETMIT_RNG_H
#define DETMIT_RNG_H

#include <cstdint>

namespace detmit {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based generator: the stream for (seed, stream, counter) is fixed,
/// so shot i draws the same numbers regardless of which thread runs it.
class CounterRng {
   public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
        : state_(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

   private:
    std::uint64_t state_;
};

/// Mixes a label into a 64-bit stream id (FNV-1a).
inline constexpr std::uint64_t stream_id(const char *label) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (; *label; ++label) {
        h ^= static_cast<unsigned char>(*label);
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace detmit

#endif
