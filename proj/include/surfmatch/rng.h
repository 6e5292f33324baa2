// Copyright 2026 surfmatch contributors
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

#ifndef SURFMATCH_RNG_H
#define SURFMATCH_RNG_H

#include <cstdint>

namespace surfmatch::rng {

// Counter-based generator built on the splitmix64 finalizer. Output for a
// given (key, counter) never depends on call order, so Monte Carlo shots can
// be partitioned across workers without changing results.
inline uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t at(uint64_t key, uint64_t counter) {
    return mix(key + (counter + 1) * 0x9e3779b97f4a7c15ull);
}

// Stream key for one shot, derived from the master seed and shot index.
inline uint64_t shot_key(uint64_t master_seed, uint64_t shot_index) {
    return mix(master_seed ^ mix(shot_index + 0x632be59bd9b4e019ull));
}

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace surfmatch::rng

#endif
