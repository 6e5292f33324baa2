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

#ifndef SURFMATCH_ORACLES_H
#define SURFMATCH_ORACLES_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "surfmatch/matching.h"

namespace surfmatch {

// Exhaustive minimum-weight perfect matching by enumerating all pairings.
// Plain problems are limited to 12 nodes. For companion-structured problems
// the enumeration branches on events only (once every event is resolved the
// leftover companions pair at weight zero, which is always optimal), so the
// guard is 12 events there. Guards are hard errors, not truncation.
Matching brute_force_matching(const MatchingProblem& problem);

struct PathEnumeration {
    int n = 0;  // dot planes between the opposing boundaries
    int m = 0;  // path length in lines, boundary lines counted as 1 each
    int64_t count = 0;
    std::array<int64_t, 3> per_face = {0, 0, 0};
    std::string note;
};

// Non-backtracking boundary-to-opposing-boundary paths of exactly m lines
// in the synthetic n^3 dot volume whose bulk connectivity is the lattice's
// 12-neighbor template (6 axis steps plus the 6 schedule-induced diagonal
// steps). A path enters through one of three chosen faces (x=0, y=0, t=0),
// makes m-2 dot steps, and exits through the opposing face. Guards: n <= 4,
// m <= 7.
PathEnumeration enumerate_paths_volume(int n, int m);

// Same count on a real lattice: enter by a low-side boundary line, take
// m-2 dot-to-dot lines without immediate reversal, exit by a high-side
// boundary line. Reports n = distance - 1 (the dot planes crossed).
PathEnumeration enumerate_paths_lattice(const Lattice& lattice, int m);

// Decode every fault combination up to max_weight and count logical
// failures by weight. Enumeration size is capped; exceeding the cap is an
// error rather than a silent truncation.
struct SweepCensus {
    int distance = 0;
    int rounds = 0;
    int max_weight = 0;
    std::vector<int64_t> combos;    // index = weight
    std::vector<int64_t> failures;  // index = weight

    std::string csv() const;
};

SweepCensus exhaustive_fault_sweep(const Layout& layout,
                                   const GateSchedule& schedule, int rounds,
                                   int max_weight, MemoryBasis basis,
                                   int64_t combo_cap = 5000000);

// Random weight-w fault subsets instead of all of them; same census shape.
SweepCensus sampled_fault_sweep(const Layout& layout,
                                const GateSchedule& schedule, int rounds,
                                int weight, int64_t samples, uint64_t seed,
                                MemoryBasis basis);

}  // namespace surfmatch

#endif
