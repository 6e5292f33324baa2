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

#ifndef SURFMATCH_BLOSSOM_H
#define SURFMATCH_BLOSSOM_H

#include <cstdint>
#include <vector>

namespace surfmatch {

// Exact minimum-weight perfect matching on a general graph, via the
// primal-dual blossom algorithm (odd cycles contracted into blossoms with
// their own dual variables). Dense O(n^3); instances here are small.
//
// `weights` is an n*n row-major matrix; entries < 0 mark absent edges,
// entries >= 0 (zero allowed) are edge weights. Throws std::runtime_error
// if no perfect matching over present edges exists. Returns mate[v] for
// every vertex v.
std::vector<int32_t> min_weight_perfect_matching(
    int n, const std::vector<int64_t>& weights);

}  // namespace surfmatch

#endif
