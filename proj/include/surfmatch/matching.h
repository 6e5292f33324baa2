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

#ifndef SURFMATCH_MATCHING_H
#define SURFMATCH_MATCHING_H

#include <cstdint>
#include <vector>

#include "surfmatch/lattice.h"

namespace surfmatch {

// Matching instance over detection events. Nodes 0..k-1 are the events;
// when with_companions is set, node k+i is event i's boundary companion:
// the event-companion edge carries the event's distance to the nearest
// boundary, companions are pairwise connected at weight zero, and an event
// may not use another event's companion. Weight -1 marks a missing edge.
struct MatchingProblem {
    int num_events = 0;
    bool with_companions = false;
    std::vector<int64_t> weights;  // n*n row-major

    int num_nodes() const {
        return with_companions ? 2 * num_events : num_events;
    }
    int64_t weight(int u, int v) const {
        return weights[static_cast<size_t>(u) * num_nodes() + v];
    }

    static MatchingProblem plain(int num_nodes, std::vector<int64_t> weights);
};

// Pairing of every node exactly once; companion-companion pairs carry no
// physical meaning. total_weight counts every pair's edge weight.
struct Matching {
    std::vector<std::pair<int32_t, int32_t>> pairs;  // u < v, by node index
    int64_t total_weight = 0;
};

// Unit-weight shortest path length between two dots (BFS), or from a dot to
// the nearest spatial boundary when b is -1; boundary lines count one step.
int64_t shortest_path_weight(const Lattice& lattice, int32_t a, int32_t b);

MatchingProblem build_matching_problem(const Lattice& lattice,
                                       const std::vector<int32_t>& event_dots);

// Exact minimum-weight perfect matching of the problem.
Matching solve_matching(const MatchingProblem& problem);

// Convenience: events of the lattice's type, matched on the lattice.
// Detection points of other types are rejected.
Matching decode(const Lattice& lattice, const DetectionSet& detections);
std::vector<int32_t> detection_dots(const Lattice& lattice,
                                    const DetectionSet& detections);

// The correction induced by a matching: one concrete shortest path of
// lines per matched pair (lines XOR-cancel when paths overlap). Space-like
// lines correspond to Pauli corrections on data qubits, time-like lines to
// measurement-record reinterpretations; logical_flip accumulates each
// line's effect on the memory-basis logical readout. Ties between equal
// length paths break toward lexicographically smaller dot ids.
struct CorrectionSet {
    std::vector<int32_t> line_ids;
    uint8_t logical_flip = 0;
};

CorrectionSet correction_from_matching(const Lattice& lattice,
                                       const Matching& matching,
                                       const std::vector<int32_t>& event_dots);

// Detection events left after applying the correction to the record's
// events of the lattice type: empty iff the correction explains the shot.
DetectionSet residual_detections(const Lattice& lattice, const Layout& layout,
                                 const GateSchedule& schedule,
                                 const DetectionSet& observed,
                                 const CorrectionSet& correction, int rounds);

// True iff faults plus correction flip the memory-basis logical readout.
bool logical_failure(const Layout& layout, const GateSchedule& schedule,
                     const FaultSet& faults, const CorrectionSet& correction,
                     int rounds, MemoryBasis basis);

// Same, reusing an existing record of the faults.
bool logical_failure(const MeasurementRecord& record, const Layout& layout,
                     const CorrectionSet& correction);

}  // namespace surfmatch

#endif
