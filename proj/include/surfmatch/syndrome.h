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

#ifndef SURFMATCH_SYNDROME_H
#define SURFMATCH_SYNDROME_H

#include <cstdint>
#include <vector>

#include "surfmatch/layout.h"
#include "surfmatch/noise.h"

namespace surfmatch {

// Outcomes are stored relative to the noiseless reference trajectory: a 0
// means the measurement matched what a fault-free run would report. This is
// the natural encoding for frame simulation, where the reference is always
// the all-zero record.
struct MeasurementRecord {
    int rounds = 0;
    MemoryBasis basis = MemoryBasis::Z;
    // Flip bit per (round, ancilla ordinal), round-major.
    std::vector<uint8_t> ancilla_flips;
    // Flip bit per data ordinal for the final memory-basis readout. The
    // final readout itself is noiseless; it closes the time boundary.
    std::vector<uint8_t> final_data_flips;

    uint8_t flip(int round, int32_t ancilla_ordinal, size_t num_ancillas) const {
        return ancilla_flips[static_cast<size_t>(round) * num_ancillas +
                             ancilla_ordinal];
    }

    MeasurementRecord& operator^=(const MeasurementRecord& other);
    bool operator==(const MeasurementRecord&) const = default;
};

// A mismatch between sequential measurements of one stabilizer, located at
// the midpoint slot between them. Slot s in [1, rounds-1] compares rounds
// s-1 and s. For the memory-basis stabilizer type only, slot 0 compares
// round 0 against the deterministic initial value and slot `rounds`
// compares the last round against stabilizers reconstructed from the final
// data readout; the opposite type's first measurement serves as its own
// reference and has no time-boundary slots.
struct DetectionPoint {
    StabKind type = StabKind::Z;
    int16_t x = 0;
    int16_t y = 0;
    int32_t slot = 0;

    bool operator==(const DetectionPoint&) const = default;
    auto operator<=>(const DetectionPoint&) const = default;
};

using DetectionSet = std::vector<DetectionPoint>;  // kept sorted

// Frame simulation of `rounds` rounds followed by a noiseless data readout
// in the memory basis. Faults are applied after the gate at their location;
// the fault list may contain repeats (they compose by XOR).
MeasurementRecord run_shot(const Layout& layout, const GateSchedule& schedule,
                           const FaultSet& faults, int rounds, MemoryBasis basis);

DetectionSet extract_detection_events(const MeasurementRecord& record,
                                      const Layout& layout);

// Parity of the memory-basis logical readout flip: XOR of the final data
// flips over the logical operator support. This is the uncorrected logical
// error of whatever faults produced the record.
bool raw_logical_flip(const MeasurementRecord& record, const Layout& layout);

// Symmetric difference, for linearity checks and set algebra on events.
DetectionSet detection_xor(const DetectionSet& a, const DetectionSet& b);

}  // namespace surfmatch

#endif
