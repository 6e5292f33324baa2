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

#ifndef SURFMATCH_NOISE_H
#define SURFMATCH_NOISE_H

#include <cstdint>
#include <string>
#include <vector>

#include "surfmatch/layout.h"

namespace surfmatch {

// Error model, with every channel scaled by the one global rate p:
//   - init reports the orthogonal state with probability p,
//   - measurement reports the wrong eigenstate with probability p,
//   - H and idle are followed by X, Y or Z, each with probability p/3,
//   - CX is followed by one of the 15 nontrivial two-qubit Paulis, each
//     with probability p/15.
// Faults land after the gate they decorate.
enum class FaultKind : uint8_t { InitFlip, MeasFlip, Pauli1, Pauli2 };

// Pauli payloads are 2-bit codes per qubit: bit0 = X part, bit1 = Z part
// (1=X, 2=Z, 3=Y). Two-qubit payloads pack (first_qubit << 2) | second,
// where "first" is the CX control.
struct FaultLocation {
    int32_t round = 0;
    int16_t timestep = 0;
    int32_t gate_index = 0;  // index into the timestep's record list
    FaultKind kind = FaultKind::Pauli1;
    uint8_t pauli = 0;

    bool operator==(const FaultLocation&) const = default;
    auto operator<=>(const FaultLocation&) const = default;
};

// Unique locations, kept sorted by (round, timestep, gate_index).
using FaultSet = std::vector<FaultLocation>;

struct WeightedFault {
    FaultLocation loc;
    int coeff_fifteenths;  // first-order probability = coeff/15 * p
};

// Every possible single fault of the rounds-fold schedule, each exactly
// once, in (round, timestep, gate, kind) order.
std::vector<WeightedFault> enumerate_single_faults(const Layout& layout,
                                                   const GateSchedule& schedule,
                                                   int rounds);

// Total number of fault locations (without materializing them).
int64_t count_fault_locations(const GateSchedule& schedule, int rounds);

// Each gate location independently faults with total probability p; the
// kind is uniform among the location's compatible kinds. Identical
// (layout, schedule, rounds, p, seed) give bit-identical results.
FaultSet sample_faults(const Layout& layout, const GateSchedule& schedule,
                       int rounds, double p, uint64_t seed);

// Line-oriented replay format: a header with the run parameters followed
// by one `fault <round> <timestep> <gate> <kind> [<pauli>]` line per fault.
struct FaultDump {
    int distance = 0;
    int rounds = 0;
    MemoryBasis basis = MemoryBasis::Z;
    uint64_t seed = 0;
    uint64_t shot = 0;
    FaultSet faults;
};

std::string format_fault_dump(const FaultDump& dump);
FaultDump parse_fault_dump(const std::string& text);

std::string fault_kind_name(FaultKind kind);
std::string pauli_name(uint8_t code);  // 1->X, 2->Z, 3->Y

}  // namespace surfmatch

#endif
