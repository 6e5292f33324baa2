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

#ifndef SURFMATCH_LAYOUT_H
#define SURFMATCH_LAYOUT_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "surfmatch/pauli.h"

namespace surfmatch {

enum class QubitKind : uint8_t { Data, ZAncilla, XAncilla };
enum class StabKind : uint8_t { Z, X };
enum class MemoryBasis : uint8_t { Z, X };

// The stabilizer type whose outcomes are deterministic in a given memory
// experiment: Z stabilizers for |0..0> memory, X stabilizers for |+..+>.
inline StabKind memory_stab_kind(MemoryBasis basis) {
    return basis == MemoryBasis::Z ? StabKind::Z : StabKind::X;
}

struct Coord {
    int16_t x = 0;
    int16_t y = 0;
    bool operator==(const Coord&) const = default;
};

// Distance-d planar surface code on the (2d-1) x (2d-1) integer grid.
//
// Coordinate convention (fixed; the lattice export depends on it):
//   - x runs west->east, y runs north->south, both in [0, 2d-2].
//   - data qubits sit on (even,even) and (odd,odd) positions,
//   - Z ancillas on (even,odd), X ancillas on (odd,even).
// Z stabilizer rows are truncated at the west/east edges, X stabilizers at
// north/south. The logical Z support is the y=0 data row (west-east), the
// logical X support the x=0 data column (north-south); they overlap in the
// single qubit at the origin.
struct Layout {
    int distance = 0;
    int grid = 0;  // 2d-1

    std::vector<Coord> coords;      // by qubit id
    std::vector<QubitKind> kinds;   // by qubit id
    std::vector<QubitId> data_qubits;
    std::vector<QubitId> z_ancillas;
    std::vector<QubitId> x_ancillas;

    // Per ancilla: data neighbors in interaction order N, W, E, S; -1 where
    // the boundary removes a neighbor. Empty entries for data qubits.
    std::vector<std::array<QubitId, 4>> neighbors;

    // Dense ordinals used to index per-ancilla / per-data arrays.
    std::vector<int32_t> ancilla_ordinal;  // by qubit id, -1 for data
    std::vector<int32_t> data_ordinal;     // by qubit id, -1 for ancillas

    std::vector<QubitId> logical_z_support;
    std::vector<QubitId> logical_x_support;

    size_t num_qubits() const { return coords.size(); }
    size_t num_ancillas() const { return z_ancillas.size() + x_ancillas.size(); }

    QubitId at(int x, int y) const;  // -1 if outside the grid
    bool is_ancilla(QubitId q) const { return kinds[q] != QubitKind::Data; }
    StabKind stab_kind(QubitId ancilla) const {
        return kinds[ancilla] == QubitKind::ZAncilla ? StabKind::Z : StabKind::X;
    }
    const std::vector<QubitId>& ancillas_of(StabKind k) const {
        return k == StabKind::Z ? z_ancillas : x_ancillas;
    }
    const std::vector<QubitId>& logical_support(MemoryBasis basis) const {
        return basis == MemoryBasis::Z ? logical_z_support : logical_x_support;
    }
};

Layout build_layout(int distance);

// ASCII map of the grid (D = data, Z/X = ancillas), one grid row per line.
std::string layout_text_map(const Layout& layout);

enum class GateKind : uint8_t {
    Init0,
    InitPlus,
    Hadamard,
    Cx,
    MeasureZ,
    MeasureX,
    Idle,
};

struct GateRecord {
    GateKind kind;
    QubitId q0;       // the acted qubit; control for Cx
    QubitId q1 = -1;  // target for Cx, unused otherwise
    bool operator==(const GateRecord&) const = default;
};

// One error-detection round. Every qubit appears in exactly one record per
// timestep (idle if not otherwise engaged), so all stabilizer circuits run
// at uniform depth.
struct GateSchedule {
    std::vector<std::vector<GateRecord>> timesteps;
    bool operator==(const GateSchedule&) const = default;
};

// Emits the eight-step round:
//   0: ancilla init |0>            (data idle)
//   1: H on X ancillas             (Z ancillas, data idle)
//   2-5: CX sweeps in N, W, E, S order; Z ancillas are CX targets with the
//        data qubit as control, X ancillas are controls
//   6: H on X ancillas             (Z ancillas, data idle)
//   7: ancilla Z-basis measurement (data idle)
GateSchedule build_round_schedule(const Layout& layout);

// Count of fault kinds the error model attaches to one gate record.
int fault_kinds_for_gate(GateKind kind);

}  // namespace surfmatch

#endif
