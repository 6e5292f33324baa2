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

#include "surfmatch/syndrome.h"

#include <algorithm>
#include <stdexcept>

namespace surfmatch {

MeasurementRecord& MeasurementRecord::operator^=(const MeasurementRecord& other) {
    if (rounds != other.rounds || basis != other.basis ||
        ancilla_flips.size() != other.ancilla_flips.size() ||
        final_data_flips.size() != other.final_data_flips.size()) {
        throw std::invalid_argument("record shape mismatch in composition");
    }
    for (size_t i = 0; i < ancilla_flips.size(); ++i)
        ancilla_flips[i] ^= other.ancilla_flips[i];
    for (size_t i = 0; i < final_data_flips.size(); ++i)
        final_data_flips[i] ^= other.final_data_flips[i];
    return *this;
}

namespace {

struct FrameBits {
    std::vector<uint8_t> x;
    std::vector<uint8_t> z;
};

inline void apply_pauli(FrameBits& f, QubitId q, uint8_t code) {
    f.x[q] ^= code & 1;
    f.z[q] ^= (code >> 1) & 1;
}

}  // namespace

MeasurementRecord run_shot(const Layout& layout, const GateSchedule& schedule,
                           const FaultSet& faults, int rounds, MemoryBasis basis) {
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be >= 1");
    }
    const size_t n_anc = layout.num_ancillas();
    MeasurementRecord rec;
    rec.rounds = rounds;
    rec.basis = basis;
    rec.ancilla_flips.assign(static_cast<size_t>(rounds) * n_anc, 0);
    rec.final_data_flips.assign(layout.data_qubits.size(), 0);

    FrameBits frame;
    frame.x.assign(layout.num_qubits(), 0);
    frame.z.assign(layout.num_qubits(), 0);

    // Faults are sorted by location; walk a cursor alongside the schedule.
    FaultSet sorted;
    const FaultSet* fs = &faults;
    if (!std::is_sorted(faults.begin(), faults.end())) {
        sorted = faults;
        std::sort(sorted.begin(), sorted.end());
        fs = &sorted;
    }
    size_t cursor = 0;

    for (int r = 0; r < rounds; ++r) {
        for (size_t ts = 0; ts < schedule.timesteps.size(); ++ts) {
            const auto& step = schedule.timesteps[ts];
            for (size_t g = 0; g < step.size(); ++g) {
                const GateRecord& gate = step[g];
                uint8_t meas_flip = 0;
                switch (gate.kind) {
                    case GateKind::Init0:
                    case GateKind::InitPlus:
                        frame.x[gate.q0] = 0;
                        frame.z[gate.q0] = 0;
                        break;
                    case GateKind::Hadamard:
                        std::swap(frame.x[gate.q0], frame.z[gate.q0]);
                        break;
                    case GateKind::Cx:
                        frame.x[gate.q1] ^= frame.x[gate.q0];
                        frame.z[gate.q0] ^= frame.z[gate.q1];
                        break;
                    case GateKind::MeasureZ:
                        meas_flip = frame.x[gate.q0];
                        break;
                    case GateKind::MeasureX:
                        meas_flip = frame.z[gate.q0];
                        break;
                    case GateKind::Idle:
                        break;
                }
                while (cursor < fs->size() && (*fs)[cursor].round == r &&
                       (*fs)[cursor].timestep == static_cast<int>(ts) &&
                       (*fs)[cursor].gate_index == static_cast<int>(g)) {
                    const FaultLocation& f = (*fs)[cursor];
                    switch (f.kind) {
                        case FaultKind::InitFlip:
                            if (gate.kind == GateKind::InitPlus) {
                                frame.z[gate.q0] ^= 1;
                            } else {
                                frame.x[gate.q0] ^= 1;
                            }
                            break;
                        case FaultKind::MeasFlip:
                            meas_flip ^= 1;
                            break;
                        case FaultKind::Pauli1:
                            apply_pauli(frame, gate.q0, f.pauli);
                            break;
                        case FaultKind::Pauli2:
                            apply_pauli(frame, gate.q0, f.pauli >> 2);
                            apply_pauli(frame, gate.q1, f.pauli & 3);
                            break;
                    }
                    ++cursor;
                }
                if (gate.kind == GateKind::MeasureZ ||
                    gate.kind == GateKind::MeasureX) {
                    rec.ancilla_flips[static_cast<size_t>(r) * n_anc +
                                      layout.ancilla_ordinal[gate.q0]] = meas_flip;
                }
            }
        }
    }
    if (cursor != fs->size()) {
        throw std::invalid_argument("fault location outside the schedule volume");
    }

    for (QubitId q : layout.data_qubits) {
        rec.final_data_flips[layout.data_ordinal[q]] =
            basis == MemoryBasis::Z ? frame.x[q] : frame.z[q];
    }
    return rec;
}

DetectionSet extract_detection_events(const MeasurementRecord& record,
                                      const Layout& layout) {
    const size_t n_anc = layout.num_ancillas();
    if (record.ancilla_flips.size() !=
            static_cast<size_t>(record.rounds) * n_anc ||
        record.final_data_flips.size() != layout.data_qubits.size()) {
        throw std::invalid_argument("record does not match layout");
    }
    const StabKind mem_kind = memory_stab_kind(record.basis);
    const int rounds = record.rounds;
    DetectionSet out;

    auto emit = [&](QubitId a, int slot) {
        out.push_back(DetectionPoint{layout.stab_kind(a), layout.coords[a].x,
                                     layout.coords[a].y, slot});
    };

    for (QubitId a = 0; a < static_cast<QubitId>(layout.num_qubits()); ++a) {
        if (!layout.is_ancilla(a)) continue;
        const int32_t ord = layout.ancilla_ordinal[a];
        const bool is_mem = layout.stab_kind(a) == mem_kind;
        uint8_t prev;
        if (is_mem) {
            // Deterministic initial value; in flip encoding it is 0.
            prev = 0;
            if (record.flip(0, ord, n_anc) ^ prev) emit(a, 0);
        }
        prev = record.flip(0, ord, n_anc);
        for (int r = 1; r < rounds; ++r) {
            uint8_t cur = record.flip(r, ord, n_anc);
            if (cur ^ prev) emit(a, r);
            prev = cur;
        }
        if (is_mem) {
            uint8_t reconstructed = 0;
            for (QubitId d : layout.neighbors[a]) {
                if (d >= 0) reconstructed ^= record.final_data_flips[layout.data_ordinal[d]];
            }
            if (reconstructed ^ prev) emit(a, rounds);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool raw_logical_flip(const MeasurementRecord& record, const Layout& layout) {
    uint8_t parity = 0;
    for (QubitId q : layout.logical_support(record.basis)) {
        parity ^= record.final_data_flips[layout.data_ordinal[q]];
    }
    return parity != 0;
}

DetectionSet detection_xor(const DetectionSet& a, const DetectionSet& b) {
    DetectionSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

}  // namespace surfmatch
