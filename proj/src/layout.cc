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

#include "surfmatch/layout.h"

#include <stdexcept>

namespace surfmatch {

QubitId Layout::at(int x, int y) const {
    if (x < 0 || y < 0 || x >= grid || y >= grid) return -1;
    return static_cast<QubitId>(y * grid + x);
}

Layout build_layout(int distance) {
    if (distance < 2) {
        throw std::invalid_argument("distance must be >= 2");
    }
    Layout lay;
    lay.distance = distance;
    lay.grid = 2 * distance - 1;

    const int g = lay.grid;
    lay.coords.resize(static_cast<size_t>(g) * g);
    lay.kinds.resize(lay.coords.size());
    lay.ancilla_ordinal.assign(lay.coords.size(), -1);
    lay.data_ordinal.assign(lay.coords.size(), -1);
    lay.neighbors.resize(lay.coords.size(), {-1, -1, -1, -1});

    for (int y = 0; y < g; ++y) {
        for (int x = 0; x < g; ++x) {
            QubitId q = lay.at(x, y);
            lay.coords[q] = Coord{static_cast<int16_t>(x), static_cast<int16_t>(y)};
            if ((x + y) % 2 == 0) {
                lay.kinds[q] = QubitKind::Data;
                lay.data_ordinal[q] = static_cast<int32_t>(lay.data_qubits.size());
                lay.data_qubits.push_back(q);
            } else if (x % 2 == 0) {
                lay.kinds[q] = QubitKind::ZAncilla;
                lay.z_ancillas.push_back(q);
            } else {
                lay.kinds[q] = QubitKind::XAncilla;
                lay.x_ancillas.push_back(q);
            }
        }
    }
    int32_t ord = 0;
    for (QubitId a : lay.z_ancillas) lay.ancilla_ordinal[a] = ord++;
    for (QubitId a : lay.x_ancillas) lay.ancilla_ordinal[a] = ord++;

    // Interaction order N, W, E, S.
    for (QubitId a : lay.z_ancillas) {
        int x = lay.coords[a].x, y = lay.coords[a].y;
        lay.neighbors[a] = {lay.at(x, y - 1), lay.at(x - 1, y), lay.at(x + 1, y),
                            lay.at(x, y + 1)};
    }
    for (QubitId a : lay.x_ancillas) {
        int x = lay.coords[a].x, y = lay.coords[a].y;
        lay.neighbors[a] = {lay.at(x, y - 1), lay.at(x - 1, y), lay.at(x + 1, y),
                            lay.at(x, y + 1)};
    }

    for (int x = 0; x < g; x += 2) lay.logical_z_support.push_back(lay.at(x, 0));
    for (int y = 0; y < g; y += 2) lay.logical_x_support.push_back(lay.at(0, y));
    return lay;
}

std::string layout_text_map(const Layout& layout) {
    std::string out;
    for (int y = 0; y < layout.grid; ++y) {
        for (int x = 0; x < layout.grid; ++x) {
            if (x > 0) out += ' ';
            switch (layout.kinds[layout.at(x, y)]) {
                case QubitKind::Data: out += 'D'; break;
                case QubitKind::ZAncilla: out += 'Z'; break;
                case QubitKind::XAncilla: out += 'X'; break;
            }
        }
        out += '\n';
    }
    return out;
}

namespace {

// Emit one CX sweep: every ancilla touches its data neighbor in the given
// direction slot, ancillas with no neighbor there idle, untouched data
// qubits idle. Ancillas first in id order, then data in id order.
std::vector<GateRecord> cx_timestep(const Layout& lay, int direction) {
    std::vector<GateRecord> step;
    std::vector<uint8_t> data_busy(lay.num_qubits(), 0);
    for (QubitId q = 0; q < static_cast<QubitId>(lay.num_qubits()); ++q) {
        if (!lay.is_ancilla(q)) continue;
        QubitId d = lay.neighbors[q][direction];
        if (d < 0) {
            step.push_back({GateKind::Idle, q});
            continue;
        }
        data_busy[d] = 1;
        if (lay.kinds[q] == QubitKind::ZAncilla) {
            step.push_back({GateKind::Cx, d, q});  // data controls, ancilla target
        } else {
            step.push_back({GateKind::Cx, q, d});  // ancilla controls, data target
        }
    }
    for (QubitId q : lay.data_qubits) {
        if (!data_busy[q]) step.push_back({GateKind::Idle, q});
    }
    return step;
}

std::vector<GateRecord> uniform_timestep(const Layout& lay, GateKind anc_z,
                                         GateKind anc_x) {
    std::vector<GateRecord> step;
    for (QubitId q = 0; q < static_cast<QubitId>(lay.num_qubits()); ++q) {
        switch (lay.kinds[q]) {
            case QubitKind::Data: step.push_back({GateKind::Idle, q}); break;
            case QubitKind::ZAncilla: step.push_back({anc_z, q}); break;
            case QubitKind::XAncilla: step.push_back({anc_x, q}); break;
        }
    }
    return step;
}

}  // namespace

GateSchedule build_round_schedule(const Layout& layout) {
    GateSchedule sched;
    sched.timesteps.push_back(uniform_timestep(layout, GateKind::Init0, GateKind::Init0));
    sched.timesteps.push_back(uniform_timestep(layout, GateKind::Idle, GateKind::Hadamard));
    for (int dir = 0; dir < 4; ++dir) {
        sched.timesteps.push_back(cx_timestep(layout, dir));
    }
    sched.timesteps.push_back(uniform_timestep(layout, GateKind::Idle, GateKind::Hadamard));
    sched.timesteps.push_back(
        uniform_timestep(layout, GateKind::MeasureZ, GateKind::MeasureZ));
    return sched;
}

int fault_kinds_for_gate(GateKind kind) {
    switch (kind) {
        case GateKind::Init0:
        case GateKind::InitPlus:
        case GateKind::MeasureZ:
        case GateKind::MeasureX:
            return 1;
        case GateKind::Hadamard:
        case GateKind::Idle:
            return 3;
        case GateKind::Cx:
            return 15;
    }
    return 0;
}

}  // namespace surfmatch
