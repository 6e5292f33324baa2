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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "surfmatch/syndrome.h"

using namespace surfmatch;

namespace {

// Index of the data-idle gate on qubit q in the given timestep.
int idle_gate_index(const GateSchedule& sched, int timestep, QubitId q) {
    const auto& step = sched.timesteps[timestep];
    for (size_t g = 0; g < step.size(); ++g) {
        if (step[g].q0 == q && step[g].kind == GateKind::Idle) {
            return static_cast<int>(g);
        }
    }
    return -1;
}

FaultLocation pauli_fault(int round, int timestep, int gate, uint8_t code) {
    FaultLocation f;
    f.round = round;
    f.timestep = static_cast<int16_t>(timestep);
    f.gate_index = gate;
    f.kind = FaultKind::Pauli1;
    f.pauli = code;
    return f;
}

int count_type(const DetectionSet& s, StabKind t) {
    return static_cast<int>(
        std::count_if(s.begin(), s.end(),
                      [&](const DetectionPoint& p) { return p.type == t; }));
}

}  // namespace

TEST_CASE("no faults means a constant record and no events") {
    for (MemoryBasis basis : {MemoryBasis::Z, MemoryBasis::X}) {
        Layout lay = build_layout(3);
        GateSchedule sched = build_round_schedule(lay);
        MeasurementRecord rec = run_shot(lay, sched, {}, 4, basis);
        for (uint8_t f : rec.ancilla_flips) CHECK(f == 0);
        for (uint8_t f : rec.final_data_flips) CHECK(f == 0);
        CHECK(extract_detection_events(rec, lay).empty());
        CHECK_FALSE(raw_logical_flip(rec, lay));
    }
}

TEST_CASE("a bulk X error between rounds fires two Z detections") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    QubitId center = lay.at(2, 2);
    REQUIRE(lay.kinds[center] == QubitKind::Data);
    int g = idle_gate_index(sched, 7, center);
    REQUIRE(g >= 0);

    // X during the measurement layer of round 0: both adjacent Z ancillas
    // see it from round 1 on.
    FaultSet faults{pauli_fault(0, 7, g, 1)};
    MeasurementRecord rec = run_shot(lay, sched, faults, 3, MemoryBasis::Z);
    DetectionSet events = extract_detection_events(rec, lay);
    REQUIRE(events.size() == 2);
    for (const auto& p : events) {
        CHECK(p.type == StabKind::Z);
        CHECK(p.slot == 1);
        CHECK(p.x == 2);
    }
    CHECK(events[0].y == 1);
    CHECK(events[1].y == 3);
}

TEST_CASE("an X error next to the north boundary fires one detection") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    QubitId edge = lay.at(2, 0);
    REQUIRE(lay.kinds[edge] == QubitKind::Data);
    int g = idle_gate_index(sched, 7, edge);
    FaultSet faults{pauli_fault(0, 7, g, 1)};
    MeasurementRecord rec = run_shot(lay, sched, faults, 3, MemoryBasis::Z);
    DetectionSet events = extract_detection_events(rec, lay);
    REQUIRE(events.size() == 1);
    CHECK(events[0].type == StabKind::Z);
    CHECK(events[0].x == 2);
    CHECK(events[0].y == 1);
}

TEST_CASE("a measurement flip fires two events at its ancilla") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    QubitId anc = lay.at(2, 1);
    const auto& meas_step = sched.timesteps[7];
    int g = -1;
    for (size_t i = 0; i < meas_step.size(); ++i) {
        if (meas_step[i].q0 == anc) g = static_cast<int>(i);
    }
    REQUIRE(g >= 0);
    FaultLocation f;
    f.round = 1;
    f.timestep = 7;
    f.gate_index = g;
    f.kind = FaultKind::MeasFlip;
    MeasurementRecord rec = run_shot(lay, sched, {f}, 4, MemoryBasis::Z);
    DetectionSet events = extract_detection_events(rec, lay);
    REQUIRE(events.size() == 2);
    CHECK(events[0] == DetectionPoint{StabKind::Z, 2, 1, 1});
    CHECK(events[1] == DetectionPoint{StabKind::Z, 2, 1, 2});
}

TEST_CASE("a bulk Y error fires two events in each lattice type") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    QubitId center = lay.at(2, 2);
    int g = idle_gate_index(sched, 7, center);
    FaultSet faults{pauli_fault(0, 7, g, 3)};
    MeasurementRecord rec = run_shot(lay, sched, faults, 3, MemoryBasis::Z);
    DetectionSet events = extract_detection_events(rec, lay);
    CHECK(count_type(events, StabKind::Z) == 2);
    CHECK(count_type(events, StabKind::X) == 2);
}

TEST_CASE("records and events are linear in the faults") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    for (int trial = 0; trial < 40; ++trial) {
        FaultSet a = sample_faults(lay, sched, 3, 0.03, 500 + trial);
        FaultSet b = sample_faults(lay, sched, 3, 0.03, 900 + trial);
        FaultSet both = a;
        both.insert(both.end(), b.begin(), b.end());
        std::sort(both.begin(), both.end());

        MeasurementRecord ra = run_shot(lay, sched, a, 3, MemoryBasis::Z);
        MeasurementRecord rb = run_shot(lay, sched, b, 3, MemoryBasis::Z);
        MeasurementRecord rboth = run_shot(lay, sched, both, 3, MemoryBasis::Z);
        MeasurementRecord rsum = ra;
        rsum ^= rb;
        CHECK(rsum == rboth);
        CHECK(detection_xor(extract_detection_events(ra, lay),
                            extract_detection_events(rb, lay)) ==
              extract_detection_events(rboth, lay));
    }
}

TEST_CASE("every single fault fires at most two events per type") {
    for (MemoryBasis basis : {MemoryBasis::Z, MemoryBasis::X}) {
        Layout lay = build_layout(3);
        GateSchedule sched = build_round_schedule(lay);
        for (const auto& wf : enumerate_single_faults(lay, sched, 3)) {
            MeasurementRecord rec = run_shot(lay, sched, {wf.loc}, 3, basis);
            DetectionSet events = extract_detection_events(rec, lay);
            CHECK(count_type(events, StabKind::Z) <= 2);
            CHECK(count_type(events, StabKind::X) <= 2);
        }
    }
}

TEST_CASE("silent single faults never flip the logical readout") {
    for (MemoryBasis basis : {MemoryBasis::Z, MemoryBasis::X}) {
        Layout lay = build_layout(3);
        GateSchedule sched = build_round_schedule(lay);
        int silent = 0;
        for (const auto& wf : enumerate_single_faults(lay, sched, 3)) {
            MeasurementRecord rec = run_shot(lay, sched, {wf.loc}, 3, basis);
            if (extract_detection_events(rec, lay).empty()) {
                ++silent;
                CHECK_FALSE(raw_logical_flip(rec, lay));
            }
        }
        CHECK(silent > 0);  // e.g. Z errors on Z ancillas right before measurement
    }
}

TEST_CASE("non-memory stabilizers have no time-boundary slots") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    for (const auto& wf : enumerate_single_faults(lay, sched, 3)) {
        MeasurementRecord rec = run_shot(lay, sched, {wf.loc}, 3, MemoryBasis::Z);
        for (const auto& p : extract_detection_events(rec, lay)) {
            if (p.type == StabKind::X) {
                CHECK(p.slot >= 1);
                CHECK(p.slot <= 2);
            } else {
                CHECK(p.slot >= 0);
                CHECK(p.slot <= 3);
            }
        }
    }
}

TEST_CASE("record shape is validated against the layout") {
    Layout lay3 = build_layout(3);
    Layout lay2 = build_layout(2);
    GateSchedule sched = build_round_schedule(lay3);
    MeasurementRecord rec = run_shot(lay3, sched, {}, 2, MemoryBasis::Z);
    CHECK_THROWS_AS((void)extract_detection_events(rec, lay2),
                    std::invalid_argument);
}

TEST_CASE("faults outside the volume are rejected") {
    Layout lay = build_layout(2);
    GateSchedule sched = build_round_schedule(lay);
    FaultLocation f;
    f.round = 5;  // beyond rounds
    f.timestep = 0;
    f.gate_index = 0;
    f.kind = FaultKind::InitFlip;
    CHECK_THROWS_AS((void)run_shot(lay, sched, {f}, 2, MemoryBasis::Z),
                    std::invalid_argument);
}
