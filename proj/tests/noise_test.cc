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

#include <cmath>
#include <map>

#include "surfmatch/noise.h"

using namespace surfmatch;

namespace {

struct Census {
    int64_t cx = 0, h = 0, idle = 0, init = 0, meas = 0;
};

Census gate_census(const GateSchedule& sched) {
    Census c;
    for (const auto& step : sched.timesteps) {
        for (const auto& g : step) {
            switch (g.kind) {
                case GateKind::Cx: c.cx++; break;
                case GateKind::Hadamard: c.h++; break;
                case GateKind::Idle: c.idle++; break;
                case GateKind::Init0:
                case GateKind::InitPlus: c.init++; break;
                case GateKind::MeasureZ:
                case GateKind::MeasureX: c.meas++; break;
            }
        }
    }
    return c;
}

}  // namespace

TEST_CASE("per-gate fault kinds and coefficients") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    auto faults = enumerate_single_faults(lay, sched, 1);

    std::map<std::pair<int, int>, std::pair<int, int>> per_gate;  // (ts,g) -> (count, coeff)
    for (const auto& wf : faults) {
        auto& slot = per_gate[{wf.loc.timestep, wf.loc.gate_index}];
        slot.first++;
        slot.second = wf.coeff_fifteenths;
    }
    for (auto& [key, val] : per_gate) {
        GateKind k = sched.timesteps[key.first][key.second].kind;
        switch (k) {
            case GateKind::Cx:
                CHECK(val.first == 15);
                CHECK(val.second == 1);
                break;
            case GateKind::Hadamard:
            case GateKind::Idle:
                CHECK(val.first == 3);
                CHECK(val.second == 5);
                break;
            default:
                CHECK(val.first == 1);
                CHECK(val.second == 15);
                break;
        }
    }
}

TEST_CASE("enumerator count matches the gate census") {
    for (int d : {2, 3}) {
        for (int rounds : {1, 3}) {
            Layout lay = build_layout(d);
            GateSchedule sched = build_round_schedule(lay);
            Census c = gate_census(sched);
            int64_t expected =
                rounds * (15 * c.cx + 3 * (c.h + c.idle) + c.init + c.meas);
            auto faults = enumerate_single_faults(lay, sched, rounds);
            CHECK(int64_t(faults.size()) == expected);
            CHECK(count_fault_locations(sched, rounds) ==
                  rounds * (c.cx + c.h + c.idle + c.init + c.meas));

            // Exactly once each.
            std::set<FaultLocation> seen;
            for (const auto& wf : faults) CHECK(seen.insert(wf.loc).second);
        }
    }
}

TEST_CASE("p edge cases") {
    Layout lay = build_layout(2);
    GateSchedule sched = build_round_schedule(lay);
    CHECK(sample_faults(lay, sched, 2, 0.0, 99).empty());
    auto all = sample_faults(lay, sched, 2, 1.0, 99);
    CHECK(int64_t(all.size()) == count_fault_locations(sched, 2));
    CHECK_THROWS_AS((void)sample_faults(lay, sched, 2, -0.1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)sample_faults(lay, sched, 2, 1.5, 1),
                    std::invalid_argument);
}

TEST_CASE("sampling is deterministic under the seed") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    auto a = sample_faults(lay, sched, 3, 0.02, 42);
    auto b = sample_faults(lay, sched, 3, 0.02, 42);
    CHECK(a == b);
    auto c = sample_faults(lay, sched, 3, 0.02, 43);
    CHECK(a != c);
}

TEST_CASE("empirical fault frequency tracks p within 3 sigma") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    const double p = 0.01;
    const int shots = 20000;
    const int64_t locations = count_fault_locations(sched, 3);
    int64_t total = 0;
    for (int s = 0; s < shots; ++s) {
        total += int64_t(sample_faults(lay, sched, 3, p, 1000 + s).size());
    }
    const double draws = double(locations) * shots;
    const double freq = total / draws;
    const double sigma = std::sqrt(p * (1 - p) / draws);
    CHECK(std::abs(freq - p) < 3 * sigma);
}

TEST_CASE("sampled kinds are uniform per gate class") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    std::map<uint8_t, int64_t> cx_kinds;
    for (int s = 0; s < 4000; ++s) {
        for (const auto& f : sample_faults(lay, sched, 2, 0.05, 777 + s)) {
            if (f.kind == FaultKind::Pauli2) cx_kinds[f.pauli]++;
        }
    }
    REQUIRE(cx_kinds.size() == 15);
    int64_t total = 0, min_c = INT64_MAX, max_c = 0;
    for (auto& [k, c] : cx_kinds) {
        total += c;
        min_c = std::min(min_c, c);
        max_c = std::max(max_c, c);
    }
    double mean = double(total) / 15;
    CHECK(min_c > mean * 0.9);
    CHECK(max_c < mean * 1.1);
}

TEST_CASE("fault dump round-trips") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    FaultDump dump;
    dump.distance = 3;
    dump.rounds = 3;
    dump.basis = MemoryBasis::X;
    dump.seed = 123456789;
    dump.shot = 42;
    dump.faults = sample_faults(lay, sched, 3, 0.05, 31337);
    REQUIRE(!dump.faults.empty());

    FaultDump back = parse_fault_dump(format_fault_dump(dump));
    CHECK(back.distance == dump.distance);
    CHECK(back.rounds == dump.rounds);
    CHECK(back.basis == dump.basis);
    CHECK(back.seed == dump.seed);
    CHECK(back.shot == dump.shot);
    CHECK(back.faults == dump.faults);
}

TEST_CASE("malformed dumps are rejected") {
    CHECK_THROWS_AS((void)parse_fault_dump("fault 0 0 0 pauli1 X\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)parse_fault_dump("run d=3 rounds=3\nfault 0 0 0 bogus\n"),
                    std::invalid_argument);
}
