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
#include <set>

#include "surfmatch/layout.h"

using namespace surfmatch;

namespace {

// Number of shared data qubits between two stabilizers.
int overlap(const Layout& lay, QubitId a, QubitId b) {
    int n = 0;
    for (QubitId qa : lay.neighbors[a]) {
        if (qa < 0) continue;
        for (QubitId qb : lay.neighbors[b]) {
            if (qb >= 0 && qa == qb) ++n;
        }
    }
    return n;
}

int neighbor_count(const Layout& lay, QubitId a) {
    int n = 0;
    for (QubitId q : lay.neighbors[a]) n += q >= 0 ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("pattern counts follow the expansion rule") {
    // data = d^2 + (d-1)^2, stabilizers = 2 d (d-1) per expansion step.
    for (int d = 2; d <= 6; ++d) {
        Layout lay = build_layout(d);
        CHECK(lay.data_qubits.size() == size_t(d * d + (d - 1) * (d - 1)));
        CHECK(lay.z_ancillas.size() == size_t(d * (d - 1)));
        CHECK(lay.x_ancillas.size() == size_t(d * (d - 1)));
    }
    // The reference figure size: 13 data qubits, 12 stabilizers.
    Layout d3 = build_layout(3);
    CHECK(d3.data_qubits.size() == 13);
    CHECK(d3.num_ancillas() == 12);
    // d=2 is the smallest structural instance.
    Layout d2 = build_layout(2);
    CHECK(d2.data_qubits.size() == 5);
    CHECK(d2.num_ancillas() == 4);
}

TEST_CASE("distance below 2 is rejected") {
    CHECK_THROWS_AS((void)build_layout(1), std::invalid_argument);
    CHECK_THROWS_AS((void)build_layout(0), std::invalid_argument);
    CHECK_THROWS_AS((void)build_layout(-3), std::invalid_argument);
}

TEST_CASE("all stabilizer pairs commute") {
    for (int d : {2, 3, 4, 5}) {
        Layout lay = build_layout(d);
        for (QubitId a : lay.z_ancillas) {
            for (QubitId b : lay.x_ancillas) {
                int n = overlap(lay, a, b);
                CHECK((n == 0 || n == 2));
            }
        }
    }
}

TEST_CASE("bulk ancillas have 4 neighbors, boundary ancillas 3") {
    for (int d : {2, 3, 4, 5}) {
        Layout lay = build_layout(d);
        for (QubitId a = 0; a < QubitId(lay.num_qubits()); ++a) {
            if (!lay.is_ancilla(a)) continue;
            int n = neighbor_count(lay, a);
            CHECK(n >= 2);
            CHECK(n <= 4);
            bool z_type = lay.kinds[a] == QubitKind::ZAncilla;
            int across = z_type ? lay.coords[a].x : lay.coords[a].y;
            bool at_edge = across == 0 || across == lay.grid - 1;
            CHECK(n == (at_edge ? 3 : 4));
        }
    }
}

TEST_CASE("logical supports have length d and anticommute once") {
    for (int d : {2, 3, 5}) {
        Layout lay = build_layout(d);
        CHECK(lay.logical_z_support.size() == size_t(d));
        CHECK(lay.logical_x_support.size() == size_t(d));

        // Z chain must overlap every X stabilizer evenly, and vice versa.
        for (QubitId a : lay.x_ancillas) {
            int n = 0;
            for (QubitId q : lay.neighbors[a]) {
                if (q < 0) continue;
                n += std::count(lay.logical_z_support.begin(),
                                lay.logical_z_support.end(), q);
            }
            CHECK(n % 2 == 0);
        }
        for (QubitId a : lay.z_ancillas) {
            int n = 0;
            for (QubitId q : lay.neighbors[a]) {
                if (q < 0) continue;
                n += std::count(lay.logical_x_support.begin(),
                                lay.logical_x_support.end(), q);
            }
            CHECK(n % 2 == 0);
        }

        std::set<QubitId> zs(lay.logical_z_support.begin(),
                             lay.logical_z_support.end());
        int shared = 0;
        for (QubitId q : lay.logical_x_support) shared += zs.count(q);
        CHECK(shared % 2 == 1);
    }
}

TEST_CASE("every bulk data qubit touches 2 Z and 2 X stabilizers at d=5") {
    Layout lay = build_layout(5);
    std::vector<int> z_count(lay.num_qubits(), 0), x_count(lay.num_qubits(), 0);
    for (QubitId a = 0; a < QubitId(lay.num_qubits()); ++a) {
        if (!lay.is_ancilla(a)) continue;
        for (QubitId q : lay.neighbors[a]) {
            if (q < 0) continue;
            (lay.kinds[a] == QubitKind::ZAncilla ? z_count : x_count)[q]++;
        }
    }
    for (QubitId q : lay.data_qubits) {
        bool bulk = lay.coords[q].x > 0 && lay.coords[q].x < lay.grid - 1 &&
                    lay.coords[q].y > 0 && lay.coords[q].y < lay.grid - 1;
        if (bulk) {
            CHECK(z_count[q] == 2);
            CHECK(x_count[q] == 2);
        }
    }
}

TEST_CASE("text map marks the d=2 grid") {
    Layout lay = build_layout(2);
    CHECK(layout_text_map(lay) ==
          "D X D\n"
          "Z D Z\n"
          "D X D\n");
}

TEST_CASE("round schedule has uniform depth 8 with every qubit once per step") {
    for (int d : {2, 3, 4}) {
        Layout lay = build_layout(d);
        GateSchedule sched = build_round_schedule(lay);
        REQUIRE(sched.timesteps.size() == 8);
        for (const auto& step : sched.timesteps) {
            std::set<QubitId> seen;
            for (const GateRecord& g : step) {
                CHECK(seen.insert(g.q0).second);
                if (g.kind == GateKind::Cx) CHECK(seen.insert(g.q1).second);
            }
            CHECK(seen.size() == lay.num_qubits());
        }
    }
}

TEST_CASE("per-ancilla circuit shapes match the measurement circuits") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);

    auto ops_on = [&](QubitId q) {
        std::vector<GateKind> ops;
        for (const auto& step : sched.timesteps) {
            for (const GateRecord& g : step) {
                if (g.q0 == q || (g.kind == GateKind::Cx && g.q1 == q)) {
                    ops.push_back(g.kind);
                }
            }
        }
        return ops;
    };

    // A bulk Z ancilla: init, CX x4, measure = 6 operation slots plus the
    // two idle waits during the Hadamard layers.
    QubitId bulk_z = lay.at(2, 1);
    REQUIRE(lay.kinds[bulk_z] == QubitKind::ZAncilla);
    auto z_ops = ops_on(bulk_z);
    CHECK(z_ops == std::vector<GateKind>{GateKind::Init0, GateKind::Idle,
                                         GateKind::Cx, GateKind::Cx, GateKind::Cx,
                                         GateKind::Cx, GateKind::Idle,
                                         GateKind::MeasureZ});
    int real_ops = 0;
    for (GateKind k : z_ops) real_ops += k != GateKind::Idle ? 1 : 0;
    CHECK(real_ops == 6);

    // X ancillas conjugate the CX block with Hadamards.
    QubitId bulk_x = lay.at(1, 2);
    REQUIRE(lay.kinds[bulk_x] == QubitKind::XAncilla);
    CHECK(ops_on(bulk_x) ==
          std::vector<GateKind>{GateKind::Init0, GateKind::Hadamard, GateKind::Cx,
                                GateKind::Cx, GateKind::Cx, GateKind::Cx,
                                GateKind::Hadamard, GateKind::MeasureZ});

    // A boundary ancilla idles in its missing direction, keeping depth 8.
    QubitId boundary_z = lay.at(0, 1);
    REQUIRE(lay.kinds[boundary_z] == QubitKind::ZAncilla);
    auto b_ops = ops_on(boundary_z);
    REQUIRE(b_ops.size() == 8);
    CHECK(b_ops[3] == GateKind::Idle);  // west neighbor missing at x=0
    int cx = 0;
    for (GateKind k : b_ops) cx += k == GateKind::Cx ? 1 : 0;
    CHECK(cx == 3);
}

TEST_CASE("cx gates stay nearest-neighbor and collision-free at d=3") {
    Layout lay = build_layout(3);
    GateSchedule sched = build_round_schedule(lay);
    for (const auto& step : sched.timesteps) {
        for (const GateRecord& g : step) {
            if (g.kind != GateKind::Cx) continue;
            auto a = lay.coords[g.q0];
            auto b = lay.coords[g.q1];
            CHECK(std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1);
        }
    }
}

TEST_CASE("schedule construction is deterministic") {
    Layout lay = build_layout(4);
    CHECK(build_round_schedule(lay) == build_round_schedule(lay));
}
