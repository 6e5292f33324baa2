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

#ifndef SURFMATCH_LATTICE_H
#define SURFMATCH_LATTICE_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "surfmatch/noise.h"
#include "surfmatch/syndrome.h"

namespace surfmatch {

// A potential detection-event location: ancilla coordinate plus comparison
// slot. Dots exist whether or not a detection occurs there.
struct Dot {
    int16_t x = 0;
    int16_t y = 0;
    int32_t t = 0;

    bool operator==(const Dot&) const = default;
    auto operator<=>(const Dot&) const = default;
};

// Spatial boundary id. For the Z-detecting lattice `Low` is the north edge
// and `High` the south; for the X-detecting lattice they are west and east.
enum class BoundarySide : uint8_t { Low, High };

// A pair of dots (or a dot and a boundary) that some single fault lights
// up. eps_fifteenths accumulates the first-order probability coefficient
// of every contributing fault in units of p/15, so line probability is
// exactly eps_fifteenths/15 * p at first order. flips_logical records
// whether the line's error class flips the memory-basis logical readout;
// all contributing faults of one line agree on it (checked at build time).
struct LatticeLine {
    int32_t a = -1;
    int32_t b = -1;  // -1 for boundary lines
    BoundarySide side = BoundarySide::Low;
    int64_t eps_fifteenths = 0;
    uint8_t flips_logical = 0;
    std::vector<FaultLocation> faults;
};

// Space-time graph of one detector type, built for the memory experiment
// whose basis matches that type (the configuration in which this lattice
// is decoded). Dots are ordered slot-major, then by ancilla (y, x); lines
// are ordered by (a, b, side).
struct Lattice {
    StabKind type = StabKind::Z;
    int distance = 0;
    int rounds = 0;
    std::vector<Dot> dots;
    std::vector<LatticeLine> lines;

    // Derived indexes, rebuilt whenever lines change.
    std::vector<std::vector<std::pair<int32_t, int32_t>>> adj;  // dot -> (dot, line)
    std::vector<std::vector<int32_t>> boundary_at;              // dot -> line ids

    int32_t dot_id(int x, int y, int t) const;
    int32_t dot_id(const DetectionPoint& p) const { return dot_id(p.x, p.y, p.slot); }
    size_t ancillas_per_slot() const { return coord_index_.size(); }

    void rebuild_indexes();

    // Structure comparison; contributing fault lists are not part of the
    // exported form and are ignored here.
    bool same_structure(const Lattice& other) const;

    std::vector<int32_t> coord_index_;  // per ancilla position in (y,x) order
    int16_t grid_ = 0;
};

// Propagates every single fault of the rounds-fold schedule and records
// which detection pairs it can light up. Faults producing two events of
// this type become a line between those dots, single events become a
// boundary line, anything else is ignored for this lattice.
Lattice build_lattice(const Layout& layout, const GateSchedule& schedule,
                      int rounds, StabKind type);

// First-order model: eps_coeff * p.
double line_probability(const LatticeLine& line, double p);

std::string export_lattice(const Lattice& lattice, const Layout& layout);
Lattice parse_lattice(const std::string& text);

// Degree histogram (dot-neighbor counts) as `degree count` CSV lines.
std::string degree_histogram_csv(const Lattice& lattice);

// Largest line coefficient, in fifteenths of p.
int64_t max_eps_fifteenths(const Lattice& lattice);

}  // namespace surfmatch

#endif
