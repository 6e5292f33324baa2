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

#include "surfmatch/oracles.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "surfmatch/rng.h"

namespace surfmatch {

namespace {

struct BruteForceState {
    const MatchingProblem* p;
    int n;
    int k;  // events
    std::vector<int32_t> mate;
    std::vector<std::pair<int32_t, int32_t>> current;
    std::vector<std::pair<int32_t, int32_t>> best;
    int64_t current_w = 0;
    int64_t best_w = -1;

    void finish_companions() {
        // Remaining unmatched nodes are all companions; any pairing among
        // them costs zero. Pair them in index order.
        std::vector<int32_t> left;
        for (int v = k; v < n; ++v) {
            if (mate[v] < 0) left.push_back(v);
        }
        auto saved = current;
        for (size_t i = 0; i + 1 < left.size(); i += 2) {
            current.push_back({left[i], left[i + 1]});
        }
        if (best_w < 0 || current_w < best_w) {
            best_w = current_w;
            best = current;
        }
        current = std::move(saved);
    }

    void rec(int u) {
        while (u < n && mate[u] >= 0) ++u;
        if (u == n) {
            if (best_w < 0 || current_w < best_w) {
                best_w = current_w;
                best = current;
            }
            return;
        }
        if (p->with_companions && u >= k) {
            finish_companions();
            return;
        }
        for (int v = u + 1; v < n; ++v) {
            if (mate[v] >= 0) continue;
            int64_t w = p->weight(u, v);
            if (w < 0) continue;
            mate[u] = v;
            mate[v] = u;
            current.push_back({u, v});
            current_w += w;
            rec(u + 1);
            current_w -= w;
            current.pop_back();
            mate[u] = -1;
            mate[v] = -1;
        }
    }
};

}  // namespace

Matching brute_force_matching(const MatchingProblem& problem) {
    const int branching = problem.with_companions ? problem.num_events
                                                  : problem.num_nodes();
    if (branching > 12) {
        throw std::invalid_argument(
            "brute force matching limited to 12 branching nodes");
    }
    if (problem.num_nodes() % 2 != 0) {
        throw std::runtime_error("odd node count admits no perfect matching");
    }
    BruteForceState s;
    s.p = &problem;
    s.n = problem.num_nodes();
    s.k = problem.with_companions ? problem.num_events : problem.num_nodes();
    s.mate.assign(s.n, -1);
    s.rec(0);
    if (s.best_w < 0 && s.n > 0) {
        throw std::runtime_error("no perfect matching exists");
    }
    Matching m;
    m.pairs = std::move(s.best);
    std::sort(m.pairs.begin(), m.pairs.end());
    m.total_weight = std::max<int64_t>(s.best_w, 0);
    return m;
}

namespace {

// Bulk neighbor template of the space-time lattice: the six axis steps and
// the six diagonal steps the gate order induces.
constexpr std::array<std::array<int, 3>, 12> kVolumeOffsets = {{
    {1, 0, 0},
    {-1, 0, 0},
    {0, 1, 0},
    {0, -1, 0},
    {0, 0, 1},
    {0, 0, -1},
    {0, 1, 1},
    {0, -1, -1},
    {1, 0, 1},
    {-1, 0, -1},
    {-1, 1, 1},
    {1, -1, -1},
}};

struct VolumeDfs {
    int n;
    int axis;  // crossing axis for the current face
    int64_t count = 0;

    bool inside(const std::array<int, 3>& v) const {
        return v[0] >= 0 && v[0] < n && v[1] >= 0 && v[1] < n && v[2] >= 0 &&
               v[2] < n;
    }

    void walk(std::array<int, 3> v, int prev_offset, int steps_left) {
        if (steps_left == 0) {
            if (v[axis] == n - 1) ++count;
            return;
        }
        // The opposing face must stay reachable with unit steps per move.
        if (n - 1 - v[axis] > steps_left) return;
        for (int o = 0; o < 12; ++o) {
            if (prev_offset >= 0 && (o ^ 1) == prev_offset) continue;
            std::array<int, 3> w = {v[0] + kVolumeOffsets[o][0],
                                    v[1] + kVolumeOffsets[o][1],
                                    v[2] + kVolumeOffsets[o][2]};
            if (!inside(w)) continue;
            walk(w, o, steps_left - 1);
        }
    }
};

}  // namespace

PathEnumeration enumerate_paths_volume(int n, int m) {
    if (n < 1 || n > 4) throw std::invalid_argument("volume guard: n must be in [1, 4]");
    if (m < 2 || m > 7) throw std::invalid_argument("volume guard: m must be in [2, 7]");
    PathEnumeration e;
    e.n = n;
    e.m = m;
    e.note = "abstract degree-12 volume; boundary lines count 1 each";
    for (int axis = 0; axis < 3; ++axis) {
        VolumeDfs dfs;
        dfs.n = n;
        dfs.axis = axis;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                std::array<int, 3> v{};
                v[axis] = 0;
                v[(axis + 1) % 3] = a;
                v[(axis + 2) % 3] = b;
                dfs.walk(v, -1, m - 2);
            }
        }
        e.per_face[axis] = dfs.count;
        e.count += dfs.count;
    }
    return e;
}

namespace {

struct LatticeDfs {
    const Lattice* lat;
    int64_t count = 0;

    void walk(int32_t dot, int32_t prev_line, int steps_left) {
        if (steps_left == 0) {
            for (int32_t id : lat->boundary_at[dot]) {
                if (lat->lines[id].side == BoundarySide::High) ++count;
            }
            return;
        }
        for (auto [v, line] : lat->adj[dot]) {
            if (line == prev_line) continue;
            walk(v, line, steps_left - 1);
        }
    }
};

}  // namespace

PathEnumeration enumerate_paths_lattice(const Lattice& lattice, int m) {
    if (lattice.distance - 1 > 4) {
        throw std::invalid_argument("lattice guard: distance must be <= 5");
    }
    if (m < 2 || m > 7) throw std::invalid_argument("lattice guard: m must be in [2, 7]");
    PathEnumeration e;
    e.n = lattice.distance - 1;
    e.m = m;
    e.note = "real lattice; enter low boundary, exit high boundary";
    LatticeDfs dfs;
    dfs.lat = &lattice;
    for (size_t dot = 0; dot < lattice.dots.size(); ++dot) {
        int64_t entries = 0;
        for (int32_t id : lattice.boundary_at[dot]) {
            if (lattice.lines[id].side == BoundarySide::Low) ++entries;
        }
        if (entries == 0) continue;
        LatticeDfs one;
        one.lat = &lattice;
        one.walk(static_cast<int32_t>(dot), -1, m - 2);
        dfs.count += entries * one.count;
    }
    e.count = dfs.count;
    e.per_face = {dfs.count, 0, 0};
    return e;
}

namespace {

bool combo_fails(const Layout& layout, const GateSchedule& schedule,
                 const Lattice& lattice, const FaultSet& faults, int rounds,
                 MemoryBasis basis) {
    MeasurementRecord rec = run_shot(layout, schedule, faults, rounds, basis);
    DetectionSet events;
    for (const DetectionPoint& p : extract_detection_events(rec, layout)) {
        if (p.type == lattice.type) events.push_back(p);
    }
    auto dots = detection_dots(lattice, events);
    Matching m = solve_matching(build_matching_problem(lattice, dots));
    CorrectionSet corr = correction_from_matching(lattice, m, dots);
    return logical_failure(rec, layout, corr);
}

}  // namespace

std::string SweepCensus::csv() const {
    std::ostringstream os;
    os << "# d=" << distance << " rounds=" << rounds << "\n";
    os << "weight,combos,failures\n";
    for (size_t w = 0; w < combos.size(); ++w) {
        os << w << ',' << combos[w] << ',' << failures[w] << "\n";
    }
    return os.str();
}

SweepCensus exhaustive_fault_sweep(const Layout& layout,
                                   const GateSchedule& schedule, int rounds,
                                   int max_weight, MemoryBasis basis,
                                   int64_t combo_cap) {
    if (max_weight < 1 || max_weight > 2) {
        throw std::invalid_argument("exhaustive sweep supports max_weight 1 or 2");
    }
    auto singles = enumerate_single_faults(layout, schedule, rounds);
    const int64_t f = static_cast<int64_t>(singles.size());
    int64_t total = f;
    if (max_weight >= 2) total += f * (f - 1) / 2;
    if (total > combo_cap) {
        throw std::invalid_argument("fault combination count exceeds the cap");
    }

    Lattice lattice =
        build_lattice(layout, schedule, rounds, memory_stab_kind(basis));
    SweepCensus census;
    census.distance = layout.distance;
    census.rounds = rounds;
    census.max_weight = max_weight;
    census.combos.assign(max_weight + 1, 0);
    census.failures.assign(max_weight + 1, 0);
    census.combos[0] = 1;  // the empty set never fails

    for (int64_t i = 0; i < f; ++i) {
        census.combos[1]++;
        if (combo_fails(layout, schedule, lattice, {singles[i].loc}, rounds, basis)) {
            census.failures[1]++;
        }
    }
    if (max_weight >= 2) {
        for (int64_t i = 0; i < f; ++i) {
            for (int64_t j = i + 1; j < f; ++j) {
                census.combos[2]++;
                if (combo_fails(layout, schedule, lattice,
                                {singles[i].loc, singles[j].loc}, rounds, basis)) {
                    census.failures[2]++;
                }
            }
        }
    }
    return census;
}

SweepCensus sampled_fault_sweep(const Layout& layout,
                                const GateSchedule& schedule, int rounds,
                                int weight, int64_t samples, uint64_t seed,
                                MemoryBasis basis) {
    if (weight < 1) throw std::invalid_argument("weight must be >= 1");
    auto singles = enumerate_single_faults(layout, schedule, rounds);
    const uint64_t f = singles.size();
    Lattice lattice =
        build_lattice(layout, schedule, rounds, memory_stab_kind(basis));

    SweepCensus census;
    census.distance = layout.distance;
    census.rounds = rounds;
    census.max_weight = weight;
    census.combos.assign(weight + 1, 0);
    census.failures.assign(weight + 1, 0);

    uint64_t counter = 0;
    for (int64_t s = 0; s < samples; ++s) {
        FaultSet faults;
        while (static_cast<int>(faults.size()) < weight) {
            uint64_t idx = rng::at(seed, counter++) % f;
            FaultLocation loc = singles[idx].loc;
            if (std::find(faults.begin(), faults.end(), loc) == faults.end()) {
                faults.push_back(loc);
            }
        }
        std::sort(faults.begin(), faults.end());
        census.combos[weight]++;
        if (combo_fails(layout, schedule, lattice, faults, rounds, basis)) {
            census.failures[weight]++;
        }
    }
    return census;
}

}  // namespace surfmatch
