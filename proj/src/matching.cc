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

#include "surfmatch/matching.h"

#include <algorithm>
#include <stdexcept>

#include "surfmatch/blossom.h"

namespace surfmatch {

namespace {

constexpr int32_t kUnreached = -1;

// BFS distances over dots from one source, unit weight per line.
std::vector<int32_t> bfs_distances(const Lattice& lattice, int32_t source) {
    std::vector<int32_t> dist(lattice.dots.size(), kUnreached);
    std::vector<int32_t> frontier{source};
    dist[source] = 0;
    int32_t d = 0;
    std::vector<int32_t> next;
    while (!frontier.empty()) {
        next.clear();
        for (int32_t u : frontier) {
            for (auto [v, line] : lattice.adj[u]) {
                if (dist[v] == kUnreached) {
                    dist[v] = d + 1;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
        ++d;
    }
    return dist;
}

// Nearest boundary exit from the source: (total weight, exit dot, line id),
// ties broken toward smaller dot then smaller line id.
struct BoundaryExit {
    int64_t weight = -1;
    int32_t dot = -1;
    int32_t line = -1;
};

BoundaryExit nearest_boundary(const Lattice& lattice,
                              const std::vector<int32_t>& dist) {
    BoundaryExit best;
    for (size_t u = 0; u < lattice.dots.size(); ++u) {
        if (dist[u] == kUnreached || lattice.boundary_at[u].empty()) continue;
        int64_t w = dist[u] + 1;
        if (best.weight < 0 || w < best.weight ||
            (w == best.weight && static_cast<int32_t>(u) < best.dot)) {
            best.weight = w;
            best.dot = static_cast<int32_t>(u);
            best.line = *std::min_element(lattice.boundary_at[u].begin(),
                                          lattice.boundary_at[u].end());
        }
    }
    return best;
}

// Deterministic shortest path from source to target given the source's
// distance field: walk back from the target, always picking the smallest
// predecessor dot id.
void append_path_lines(const Lattice& lattice, const std::vector<int32_t>& dist,
                       int32_t source, int32_t target,
                       std::vector<int32_t>& lines_out) {
    int32_t v = target;
    while (v != source) {
        int32_t best_u = -1, best_line = -1;
        for (auto [u, line] : lattice.adj[v]) {
            if (dist[u] == dist[v] - 1) {
                best_u = u;
                best_line = line;
                break;  // adjacency is sorted by dot id
            }
        }
        if (best_u < 0) {
            throw std::logic_error("broken distance field during path walk");
        }
        lines_out.push_back(best_line);
        v = best_u;
    }
}

}  // namespace

MatchingProblem MatchingProblem::plain(int num_nodes,
                                       std::vector<int64_t> weights) {
    if (weights.size() != static_cast<size_t>(num_nodes) * num_nodes) {
        throw std::invalid_argument("weight matrix must be n x n");
    }
    MatchingProblem p;
    p.num_events = num_nodes;
    p.with_companions = false;
    p.weights = std::move(weights);
    return p;
}

int64_t shortest_path_weight(const Lattice& lattice, int32_t a, int32_t b) {
    if (a < 0 || static_cast<size_t>(a) >= lattice.dots.size()) {
        throw std::invalid_argument("dot id out of range");
    }
    auto dist = bfs_distances(lattice, a);
    if (b == -1) {
        BoundaryExit exit = nearest_boundary(lattice, dist);
        if (exit.weight < 0) {
            throw std::logic_error("no boundary reachable from dot");
        }
        return exit.weight;
    }
    if (b < 0 || static_cast<size_t>(b) >= lattice.dots.size()) {
        throw std::invalid_argument("dot id out of range");
    }
    if (dist[b] == kUnreached) {
        throw std::logic_error("dots are disconnected");
    }
    return dist[b];
}

MatchingProblem build_matching_problem(const Lattice& lattice,
                                       const std::vector<int32_t>& event_dots) {
    const int k = static_cast<int>(event_dots.size());
    MatchingProblem p;
    p.num_events = k;
    p.with_companions = true;
    const int n = p.num_nodes();
    p.weights.assign(static_cast<size_t>(n) * n, -1);
    auto set_w = [&](int u, int v, int64_t w) {
        p.weights[static_cast<size_t>(u) * n + v] = w;
        p.weights[static_cast<size_t>(v) * n + u] = w;
    };
    for (int i = 0; i < k; ++i) {
        auto dist = bfs_distances(lattice, event_dots[i]);
        for (int j = i + 1; j < k; ++j) {
            if (dist[event_dots[j]] == kUnreached) {
                throw std::logic_error("detection events are disconnected");
            }
            set_w(i, j, dist[event_dots[j]]);
        }
        BoundaryExit exit = nearest_boundary(lattice, dist);
        if (exit.weight < 0) {
            throw std::logic_error("no boundary reachable from event");
        }
        set_w(i, k + i, exit.weight);
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) set_w(k + i, k + j, 0);
    }
    return p;
}

Matching solve_matching(const MatchingProblem& problem) {
    const int n = problem.num_nodes();
    Matching m;
    if (n == 0) return m;
    auto mate = min_weight_perfect_matching(n, problem.weights);
    for (int u = 0; u < n; ++u) {
        if (mate[u] > u) {
            m.pairs.push_back({u, mate[u]});
            m.total_weight += problem.weight(u, mate[u]);
        }
    }
    return m;
}

std::vector<int32_t> detection_dots(const Lattice& lattice,
                                    const DetectionSet& detections) {
    std::vector<int32_t> dots;
    for (const DetectionPoint& p : detections) {
        if (p.type != lattice.type) {
            throw std::invalid_argument("detection point of the wrong type");
        }
        int32_t id = lattice.dot_id(p);
        if (id < 0) {
            throw std::invalid_argument("detection point off the lattice");
        }
        dots.push_back(id);
    }
    return dots;
}

Matching decode(const Lattice& lattice, const DetectionSet& detections) {
    return solve_matching(
        build_matching_problem(lattice, detection_dots(lattice, detections)));
}

CorrectionSet correction_from_matching(const Lattice& lattice,
                                       const Matching& matching,
                                       const std::vector<int32_t>& event_dots) {
    const int k = static_cast<int>(event_dots.size());
    // Lines picked an odd number of times survive (paths may overlap).
    std::vector<int32_t> picked;
    for (auto [u, v] : matching.pairs) {
        if (u >= k) continue;  // companion pair
        if (v < k) {
            int32_t a = event_dots[u], b = event_dots[v];
            int32_t source = std::min(a, b), target = std::max(a, b);
            auto dist = bfs_distances(lattice, source);
            append_path_lines(lattice, dist, source, target, picked);
        } else {
            if (v != k + u) {
                throw std::invalid_argument(
                    "event matched to a foreign boundary companion");
            }
            auto dist = bfs_distances(lattice, event_dots[u]);
            BoundaryExit exit = nearest_boundary(lattice, dist);
            if (exit.weight < 0) {
                throw std::logic_error("no boundary reachable from event");
            }
            append_path_lines(lattice, dist, event_dots[u], exit.dot, picked);
            picked.push_back(exit.line);
        }
    }
    std::sort(picked.begin(), picked.end());
    CorrectionSet corr;
    for (size_t i = 0; i < picked.size();) {
        size_t j = i;
        while (j < picked.size() && picked[j] == picked[i]) ++j;
        if ((j - i) % 2 == 1) corr.line_ids.push_back(picked[i]);
        i = j;
    }
    for (int32_t id : corr.line_ids) {
        corr.logical_flip ^= lattice.lines[id].flips_logical;
    }
    return corr;
}

DetectionSet residual_detections(const Lattice& lattice, const Layout& layout,
                                 const GateSchedule& schedule,
                                 const DetectionSet& observed,
                                 const CorrectionSet& correction, int rounds) {
    // A correction line's syndrome signature equals that of any of its
    // contributing faults; replaying one representative per line and
    // XOR-ing the induced events applies the correction.
    DetectionSet events = observed;
    const MemoryBasis basis =
        lattice.type == StabKind::Z ? MemoryBasis::Z : MemoryBasis::X;
    for (int32_t id : correction.line_ids) {
        const LatticeLine& ln = lattice.lines[id];
        FaultSet rep{ln.faults.at(0)};
        MeasurementRecord rec = run_shot(layout, schedule, rep, rounds, basis);
        DetectionSet line_events;
        for (const DetectionPoint& p : extract_detection_events(rec, layout)) {
            if (p.type == lattice.type) line_events.push_back(p);
        }
        events = detection_xor(events, line_events);
    }
    return events;
}

bool logical_failure(const Layout& layout, const GateSchedule& schedule,
                     const FaultSet& faults, const CorrectionSet& correction,
                     int rounds, MemoryBasis basis) {
    MeasurementRecord rec = run_shot(layout, schedule, faults, rounds, basis);
    return logical_failure(rec, layout, correction);
}

bool logical_failure(const MeasurementRecord& record, const Layout& layout,
                     const CorrectionSet& correction) {
    return raw_logical_flip(record, layout) != (correction.logical_flip != 0);
}

}  // namespace surfmatch
