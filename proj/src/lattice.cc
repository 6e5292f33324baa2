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

#include "surfmatch/lattice.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace surfmatch {

int32_t Lattice::dot_id(int x, int y, int t) const {
    if (t < 0 || t > rounds || x < 0 || x >= grid_ || y < 0 || y >= grid_) {
        return -1;
    }
    int32_t pos = coord_index_.empty() ? -1 : coord_index_[y * grid_ + x];
    if (pos < 0) return -1;
    return static_cast<int32_t>(t * ancillas_per_slot() + pos);
}

void Lattice::rebuild_indexes() {
    adj.assign(dots.size(), {});
    boundary_at.assign(dots.size(), {});
    for (size_t i = 0; i < lines.size(); ++i) {
        const LatticeLine& ln = lines[i];
        if (ln.b < 0) {
            boundary_at[ln.a].push_back(static_cast<int32_t>(i));
        } else {
            adj[ln.a].push_back({ln.b, static_cast<int32_t>(i)});
            adj[ln.b].push_back({ln.a, static_cast<int32_t>(i)});
        }
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
}

bool Lattice::same_structure(const Lattice& other) const {
    if (type != other.type || distance != other.distance ||
        rounds != other.rounds || dots != other.dots ||
        lines.size() != other.lines.size()) {
        return false;
    }
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& a = lines[i];
        const auto& b = other.lines[i];
        if (a.a != b.a || a.b != b.b || a.side != b.side ||
            a.eps_fifteenths != b.eps_fifteenths ||
            a.flips_logical != b.flips_logical) {
            return false;
        }
    }
    return true;
}

namespace {

// Coordinate-based index of the type's ancillas in (y, x) order; ancilla
// ids are already row-major so layout order is exactly that.
std::vector<int32_t> make_coord_index(const Layout& lay, StabKind type) {
    std::vector<int32_t> idx(static_cast<size_t>(lay.grid) * lay.grid, -1);
    int32_t pos = 0;
    for (QubitId a : lay.ancillas_of(type)) {
        idx[lay.coords[a].y * lay.grid + lay.coords[a].x] = pos++;
    }
    return idx;
}

}  // namespace

Lattice build_lattice(const Layout& layout, const GateSchedule& schedule,
                      int rounds, StabKind type) {
    if (rounds < 2) {
        throw std::invalid_argument("lattice needs rounds >= 2");
    }
    Lattice lat;
    lat.type = type;
    lat.distance = layout.distance;
    lat.rounds = rounds;
    lat.grid_ = static_cast<int16_t>(layout.grid);
    lat.coord_index_ = make_coord_index(layout, type);

    const auto& ancs = layout.ancillas_of(type);
    for (int t = 0; t <= rounds; ++t) {
        for (QubitId a : ancs) {
            lat.dots.push_back(Dot{layout.coords[a].x, layout.coords[a].y, t});
        }
    }

    const MemoryBasis basis = type == StabKind::Z ? MemoryBasis::Z : MemoryBasis::X;

    // Keyed by (a, b); boundary lines use b = -1 for the low side and -2 for
    // the high side, since one dot can reach both edges when d = 2.
    std::map<std::pair<int32_t, int32_t>, size_t> line_index;

    for (const WeightedFault& wf : enumerate_single_faults(layout, schedule, rounds)) {
        FaultSet one{wf.loc};
        MeasurementRecord rec = run_shot(layout, schedule, one, rounds, basis);
        int32_t ev[2];
        int n_ev = 0;
        bool overflow = false;
        for (const DetectionPoint& p : extract_detection_events(rec, layout)) {
            if (p.type != type) continue;
            if (n_ev == 2) {
                overflow = true;
                break;
            }
            ev[n_ev++] = lat.dot_id(p);
        }
        if (overflow) {
            throw std::logic_error("single fault produced more than two detection "
                                   "events in one lattice");
        }
        if (n_ev == 0) continue;

        const uint8_t logical = raw_logical_flip(rec, layout) ? 1 : 0;
        std::pair<int32_t, int32_t> key;
        BoundarySide side = BoundarySide::Low;
        if (n_ev == 2) {
            key = {std::min(ev[0], ev[1]), std::max(ev[0], ev[1])};
        } else {
            // The error class of a single-event fault either crosses the
            // logical support (exit through the low-coordinate edge, where
            // the support lies) or not; that homology class is the side.
            side = logical ? BoundarySide::Low : BoundarySide::High;
            key = {ev[0], side == BoundarySide::Low ? -1 : -2};
            if (layout.distance >= 3) {
                const Dot& d = lat.dots[ev[0]];
                int along = type == StabKind::Z ? d.y : d.x;
                bool low_half = 2 * along < layout.grid - 1;
                if (low_half != (side == BoundarySide::Low)) {
                    throw std::logic_error(
                        "boundary line side disagrees with dot position");
                }
            }
        }

        auto it = line_index.find(key);
        if (it == line_index.end()) {
            LatticeLine ln;
            ln.a = key.first;
            ln.b = n_ev == 2 ? key.second : -1;
            ln.side = side;
            ln.eps_fifteenths = wf.coeff_fifteenths;
            ln.flips_logical = logical;
            ln.faults.push_back(wf.loc);
            line_index.emplace(key, lat.lines.size());
            lat.lines.push_back(std::move(ln));
        } else {
            LatticeLine& ln = lat.lines[it->second];
            ln.eps_fifteenths += wf.coeff_fifteenths;
            ln.faults.push_back(wf.loc);
            if (ln.flips_logical != logical) {
                throw std::logic_error(
                    "faults of one line disagree on the logical flip");
            }
        }
    }

    // Reorder lines by (a, b, side); line_index already iterates that way
    // because the high side uses the smaller key.
    std::vector<LatticeLine> sorted;
    sorted.reserve(lat.lines.size());
    for (auto& [key, idx] : line_index) {
        sorted.push_back(std::move(lat.lines[idx]));
    }
    lat.lines = std::move(sorted);
    lat.rebuild_indexes();
    return lat;
}

double line_probability(const LatticeLine& line, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    return static_cast<double>(line.eps_fifteenths) / 15.0 * p;
}

std::string export_lattice(const Lattice& lattice, const Layout& layout) {
    std::ostringstream os;
    os << "# surfmatch lattice v1\n";
    os << "# grid: x west->east, y north->south; data on (even,even)+(odd,odd);\n";
    os << "#   Z ancillas on (even,odd), X ancillas on (odd,even)\n";
    os << "# round: 8 steps = init | H | CX N,W,E,S | H | measure; data qubits\n";
    os << "#   idle one step in each non-CX layer and in CX steps without a\n";
    os << "#   partner, and idles carry the same depolarizing channel as H\n";
    os << "# slots: slot s in [1,R-1] compares rounds s-1 and s; slot 0 compares\n";
    os << "#   round 0 with the deterministic initial stabilizer value; slot R\n";
    os << "#   compares round R-1 with the noiseless final data readout\n";
    os << "# boundary_low/high = north/south for type=Z, west/east for type=X\n";
    os << "# layout map:\n";
    std::istringstream map(layout_text_map(layout));
    std::string row;
    while (std::getline(map, row)) os << "#   " << row << "\n";
    os << "lattice type=" << (lattice.type == StabKind::Z ? 'Z' : 'X')
       << " d=" << lattice.distance << " rounds=" << lattice.rounds
       << " grid=" << lattice.grid_ << "\n";
    os << "dots " << lattice.dots.size() << "\n";
    for (size_t i = 0; i < lattice.dots.size(); ++i) {
        const Dot& d = lattice.dots[i];
        os << i << ' ' << d.x << ' ' << d.y << ' ' << d.t << "\n";
    }
    os << "lines " << lattice.lines.size() << "\n";
    for (size_t i = 0; i < lattice.lines.size(); ++i) {
        const LatticeLine& ln = lattice.lines[i];
        os << i << ' ' << ln.a << ' ';
        if (ln.b < 0) {
            os << (ln.side == BoundarySide::Low ? "boundary_low" : "boundary_high");
        } else {
            os << ln.b;
        }
        os << " eps=" << ln.eps_fifteenths << "/15 faults=" << ln.faults.size()
           << " logical=" << int(ln.flips_logical) << "\n";
    }
    return os.str();
}

Lattice parse_lattice(const std::string& text) {
    Lattice lat;
    std::istringstream is(text);
    std::string line;
    enum { Head, Dots, Lines } state = Head;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        if (state == Head) {
            ls >> tag;
            if (tag != "lattice") throw std::invalid_argument("expected lattice header");
            std::string field;
            while (ls >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) {
                    throw std::invalid_argument("bad header field: " + field);
                }
                std::string key = field.substr(0, eq);
                std::string val = field.substr(eq + 1);
                if (key == "type") lat.type = val == "X" ? StabKind::X : StabKind::Z;
                else if (key == "d") lat.distance = std::stoi(val);
                else if (key == "rounds") lat.rounds = std::stoi(val);
                else if (key == "grid") lat.grid_ = static_cast<int16_t>(std::stoi(val));
            }
            state = Dots;
            continue;
        }
        ls >> tag;
        if (tag == "dots") continue;
        if (tag == "lines") {
            state = Lines;
            continue;
        }
        if (state == Dots) {
            std::istringstream rs(line);
            size_t id;
            int x, y;
            Dot d;
            rs >> id >> x >> y >> d.t;
            d.x = static_cast<int16_t>(x);
            d.y = static_cast<int16_t>(y);
            if (id != lat.dots.size()) throw std::invalid_argument("dot ids not dense");
            lat.dots.push_back(d);
        } else {
            std::istringstream rs(line);
            size_t id;
            std::string btok, epstok, faultstok, logtok;
            LatticeLine ln;
            rs >> id >> ln.a >> btok >> epstok >> faultstok >> logtok;
            if (id != lat.lines.size()) throw std::invalid_argument("line ids not dense");
            if (btok == "boundary_low") {
                ln.b = -1;
                ln.side = BoundarySide::Low;
            } else if (btok == "boundary_high") {
                ln.b = -1;
                ln.side = BoundarySide::High;
            } else {
                ln.b = std::stoi(btok);
            }
            if (epstok.rfind("eps=", 0) != 0 ||
                epstok.size() < 8 || epstok.substr(epstok.size() - 3) != "/15") {
                throw std::invalid_argument("bad eps token: " + epstok);
            }
            ln.eps_fifteenths = std::stoll(epstok.substr(4, epstok.size() - 7));
            if (logtok.rfind("logical=", 0) != 0) {
                throw std::invalid_argument("bad logical token: " + logtok);
            }
            ln.flips_logical = static_cast<uint8_t>(std::stoi(logtok.substr(8)));
            lat.lines.push_back(std::move(ln));
        }
    }
    // Rebuild the coordinate index from the first slot's dots.
    lat.coord_index_.assign(static_cast<size_t>(lat.grid_) * lat.grid_, -1);
    int32_t pos = 0;
    for (const Dot& d : lat.dots) {
        if (d.t != 0) break;
        lat.coord_index_[d.y * lat.grid_ + d.x] = pos++;
    }
    lat.rebuild_indexes();
    return lat;
}

std::string degree_histogram_csv(const Lattice& lattice) {
    std::map<size_t, size_t> hist;
    for (size_t i = 0; i < lattice.dots.size(); ++i) {
        hist[lattice.adj[i].size()]++;
    }
    std::ostringstream os;
    os << "degree,dots\n";
    for (auto& [deg, count] : hist) os << deg << ',' << count << "\n";
    return os.str();
}

int64_t max_eps_fifteenths(const Lattice& lattice) {
    int64_t best = 0;
    for (const auto& ln : lattice.lines) best = std::max(best, ln.eps_fifteenths);
    return best;
}

}  // namespace surfmatch
