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

#include "surfmatch/noise.h"

#include <sstream>
#include <stdexcept>

#include "surfmatch/rng.h"

namespace surfmatch {

namespace {

FaultLocation make_fault(int round, int ts, int gate, GateKind gk, int kind_index) {
    FaultLocation f;
    f.round = round;
    f.timestep = static_cast<int16_t>(ts);
    f.gate_index = gate;
    switch (gk) {
        case GateKind::Init0:
        case GateKind::InitPlus:
            f.kind = FaultKind::InitFlip;
            f.pauli = 0;
            break;
        case GateKind::MeasureZ:
        case GateKind::MeasureX:
            f.kind = FaultKind::MeasFlip;
            f.pauli = 0;
            break;
        case GateKind::Hadamard:
        case GateKind::Idle:
            f.kind = FaultKind::Pauli1;
            f.pauli = static_cast<uint8_t>(kind_index + 1);  // 1..3
            break;
        case GateKind::Cx:
            f.kind = FaultKind::Pauli2;
            f.pauli = static_cast<uint8_t>(kind_index + 1);  // 1..15
            break;
    }
    return f;
}

int coeff_fifteenths_for(GateKind gk) {
    switch (fault_kinds_for_gate(gk)) {
        case 1: return 15;
        case 3: return 5;
        case 15: return 1;
    }
    return 0;
}

}  // namespace

std::vector<WeightedFault> enumerate_single_faults(const Layout&,
                                                   const GateSchedule& schedule,
                                                   int rounds) {
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be >= 1");
    }
    std::vector<WeightedFault> out;
    for (int r = 0; r < rounds; ++r) {
        for (size_t ts = 0; ts < schedule.timesteps.size(); ++ts) {
            const auto& step = schedule.timesteps[ts];
            for (size_t g = 0; g < step.size(); ++g) {
                GateKind gk = step[g].kind;
                int kinds = fault_kinds_for_gate(gk);
                int coeff = coeff_fifteenths_for(gk);
                for (int k = 0; k < kinds; ++k) {
                    out.push_back({make_fault(r, static_cast<int>(ts),
                                              static_cast<int>(g), gk, k),
                                   coeff});
                }
            }
        }
    }
    return out;
}

int64_t count_fault_locations(const GateSchedule& schedule, int rounds) {
    int64_t per_round = 0;
    for (const auto& step : schedule.timesteps) {
        for (const auto& gate : step) {
            per_round += fault_kinds_for_gate(gate.kind) > 0 ? 1 : 0;
        }
    }
    return per_round * rounds;
}

FaultSet sample_faults(const Layout&, const GateSchedule& schedule, int rounds,
                       double p, uint64_t seed) {
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be >= 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    FaultSet out;
    uint64_t counter = 0;
    for (int r = 0; r < rounds; ++r) {
        for (size_t ts = 0; ts < schedule.timesteps.size(); ++ts) {
            const auto& step = schedule.timesteps[ts];
            for (size_t g = 0; g < step.size(); ++g) {
                GateKind gk = step[g].kind;
                int kinds = fault_kinds_for_gate(gk);
                uint64_t c = counter;
                counter += 2;
                if (rng::unit_double(rng::at(seed, c)) >= p) continue;
                int k = kinds == 1
                            ? 0
                            : static_cast<int>(rng::at(seed, c + 1) %
                                               static_cast<uint64_t>(kinds));
                out.push_back(make_fault(r, static_cast<int>(ts),
                                         static_cast<int>(g), gk, k));
            }
        }
    }
    return out;
}

std::string fault_kind_name(FaultKind kind) {
    switch (kind) {
        case FaultKind::InitFlip: return "init_flip";
        case FaultKind::MeasFlip: return "meas_flip";
        case FaultKind::Pauli1: return "pauli1";
        case FaultKind::Pauli2: return "pauli2";
    }
    return "?";
}

std::string pauli_name(uint8_t code) {
    switch (code & 3) {
        case 0: return "I";
        case 1: return "X";
        case 2: return "Z";
        default: return "Y";
    }
}

std::string format_fault_dump(const FaultDump& dump) {
    std::ostringstream os;
    os << "# surfmatch faultset v1\n";
    os << "run d=" << dump.distance << " rounds=" << dump.rounds
       << " basis=" << (dump.basis == MemoryBasis::Z ? 'z' : 'x')
       << " seed=" << dump.seed << " shot=" << dump.shot << "\n";
    for (const auto& f : dump.faults) {
        os << "fault " << f.round << ' ' << f.timestep << ' ' << f.gate_index
           << ' ' << fault_kind_name(f.kind);
        if (f.kind == FaultKind::Pauli1) {
            os << ' ' << pauli_name(f.pauli);
        } else if (f.kind == FaultKind::Pauli2) {
            os << ' ' << pauli_name(f.pauli >> 2) << pauli_name(f.pauli & 3);
        }
        os << "\n";
    }
    return os.str();
}

namespace {

uint8_t parse_pauli_char(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Z': return 2;
        case 'Y': return 3;
    }
    throw std::invalid_argument(std::string("bad pauli letter '") + c + "'");
}

}  // namespace

FaultDump parse_fault_dump(const std::string& text) {
    FaultDump dump;
    std::istringstream is(text);
    std::string line;
    bool have_run = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "run") {
            std::string field;
            while (ls >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) {
                    throw std::invalid_argument("bad run field: " + field);
                }
                std::string key = field.substr(0, eq);
                std::string val = field.substr(eq + 1);
                if (key == "d") dump.distance = std::stoi(val);
                else if (key == "rounds") dump.rounds = std::stoi(val);
                else if (key == "basis")
                    dump.basis = val == "x" ? MemoryBasis::X : MemoryBasis::Z;
                else if (key == "seed") dump.seed = std::stoull(val);
                else if (key == "shot") dump.shot = std::stoull(val);
                else throw std::invalid_argument("unknown run field: " + key);
            }
            have_run = true;
        } else if (tag == "fault") {
            FaultLocation f;
            std::string kind, pauli;
            int ts;
            if (!(ls >> f.round >> ts >> f.gate_index >> kind)) {
                throw std::invalid_argument("bad fault line: " + line);
            }
            f.timestep = static_cast<int16_t>(ts);
            if (kind == "init_flip") {
                f.kind = FaultKind::InitFlip;
            } else if (kind == "meas_flip") {
                f.kind = FaultKind::MeasFlip;
            } else if (kind == "pauli1") {
                f.kind = FaultKind::Pauli1;
                if (!(ls >> pauli) || pauli.size() != 1) {
                    throw std::invalid_argument("bad pauli1 payload: " + line);
                }
                f.pauli = parse_pauli_char(pauli[0]);
            } else if (kind == "pauli2") {
                f.kind = FaultKind::Pauli2;
                if (!(ls >> pauli) || pauli.size() != 2) {
                    throw std::invalid_argument("bad pauli2 payload: " + line);
                }
                f.pauli = static_cast<uint8_t>((parse_pauli_char(pauli[0]) << 2) |
                                               parse_pauli_char(pauli[1]));
            } else {
                throw std::invalid_argument("unknown fault kind: " + kind);
            }
            dump.faults.push_back(f);
        } else {
            throw std::invalid_argument("unknown line tag: " + tag);
        }
    }
    if (!have_run) {
        throw std::invalid_argument("fault dump missing run header");
    }
    return dump;
}

}  // namespace surfmatch
