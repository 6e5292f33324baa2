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

#ifndef SURFMATCH_MONTECARLO_H
#define SURFMATCH_MONTECARLO_H

#include <cstdint>
#include <string>
#include <vector>

#include "surfmatch/matching.h"
#include "surfmatch/oracles.h"

namespace surfmatch {

class UsageError : public std::invalid_argument {
  public:
    UsageError(std::string field, const std::string& msg)
        : std::invalid_argument(field + ": " + msg), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

enum class RunMode {
    MonteCarlo,
    Sweep,
    Bounds,
    LatticeExport,
    SweepVerify,
    Replay,
};

enum class OutputFormat { Csv, Text };

struct RunConfig {
    RunMode mode = RunMode::MonteCarlo;
    std::vector<int> distances = {3};
    int rounds = 0;  // 0 means rounds = distance
    std::vector<double> ps;
    int64_t shots = 0;
    MemoryBasis basis = MemoryBasis::Z;
    uint64_t seed = 0;
    bool seed_set = false;  // mandatory; no wall-clock default
    std::string out_path;   // empty -> stdout
    OutputFormat format = OutputFormat::Csv;
    int workers = 0;  // 0 -> hardware concurrency; never affects results
    std::string dump_failures_path;
    int max_weight = 1;        // sweep-verify
    std::string faults_path;   // replay input
    std::vector<int> bound_ns = {2, 3, 4, 5};
    std::vector<double> bound_epsilons;

    int rounds_for(int distance) const { return rounds > 0 ? rounds : distance; }
};

void validate_config(const RunConfig& config);

struct WilsonInterval {
    double low = 0;
    double high = 0;
};

// 95% Wilson score interval; behaves sanely at zero observed failures.
WilsonInterval wilson_interval(int64_t failures, int64_t shots);

struct ShotStats {
    int distance = 0;
    int rounds = 0;
    double p = 0;
    int64_t shots = 0;
    int64_t failures = 0;
    double rate = 0;
    double wilson_low = 0;
    double wilson_high = 0;
    // Reported on stderr only; deterministic outputs never include timing.
    double wall_seconds = 0;
    double shots_per_second = 0;
};

struct MonteCarloResult {
    ShotStats stats;
    std::vector<FaultDump> failing_shots;  // sorted by shot index
};

// sample -> simulate -> detect -> decode -> classify, shot-parallel with a
// deterministic reduction: per-shot RNG streams are derived from (seed,
// shot index), so the worker count cannot change any output.
MonteCarloResult run_shots(const Layout& layout, const GateSchedule& schedule,
                           const Lattice& lattice, int rounds, MemoryBasis basis,
                           double p, int64_t shots, uint64_t seed, int workers,
                           bool collect_failures);

ShotStats run_monte_carlo(const RunConfig& config);

std::string montecarlo_output(const RunConfig& config, ShotStats* stats_out = nullptr,
                              std::string* dump_out = nullptr);
std::string sweep_output(const RunConfig& config);
std::string bounds_output(const RunConfig& config);
std::string lattice_export_output(const RunConfig& config);
std::string sweep_verify_output(const RunConfig& config);
std::string replay_output(const RunConfig& config, const std::string& dump_text);

// Dispatches on config.mode, writes the payload to config.out_path (or
// stdout) and a short timing summary to stderr. Returns the process exit
// code: 0 ok, 1 usage error, 2 internal invariant violation.
int run_cli(const RunConfig& config);

}  // namespace surfmatch

#endif
