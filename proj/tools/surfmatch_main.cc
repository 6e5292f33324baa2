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

#include <CLI11.hpp>
#include <map>
#include <string>

#include "surfmatch/montecarlo.h"

int main(int argc, char** argv) {
    using namespace surfmatch;

    CLI::App app{
        "surfmatch: surface code memory simulator with a unit-weight exact\n"
        "matching decoder and the analytic threshold bound chain.\n\n"
        "CSV columns by mode:\n"
        "  montecarlo/sweep: distance,rounds,p,basis,seed,shots,failures,\n"
        "    rate,wilson_low,wilson_high[,suppression_violated]\n"
        "    (rate bounds are the 95% Wilson score interval)\n"
        "  bounds:       n,epsilon,eq12_bound\n"
        "  sweep-verify: weight,combos,failures\n"
        "  replay:       shot,faults,events,match_weight,failure\n"};

    RunConfig config;
    std::string mode = "montecarlo";
    std::string basis = "z";
    std::string format = "csv";

    std::map<std::string, RunMode> modes{
        {"montecarlo", RunMode::MonteCarlo},
        {"sweep", RunMode::Sweep},
        {"bounds", RunMode::Bounds},
        {"lattice-export", RunMode::LatticeExport},
        {"sweep-verify", RunMode::SweepVerify},
        {"replay", RunMode::Replay},
    };

    app.add_option("--mode", mode,
                   "montecarlo | sweep | bounds | lattice-export | "
                   "sweep-verify | replay")
        ->check(CLI::IsMember({"montecarlo", "sweep", "bounds", "lattice-export",
                               "sweep-verify", "replay"}));
    app.add_option("--distance", config.distances,
                   "code distance(s); repeat for sweep grids");
    app.add_option("--rounds", config.rounds,
                   "error-detection rounds (default: distance)");
    app.add_option("--p", config.ps, "physical error rate(s); repeatable");
    app.add_option("--shots", config.shots, "Monte Carlo shots per point");
    app.add_option("--basis", basis, "memory basis: z | x")
        ->check(CLI::IsMember({"z", "x"}));
    auto* seed_opt =
        app.add_option("--seed", config.seed, "master seed (required for runs)");
    app.add_option("--out", config.out_path, "output path (default: stdout)");
    app.add_option("--format", format, "csv | text")
        ->check(CLI::IsMember({"csv", "text"}));
    app.add_option("--workers", config.workers,
                   "worker threads (default: hardware); never affects results");
    app.add_option("--dump-failures", config.dump_failures_path,
                   "write failing shots' fault sets to this file");
    app.add_option("--max-weight", config.max_weight,
                   "sweep-verify: largest fault combination size (1 or 2)");
    app.add_option("--faults", config.faults_path, "replay: fault dump file");
    app.add_option("--n", config.bound_ns, "bounds: volume side(s)");
    app.add_option("--epsilon", config.bound_epsilons,
                   "bounds: line probability value(s)");

    CLI11_PARSE(app, argc, argv);

    config.mode = modes.at(mode);
    config.basis = basis == "x" ? MemoryBasis::X : MemoryBasis::Z;
    config.format = format == "text" ? OutputFormat::Text : OutputFormat::Csv;
    config.seed_set = seed_opt->count() > 0;

    return run_cli(config);
}
