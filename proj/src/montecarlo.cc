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

#include "surfmatch/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "surfmatch/bounds.h"
#include "surfmatch/rng.h"

namespace surfmatch {

void validate_config(const RunConfig& config) {
    if (config.distances.empty()) {
        throw UsageError("distance", "at least one distance is required");
    }
    for (int d : config.distances) {
        if (d < 2 || d > 25) throw UsageError("distance", "must lie in [2, 25]");
    }
    if (config.rounds < 0 || config.rounds > 1000) {
        throw UsageError("rounds", "must lie in [1, 1000] (or 0 for rounds=d)");
    }
    const bool stochastic = config.mode == RunMode::MonteCarlo ||
                            config.mode == RunMode::Sweep;
    if (stochastic) {
        if (!config.seed_set) {
            throw UsageError("seed", "a seed is mandatory for reproducibility");
        }
        if (config.shots < 1) throw UsageError("shots", "must be >= 1");
        if (config.ps.empty()) throw UsageError("p", "at least one p is required");
        for (double p : config.ps) {
            if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p", "must lie in [0, 1]");
        }
    }
    if (config.mode == RunMode::MonteCarlo &&
        (config.distances.size() != 1 || config.ps.size() != 1)) {
        throw UsageError("mode", "montecarlo takes one distance and one p; use sweep");
    }
    if (config.workers < 0 || config.workers > 4096) {
        throw UsageError("workers", "must lie in [0, 4096]");
    }
    if (config.mode == RunMode::Replay && config.faults_path.empty()) {
        throw UsageError("faults", "replay mode needs a fault dump file");
    }
    if (config.mode == RunMode::SweepVerify &&
        (config.max_weight < 1 || config.max_weight > 2)) {
        throw UsageError("max-weight", "must be 1 or 2");
    }
    if (config.mode == RunMode::Bounds) {
        if (config.bound_epsilons.empty()) {
            throw UsageError("epsilon", "bounds mode needs at least one epsilon");
        }
        for (double e : config.bound_epsilons) {
            if (!(e >= 0.0 && e <= 1.0)) throw UsageError("epsilon", "must lie in [0, 1]");
        }
        for (int n : config.bound_ns) {
            if (n < 1) throw UsageError("n", "must be >= 1");
        }
    }
}

WilsonInterval wilson_interval(int64_t failures, int64_t shots) {
    const double z = 1.959963984540054;  // 95%
    const double n = static_cast<double>(shots);
    const double phat = static_cast<double>(failures) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    WilsonInterval w;
    w.low = std::max(0.0, center - half);
    w.high = std::min(1.0, center + half);
    return w;
}

namespace {

struct ShotOutcome {
    bool failed = false;
    FaultSet faults;
};

ShotOutcome run_one_shot(const Layout& layout, const GateSchedule& schedule,
                         const Lattice& lattice, int rounds, MemoryBasis basis,
                         double p, uint64_t master_seed, uint64_t shot_index) {
    ShotOutcome out;
    out.faults = sample_faults(layout, schedule, rounds, p,
                               rng::shot_key(master_seed, shot_index));
    MeasurementRecord rec = run_shot(layout, schedule, out.faults, rounds, basis);
    DetectionSet events;
    for (const DetectionPoint& pt : extract_detection_events(rec, layout)) {
        if (pt.type == lattice.type) events.push_back(pt);
    }
    if (events.empty()) {
        out.failed = raw_logical_flip(rec, layout);
        return out;
    }
    auto dots = detection_dots(lattice, events);
    Matching m = solve_matching(build_matching_problem(lattice, dots));
    CorrectionSet corr = correction_from_matching(lattice, m, dots);
    out.failed = logical_failure(rec, layout, corr);
    return out;
}

}  // namespace

MonteCarloResult run_shots(const Layout& layout, const GateSchedule& schedule,
                           const Lattice& lattice, int rounds, MemoryBasis basis,
                           double p, int64_t shots, uint64_t seed, int workers,
                           bool collect_failures) {
    const auto t0 = std::chrono::steady_clock::now();
    int n_workers = workers > 0
                        ? workers
                        : std::max(1u, std::thread::hardware_concurrency());
    n_workers = static_cast<int>(
        std::min<int64_t>(n_workers, std::max<int64_t>(shots, 1)));

    std::atomic<int64_t> next_shot{0};
    std::vector<int64_t> fail_counts(n_workers, 0);
    std::vector<std::vector<FaultDump>> dumps(n_workers);

    auto worker_fn = [&](int w) {
        for (;;) {
            int64_t i = next_shot.fetch_add(1, std::memory_order_relaxed);
            if (i >= shots) break;
            ShotOutcome out = run_one_shot(layout, schedule, lattice, rounds,
                                           basis, p, seed, i);
            if (out.failed) {
                fail_counts[w]++;
                if (collect_failures) {
                    FaultDump d;
                    d.distance = layout.distance;
                    d.rounds = rounds;
                    d.basis = basis;
                    d.seed = seed;
                    d.shot = static_cast<uint64_t>(i);
                    d.faults = std::move(out.faults);
                    dumps[w].push_back(std::move(d));
                }
            }
        }
    };

    if (n_workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker_fn, w);
        for (auto& t : pool) t.join();
    }

    MonteCarloResult res;
    res.stats.distance = layout.distance;
    res.stats.rounds = rounds;
    res.stats.p = p;
    res.stats.shots = shots;
    for (int64_t c : fail_counts) res.stats.failures += c;
    res.stats.rate = static_cast<double>(res.stats.failures) / shots;
    WilsonInterval w = wilson_interval(res.stats.failures, shots);
    res.stats.wilson_low = w.low;
    res.stats.wilson_high = w.high;
    for (auto& d : dumps) {
        res.failing_shots.insert(res.failing_shots.end(),
                                 std::make_move_iterator(d.begin()),
                                 std::make_move_iterator(d.end()));
    }
    std::sort(res.failing_shots.begin(), res.failing_shots.end(),
              [](const FaultDump& a, const FaultDump& b) { return a.shot < b.shot; });
    const auto t1 = std::chrono::steady_clock::now();
    res.stats.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    res.stats.shots_per_second =
        res.stats.wall_seconds > 0 ? shots / res.stats.wall_seconds : 0.0;
    return res;
}

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

const char* stats_csv_header() {
    return "distance,rounds,p,basis,seed,shots,failures,rate,wilson_low,"
           "wilson_high\n";
}

void append_stats_csv(std::ostringstream& os, const ShotStats& s,
                      MemoryBasis basis, uint64_t seed) {
    os << s.distance << ',' << s.rounds << ',' << fmt_double(s.p) << ','
       << (basis == MemoryBasis::Z ? 'z' : 'x') << ',' << seed << ','
       << s.shots << ',' << s.failures << ',' << fmt_double(s.rate) << ','
       << fmt_double(s.wilson_low) << ',' << fmt_double(s.wilson_high) << "\n";
}

MonteCarloResult run_point(const RunConfig& config, int distance, double p,
                           bool collect_failures) {
    Layout layout = build_layout(distance);
    GateSchedule schedule = build_round_schedule(layout);
    int rounds = config.rounds_for(distance);
    Lattice lattice =
        build_lattice(layout, schedule, rounds, memory_stab_kind(config.basis));
    return run_shots(layout, schedule, lattice, rounds, config.basis, p,
                     config.shots, config.seed, config.workers, collect_failures);
}

}  // namespace

ShotStats run_monte_carlo(const RunConfig& config) {
    validate_config(config);
    return run_point(config, config.distances.at(0), config.ps.at(0), false).stats;
}

std::string montecarlo_output(const RunConfig& config, ShotStats* stats_out,
                              std::string* dump_out) {
    validate_config(config);
    const bool collect = !config.dump_failures_path.empty() || dump_out;
    MonteCarloResult res =
        run_point(config, config.distances.at(0), config.ps.at(0), collect);
    if (stats_out) *stats_out = res.stats;
    if (collect) {
        std::string dump;
        for (const FaultDump& d : res.failing_shots) dump += format_fault_dump(d);
        if (dump_out) *dump_out = dump;
        if (!config.dump_failures_path.empty()) {
            std::ofstream f(config.dump_failures_path, std::ios::binary);
            if (!f) throw UsageError("dump-failures", "cannot open for writing");
            f << dump;
        }
    }
    std::ostringstream os;
    if (config.format == OutputFormat::Csv) {
        os << "# wilson 95% confidence interval\n";
        os << stats_csv_header();
        append_stats_csv(os, res.stats, config.basis, config.seed);
    } else {
        const ShotStats& s = res.stats;
        os << "distance: " << s.distance << "\n"
           << "rounds: " << s.rounds << "\n"
           << "p: " << fmt_double(s.p) << "\n"
           << "basis: " << (config.basis == MemoryBasis::Z ? 'z' : 'x') << "\n"
           << "seed: " << config.seed << "\n"
           << "shots: " << s.shots << "\n"
           << "failures: " << s.failures << "\n"
           << "rate: " << fmt_double(s.rate) << "\n"
           << "wilson_95_low: " << fmt_double(s.wilson_low) << "\n"
           << "wilson_95_high: " << fmt_double(s.wilson_high) << "\n";
    }
    return os.str();
}

std::string sweep_output(const RunConfig& config) {
    validate_config(config);
    std::ostringstream os;
    os << "# wilson 95% confidence interval\n";
    os << "# suppression_violated flags a failure rate that rose with "
          "distance at the same p\n";
    os << "distance,rounds,p,basis,seed,shots,failures,rate,wilson_low,"
          "wilson_high,suppression_violated\n";
    for (double p : config.ps) {
        double prev_rate = -1.0;
        for (size_t di = 0; di < config.distances.size(); ++di) {
            MonteCarloResult res =
                run_point(config, config.distances[di], p, false);
            const ShotStats& s = res.stats;
            os << s.distance << ',' << s.rounds << ',' << fmt_double(s.p) << ','
               << (config.basis == MemoryBasis::Z ? 'z' : 'x') << ','
               << config.seed << ',' << s.shots << ',' << s.failures << ','
               << fmt_double(s.rate) << ',' << fmt_double(s.wilson_low) << ','
               << fmt_double(s.wilson_high) << ',';
            if (di == 0) {
                os << "";
            } else {
                os << (s.rate > prev_rate ? 1 : 0);
            }
            os << "\n";
            prev_rate = s.rate;
        }
    }
    return os.str();
}

std::string bounds_output(const RunConfig& config) {
    validate_config(config);
    std::vector<BoundReport> reports;
    const Rational coeff(14, 5);  // comparison coefficient for the header
    for (int n : config.bound_ns) {
        for (double e : config.bound_epsilons) {
            reports.push_back(
                make_bound_report(n, n + 1, rational_from_double(e), coeff));
        }
    }
    return bound_reports_csv(reports);
}

std::string lattice_export_output(const RunConfig& config) {
    validate_config(config);
    const int d = config.distances.at(0);
    Layout layout = build_layout(d);
    GateSchedule schedule = build_round_schedule(layout);
    int rounds = std::max(2, config.rounds_for(d));
    Lattice lattice =
        build_lattice(layout, schedule, rounds, memory_stab_kind(config.basis));
    return export_lattice(lattice, layout) + "# degree histogram\n" +
           degree_histogram_csv(lattice);
}

std::string sweep_verify_output(const RunConfig& config) {
    validate_config(config);
    const int d = config.distances.at(0);
    Layout layout = build_layout(d);
    GateSchedule schedule = build_round_schedule(layout);
    SweepCensus census =
        exhaustive_fault_sweep(layout, schedule, config.rounds_for(d),
                               config.max_weight, config.basis);
    return census.csv();
}

std::string replay_output(const RunConfig& config, const std::string& dump_text) {
    validate_config(config);
    std::istringstream is(dump_text);
    // Split on 'run' headers; each block replays independently.
    std::vector<std::string> blocks;
    std::string line, cur;
    bool cur_has_run = false;
    while (std::getline(is, line)) {
        if (line.rfind("run ", 0) == 0) {
            if (cur_has_run) {
                blocks.push_back(cur);
                cur.clear();
            }
            cur_has_run = true;
        }
        cur += line;
        cur += '\n';
    }
    if (cur_has_run) blocks.push_back(cur);

    std::ostringstream os;
    os << "shot,faults,events,match_weight,failure\n";
    for (const std::string& block : blocks) {
        FaultDump dump = parse_fault_dump(block);
        Layout layout = build_layout(dump.distance);
        GateSchedule schedule = build_round_schedule(layout);
        Lattice lattice = build_lattice(layout, schedule, dump.rounds,
                                        memory_stab_kind(dump.basis));
        MeasurementRecord rec =
            run_shot(layout, schedule, dump.faults, dump.rounds, dump.basis);
        DetectionSet events;
        for (const DetectionPoint& pt : extract_detection_events(rec, layout)) {
            if (pt.type == lattice.type) events.push_back(pt);
        }
        auto dots = detection_dots(lattice, events);
        Matching m = solve_matching(build_matching_problem(lattice, dots));
        CorrectionSet corr = correction_from_matching(lattice, m, dots);
        bool failed = logical_failure(rec, layout, corr);
        os << dump.shot << ',' << dump.faults.size() << ',' << events.size()
           << ',' << m.total_weight << ',' << (failed ? 1 : 0) << "\n";
    }
    return os.str();
}

int run_cli(const RunConfig& config) {
    try {
        validate_config(config);
        std::string payload;
        switch (config.mode) {
            case RunMode::MonteCarlo: {
                ShotStats stats;
                payload = montecarlo_output(config, &stats);
                std::cerr << "montecarlo: " << stats.failures << "/" << stats.shots
                          << " failures in " << stats.wall_seconds << " s ("
                          << static_cast<int64_t>(stats.shots_per_second)
                          << " shots/s)\n";
                break;
            }
            case RunMode::Sweep:
                payload = sweep_output(config);
                break;
            case RunMode::Bounds:
                payload = bounds_output(config);
                break;
            case RunMode::LatticeExport:
                payload = lattice_export_output(config);
                break;
            case RunMode::SweepVerify:
                payload = sweep_verify_output(config);
                break;
            case RunMode::Replay: {
                std::ifstream f(config.faults_path, std::ios::binary);
                if (!f) throw UsageError("faults", "cannot open fault dump");
                std::ostringstream buf;
                buf << f.rdbuf();
                payload = replay_output(config, buf.str());
                break;
            }
        }
        if (config.out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(config.out_path, std::ios::binary);
            if (!f) throw UsageError("out", "cannot open output file");
            f << payload;
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace surfmatch
