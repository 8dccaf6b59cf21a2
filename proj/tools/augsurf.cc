// Copyright 2026 The augsurf Authors
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

// Command line front end: threshold sweeps, distance checks, overhead table, invariant checks.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "augsurf/oracles.h"
#include "augsurf/sim.h"

namespace {

using namespace augsurf;

int run_sweep_command(const SweepConfig &config) {
    validate(config);
    std::vector<SweepRow> rows = run_sweep(config);
    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!config.out_path.empty()) {
        file.open(config.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open " << config.out_path << "\n";
            return 1;
        }
        out = &file;
    }
    if (config.format == "json") {
        write_json(*out, config, rows);
    } else {
        write_csv(*out, config, rows);
    }
    return 0;
}

int run_distance_command(size_t m, const std::string &fixed, size_t w_max) {
    AugmentedCode code(m, resolve_fixed_code(fixed));
    DistanceResult r = brute_force_distance(code, w_max);
    std::cout << code_label(code) << " n=" << code.n() << " k=" << code.k() << " claimed_d=" << code.distance();
    if (r.distance) {
        std::cout << " min_logical_weight=" << *r.distance << "\n";
    } else {
        std::cout << " no_logical_up_to=" << w_max << "\n";
    }
    return 0;
}

int run_verify_command(uint64_t seed) {
    bool ok = true;
    for (const CheckResult &c : verify_invariants(seed)) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
        ok = ok && c.passed;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"augmented surface code simulator"};
    app.require_subcommand(1);

    SweepConfig sweep;
    std::string decoder = "v2";
    auto *sweep_cmd = app.add_subcommand("sweep", "logical failure rate under i.i.d. Z noise");
    sweep_cmd->add_option("--m", sweep.m_values, "torus sizes")->required()->delimiter(',');
    sweep_cmd->add_option("--fixed-code", sweep.fixed_code, "422, trivial, or a fixed-code file");
    sweep_cmd->add_option("--decoder", decoder, "v1, v2, or subedge");
    sweep_cmd->add_option("--p-list", sweep.p_values, "physical error rates (default: 10 points from 0.002 to 0.1)")
        ->delimiter(',');
    sweep_cmd->add_option("--trials", sweep.trials, "trials per point");
    sweep_cmd->add_option("--seed", sweep.seed, "master seed");
    sweep_cmd->add_option("--out", sweep.out_path, "output file (stdout if omitted)");
    sweep_cmd->add_option("--format", sweep.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--threads", sweep.threads, "worker threads");
    sweep_cmd->add_flag("--record-time", sweep.record_time, "fill the wall_ms column");

    size_t dist_m = 2;
    std::string dist_fixed = "422";
    size_t w_max = 4;
    auto *dist_cmd = app.add_subcommand("distance", "brute-force minimum logical weight");
    dist_cmd->add_option("--m", dist_m, "torus size")->required();
    dist_cmd->add_option("--fixed-code", dist_fixed, "422, trivial, or a fixed-code file");
    dist_cmd->add_option("--w-max", w_max, "largest weight to enumerate");

    std::vector<size_t> d_values;
    auto *over_cmd = app.add_subcommand("overhead", "qubits per logical qubit vs distance");
    over_cmd->add_option("--d", d_values, "even distances (default 2,4,...,30)")->delimiter(',');

    uint64_t verify_seed = 1;
    auto *verify_cmd = app.add_subcommand("verify", "runtime invariant checks");
    verify_cmd->add_option("--seed", verify_seed, "seed for sampled checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep_cmd) {
            sweep.decoder = parse_decoder(decoder);
            if (sweep.p_values.empty()) {
                sweep.p_values = default_p_grid();
            }
            return run_sweep_command(sweep);
        }
        if (*dist_cmd) {
            return run_distance_command(dist_m, dist_fixed, w_max);
        }
        if (*over_cmd) {
            if (d_values.empty()) {
                for (size_t d = 2; d <= 30; d += 2) {
                    d_values.push_back(d);
                }
            }
            write_overhead_csv(std::cout, overhead_table(d_values));
            return 0;
        }
        if (*verify_cmd) {
            return run_verify_command(verify_seed);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
