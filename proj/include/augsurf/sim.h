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

#ifndef AUGSURF_SIM_H
#define AUGSURF_SIM_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "augsurf/augmented_code.h"
#include "augsurf/uf_decoder.h"

namespace augsurf {

/// SplitMix64. Each trial gets its own stream keyed by (master seed, trial index), so
/// results do not depend on how trials are split across threads.
class TrialRng {
   public:
    TrialRng(uint64_t seed, uint64_t trial);

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

   private:
    uint64_t state_;
};

/// Flips every qubit coordinate independently with probability p. Uses one 64-bit draw
/// per coordinate compared against a fixed threshold, so samples are identical on every
/// platform.
ErrorStdForm sample_error(const AugmentedCode &code, double p, TrialRng &rng);

struct WilsonInterval {
    double low;
    double high;
};
/// 95% Wilson score interval for `successes` out of `trials`.
WilsonInterval wilson_interval(uint64_t successes, uint64_t trials);

struct PointResult {
    size_t m = 0;
    double p = 0;
    uint64_t trials = 0;
    /// Includes inconsistencies.
    uint64_t failures = 0;
    uint64_t inconsistencies = 0;
    double rate = 0;
    double ci_low = 0;
    double ci_high = 0;
    double wall_ms = 0;
};

/// Runs `trials` decoding trials at error rate p. Trials are split over `threads`
/// workers, each with its own decoder; counts are identical for any thread count.
/// Throws std::logic_error if a correction's syndrome differs from the input syndrome.
PointResult run_point(const AugmentedCode &code, DecoderKind decoder, double p, uint64_t trials, uint64_t seed,
                      unsigned threads = 1);

struct SweepConfig {
    std::vector<size_t> m_values;
    /// "422", "trivial", or a path to a fixed-code text file.
    std::string fixed_code = "422";
    DecoderKind decoder = DecoderKind::kV2;
    std::vector<double> p_values;
    uint64_t trials = 100000;
    uint64_t seed = 1;
    std::string out_path;
    /// "csv" or "json".
    std::string format = "csv";
    unsigned threads = 1;
    /// Fill wall_ms; off by default so identical configs give identical files.
    bool record_time = false;
};

/// Ten p values spaced geometrically from 0.002 to 0.1; used when a sweep names none.
std::vector<double> default_p_grid();

/// Validates ranges; throws std::invalid_argument on a bad config.
void validate(const SweepConfig &config);
CssCode resolve_fixed_code(const std::string &id);
/// "tc(m)" for the trivial fixed code, "tc(m)x<name>" otherwise.
std::string code_label(const AugmentedCode &code);

struct SweepRow {
    std::string code;
    std::string fixed_code;
    PointResult point;
};

std::vector<SweepRow> run_sweep(const SweepConfig &config);
void write_csv(std::ostream &out, const SweepConfig &config, const std::vector<SweepRow> &rows);
void write_json(std::ostream &out, const SweepConfig &config, const std::vector<SweepRow> &rows);

struct OverheadRow {
    size_t d;
    /// n/k of the [[2m^2, 2, m]] toric code with m = d.
    double toric;
    /// n/k of tc(d/2) x [[4,2,2]], a [[10 (d/2)^2, 4, d]] code. Requires even d.
    double augmented;
};

/// Throws std::invalid_argument for odd or zero d.
std::vector<OverheadRow> overhead_table(const std::vector<size_t> &d_values);
void write_overhead_csv(std::ostream &out, const std::vector<OverheadRow> &rows);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runtime invariant checks on small instances: chain complex identities, code
/// parameters, stabilizer weights, syndrome routes, and decoder postconditions.
std::vector<CheckResult> verify_invariants(uint64_t seed = 1);

}  // namespace augsurf

#endif
