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

#include "augsurf/sim.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace augsurf {

namespace {

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

struct Counts {
    uint64_t failures = 0;
    uint64_t inconsistencies = 0;
};

Counts run_trials(const AugmentedCode &code, DecoderKind kind, double p, uint64_t seed, uint64_t begin,
                  uint64_t end) {
    UnionFindDecoder decoder(code);
    Counts counts;
    for (uint64_t t = begin; t < end; ++t) {
        TrialRng rng(seed, t);
        ErrorStdForm error = sample_error(code, p, rng);
        SyndromeStdForm s = code.syndrome(error);
        try {
            ErrorStdForm correction = decoder.decode(s, kind);
            if (code.syndrome(correction) != s) {
                throw std::logic_error("decoder returned a correction with the wrong syndrome (trial " +
                                       std::to_string(t) + ")");
            }
            error ^= correction;
            if (code.flips_logical(error)) {
                ++counts.failures;
            }
        } catch (const DecoderInconsistency &) {
            ++counts.failures;
            ++counts.inconsistencies;
        }
    }
    return counts;
}

}  // namespace

TrialRng::TrialRng(uint64_t seed, uint64_t trial) : state_(seed ^ mix64(trial + 0x632BE59BD9B4E019ULL)) {
}

ErrorStdForm sample_error(const AugmentedCode &code, double p, TrialRng &rng) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("error probability must lie in [0, 1]");
    }
    ErrorStdForm err = code.zero_error();
    if (p == 0) {
        return err;
    }
    bool always = p >= 1;
    uint64_t threshold = always ? 0 : static_cast<uint64_t>(std::ldexp(p, 64));
    auto fill = [&](std::vector<CodeWord> &cells, size_t width) {
        for (CodeWord &w : cells) {
            for (size_t a = 0; a < width; ++a) {
                if (always || rng.next() < threshold) {
                    w |= CodeWord{1} << a;
                }
            }
        }
    };
    const CssCode &fixed = code.fixed();
    fill(err.vertex, fixed.n_z());
    fill(err.edge, fixed.n());
    fill(err.face, fixed.n_x());
    return err;
}

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    constexpr double z = 1.959963984540054;
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double denom = 1 + z * z / n;
    double center = (phat + z * z / (2 * n)) / denom;
    double half = z / denom * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n));
    // The bounds are exactly 0 and 1 at the extremes; the formula leaves roundoff there.
    double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

PointResult run_point(const AugmentedCode &code, DecoderKind decoder, double p, uint64_t trials, uint64_t seed,
                      unsigned threads) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("error probability must lie in [0, 1]");
    }
    auto start = std::chrono::steady_clock::now();
    threads = std::max(1u, threads);
    std::vector<Counts> partial(threads);
    if (threads == 1) {
        partial[0] = run_trials(code, decoder, p, seed, 0, trials);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned w = 0; w < threads; ++w) {
            uint64_t lo = trials * w / threads;
            uint64_t hi = trials * (w + 1) / threads;
            workers.emplace_back([&, w, lo, hi] {
                try {
                    partial[w] = run_trials(code, decoder, p, seed, lo, hi);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto &t : workers) {
            t.join();
        }
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    PointResult out;
    out.m = code.m();
    out.p = p;
    out.trials = trials;
    for (const Counts &c : partial) {
        out.failures += c.failures;
        out.inconsistencies += c.inconsistencies;
    }
    out.rate = trials == 0 ? 0.0 : static_cast<double>(out.failures) / static_cast<double>(trials);
    auto ci = wilson_interval(out.failures, trials);
    out.ci_low = ci.low;
    out.ci_high = ci.high;
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<double> default_p_grid() {
    std::vector<double> out;
    for (int i = 0; i < 10; ++i) {
        out.push_back(0.002 * std::pow(50.0, i / 9.0));
    }
    out.back() = 0.1;
    return out;
}

void validate(const SweepConfig &config) {
    if (config.m_values.empty()) {
        throw std::invalid_argument("sweep needs at least one m value");
    }
    for (size_t m : config.m_values) {
        if (m < 2) {
            throw std::invalid_argument("m must be at least 2");
        }
    }
    if (config.p_values.empty()) {
        throw std::invalid_argument("sweep needs at least one p value");
    }
    for (double p : config.p_values) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("p values must lie in [0, 1]");
        }
    }
    if (config.trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (config.format != "csv" && config.format != "json") {
        throw std::invalid_argument("format must be csv or json");
    }
}

CssCode resolve_fixed_code(const std::string &id) {
    if (id == "422" || id == "[[4,2,2]]") {
        return CssCode::four_two_two();
    }
    if (id == "trivial" || id == "[[1,1,1]]") {
        return CssCode::trivial();
    }
    return CssCode::load(id);
}

std::string code_label(const AugmentedCode &code) {
    std::string label = "tc(" + std::to_string(code.m()) + ")";
    if (code.fixed().name() != "trivial") {
        label += "x" + code.fixed().name();
    }
    return label;
}

std::vector<SweepRow> run_sweep(const SweepConfig &config) {
    validate(config);
    CssCode fixed = resolve_fixed_code(config.fixed_code);
    std::vector<SweepRow> rows;
    for (size_t m : config.m_values) {
        AugmentedCode code(m, fixed);
        for (double p : config.p_values) {
            SweepRow row{code_label(code), fixed.name(),
                         run_point(code, config.decoder, p, config.trials, config.seed, config.threads)};
            if (!config.record_time) {
                row.point.wall_ms = 0;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_csv(std::ostream &out, const SweepConfig &config, const std::vector<SweepRow> &rows) {
    out << "code,m,fixed_code,decoder,p,trials,failures,inconsistencies,rate,ci_low,ci_high,seed,wall_ms\n";
    for (const SweepRow &row : rows) {
        const PointResult &pt = row.point;
        out << row.code << ',' << pt.m << ',' << row.fixed_code << ',' << decoder_name(config.decoder) << ','
            << format_double(pt.p) << ',' << pt.trials << ',' << pt.failures << ',' << pt.inconsistencies << ','
            << format_double(pt.rate) << ',' << format_double(pt.ci_low) << ',' << format_double(pt.ci_high) << ','
            << config.seed << ',' << format_double(pt.wall_ms) << '\n';
    }
}

void write_json(std::ostream &out, const SweepConfig &config, const std::vector<SweepRow> &rows) {
    nlohmann::json doc;
    doc["config"] = {
        {"m", config.m_values},
        {"fixed_code", config.fixed_code},
        {"decoder", std::string(decoder_name(config.decoder))},
        {"p", config.p_values},
        {"trials", config.trials},
        {"seed", config.seed},
    };
    nlohmann::json points = nlohmann::json::array();
    for (const SweepRow &row : rows) {
        const PointResult &pt = row.point;
        points.push_back({
            {"code", row.code},
            {"m", pt.m},
            {"fixed_code", row.fixed_code},
            {"decoder", std::string(decoder_name(config.decoder))},
            {"p", pt.p},
            {"trials", pt.trials},
            {"failures", pt.failures},
            {"inconsistencies", pt.inconsistencies},
            {"rate", pt.rate},
            {"ci_low", pt.ci_low},
            {"ci_high", pt.ci_high},
            {"seed", config.seed},
            {"wall_ms", pt.wall_ms},
        });
    }
    doc["points"] = std::move(points);
    out << doc.dump(2) << '\n';
}

std::vector<OverheadRow> overhead_table(const std::vector<size_t> &d_values) {
    std::vector<OverheadRow> rows;
    for (size_t d : d_values) {
        if (d == 0 || d % 2 != 0) {
            throw std::invalid_argument("overhead table needs positive even distances");
        }
        double dd = static_cast<double>(d);
        double half = dd / 2;
        rows.push_back({d, 2 * dd * dd / 2, 10 * half * half / 4});
    }
    return rows;
}

void write_overhead_csv(std::ostream &out, const std::vector<OverheadRow> &rows) {
    out << "d,toric_n_per_k,augmented_n_per_k\n";
    for (const OverheadRow &row : rows) {
        out << row.d << ',' << format_double(row.toric) << ',' << format_double(row.augmented) << '\n';
    }
}

}  // namespace augsurf
