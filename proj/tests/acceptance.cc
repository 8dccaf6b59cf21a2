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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "augsurf/chain_complex.h"
#include "augsurf/oracles.h"
#include "augsurf/sim.h"
#include "plain_uf.h"

namespace {

using namespace augsurf;

struct Outcome {
    bool passed;
    std::string detail;
};

int g_failures = 0;

void report(const char *name, double limit_s, const std::function<Outcome()> &body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception &e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = limit_s <= 0 || secs <= limit_s;
    bool ok = out.passed && in_time;
    g_failures += ok ? 0 : 1;
    std::printf("%s %-22s %s [%.1fs%s]\n", ok ? "PASS" : "FAIL", name, out.detail.c_str(), secs,
                in_time ? "" : ", over time limit");
    std::fflush(stdout);
}

std::string fmt(const char *format, double a = 0, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c, d);
    return buf;
}

Outcome code_parameters() {
    CssCode fixed = CssCode::four_two_two();
    std::string detail;
    bool ok = true;
    for (size_t m = 2; m <= 6; ++m) {
        AugmentedCode code(m, fixed);
        ChainComplex cx = code.product_complex();
        size_t n = cx.dim(2);
        size_t k = homology_dim(cx, 2);
        ok = ok && n == 10 * m * m && k == 4 && code.n() == n && code.k() == k;
        detail += "m=" + std::to_string(m) + ":n=" + std::to_string(n) + ",k=" + std::to_string(k) + " ";
    }
    return {ok, detail};
}

Outcome stabilizer_weights() {
    CssCode fixed = CssCode::four_two_two();
    bool ok = true;
    size_t vertex_gens = 0;
    size_t edge_gens = 0;
    for (size_t m = 2; m <= 6; ++m) {
        AugmentedCode code(m, fixed);
        size_t nv = code.torus().num_vertices() * fixed.n();
        auto gens = code.x_stabilizers();
        for (size_t i = 0; i < gens.size(); ++i) {
            bool vertex = i < nv;
            ok = ok && gens[i].weight() == (vertex ? 5u : 6u);
            (vertex ? vertex_gens : edge_gens) += 1;
        }
    }
    return {ok, std::to_string(vertex_gens) + " vertex generators of weight 5, " + std::to_string(edge_gens) +
                    " edge generators of weight 6 (m=2..6)"};
}

Outcome distance() {
    CssCode fixed = CssCode::four_two_two();
    AugmentedCode small(2, fixed);
    DistanceResult d2 = brute_force_distance(small, 4);
    AugmentedCode big(3, fixed);
    DistanceResult d3 = brute_force_distance(big, 5);
    // Explicit weight-6 logical: a loop of three edges carrying a weight-2 fixed-code Z logical.
    bool rep_ok = false;
    for (const ErrorStdForm &rep : big.logical_z_reps()) {
        if (rep.weight() == 6 && big.syndrome(rep).is_zero() && big.is_logical_failure(rep)) {
            rep_ok = true;
        }
    }
    bool ok = d2.distance == 4 && !d3.distance && rep_ok;
    std::string detail = "tc(2)x422 d=" + (d2.distance ? std::to_string(*d2.distance) : std::string("none")) +
                         "; tc(3)x422 " + (d3.distance ? "found weight " + std::to_string(*d3.distance)
                                                       : std::string("no logical up to weight 5")) +
                         ", weight-6 representative " + (rep_ok ? "verified" : "missing");
    return {ok, detail};
}

Outcome half_distance() {
    AugmentedCode code(3, CssCode::four_two_two());
    UnionFindDecoder decoder(code);
    size_t n = code.n();
    std::vector<BitVec> errors;
    for (size_t i = 0; i < n; ++i) {
        errors.push_back(BitVec::from_indices(n, std::vector<size_t>{i}));
        for (size_t j = i + 1; j < n; ++j) {
            errors.push_back(BitVec::from_indices(n, std::vector<size_t>{i, j}));
        }
    }
    uint64_t failures = 0;
    for (DecoderKind kind : {DecoderKind::kV1, DecoderKind::kV2, DecoderKind::kSubedge}) {
        for (const BitVec &bits : errors) {
            ErrorStdForm err = code.error_from_bits(bits);
            try {
                err ^= decoder.decode(code.syndrome(err), kind);
                failures += code.is_logical_failure(err) ? 1 : 0;
            } catch (const std::exception &) {
                ++failures;
            }
        }
    }
    return {failures == 0, std::to_string(errors.size()) + " errors x 3 decoders, " + std::to_string(failures) +
                               " failures"};
}

Outcome soundness() {
    AugmentedCode code(4, CssCode::four_two_two());
    UnionFindDecoder decoder(code);
    const uint64_t trials = 100000;
    uint64_t violations = 0;
    uint64_t inconsistencies = 0;
    for (DecoderKind kind : {DecoderKind::kV1, DecoderKind::kV2, DecoderKind::kSubedge}) {
        for (uint64_t t = 0; t < trials; ++t) {
            TrialRng rng(11, t);
            SyndromeStdForm s = code.syndrome(sample_error(code, 0.05, rng));
            try {
                violations += code.syndrome(decoder.decode(s, kind)) == s ? 0 : 1;
            } catch (const DecoderInconsistency &) {
                ++inconsistencies;
            }
        }
    }
    return {violations == 0 && inconsistencies == 0,
            "3 x 1e5 trials at p=0.05: " + std::to_string(violations) + " syndrome mismatches, " +
                std::to_string(inconsistencies) + " inconsistencies"};
}

// Random connected cluster: a random walk over vertices, random extra edges between
// members, and every face whose four edges are present.
Cluster random_cluster(const Torus &torus, TrialRng &rng) {
    std::vector<uint8_t> in_v(torus.num_vertices(), 0);
    std::vector<uint8_t> in_e(torus.num_edges(), 0);
    size_t target = 1 + rng.next() % torus.num_vertices();
    std::vector<size_t> members{rng.next() % torus.num_vertices()};
    in_v[members[0]] = 1;
    for (size_t tries = 0; members.size() < target && tries < 100 * target; ++tries) {
        size_t u = members[rng.next() % members.size()];
        size_t e = torus.vertex_edges(u)[rng.next() % 4];
        const auto &ends = torus.edge_endpoints(e);
        size_t w = ends[0] == u ? ends[1] : ends[0];
        if (!in_v[w]) {
            in_v[w] = 1;
            in_e[e] = 1;
            members.push_back(w);
        }
    }
    for (size_t e = 0; e < torus.num_edges(); ++e) {
        const auto &ends = torus.edge_endpoints(e);
        if (in_v[ends[0]] && in_v[ends[1]] && rng.next() % 2 == 0) {
            in_e[e] = 1;
        }
    }
    Cluster c;
    for (size_t v = 0; v < torus.num_vertices(); ++v) {
        if (in_v[v]) {
            c.vertices.push_back(v);
        }
    }
    for (size_t e = 0; e < torus.num_edges(); ++e) {
        if (in_e[e]) {
            c.edges.push_back(e);
        }
    }
    for (size_t f = 0; f < torus.num_faces(); ++f) {
        const auto &fe = torus.face_edges(f);
        if (in_e[fe[0]] && in_e[fe[1]] && in_e[fe[2]] && in_e[fe[3]]) {
            c.faces.push_back(f);
        }
    }
    return c;
}

Outcome validity_equivalence() {
    AugmentedCode code(4, CssCode::four_two_two());
    const CssCode &fixed = code.fixed();
    const Torus &torus = code.torus();
    ClusterOracle oracle(code);
    const uint64_t clusters = 1000;
    uint64_t disagreements = 0;
    uint64_t valid = 0;
    for (uint64_t t = 0; t < clusters; ++t) {
        TrialRng rng(23, t);
        Cluster c = random_cluster(torus, rng);
        ErrorStdForm err = code.zero_error();
        for (size_t v : c.vertices) {
            err.vertex[v] = rng.next() & ((CodeWord{1} << fixed.n_z()) - 1);
        }
        for (size_t e : c.edges) {
            err.edge[e] = rng.next() & ((CodeWord{1} << fixed.n()) - 1);
        }
        for (size_t f : c.faces) {
            err.face[f] = rng.next() & ((CodeWord{1} << fixed.n_x()) - 1);
        }
        SyndromeStdForm s = code.syndrome(err);
        // Four syndrome families: an exact boundary, a boundary with one logical flipped
        // at a vertex, a boundary with one check bit flipped, and uniformly random bits.
        size_t v = c.vertices[rng.next() % c.vertices.size()];
        switch (t % 4) {
            case 1:
                s.vertex[v] ^= fixed.z_logical_word(rng.next() % fixed.k());
                break;
            case 2:
                s.vertex[v] ^= CodeWord{1} << (rng.next() % fixed.n());
                break;
            case 3:
                for (size_t u : c.vertices) {
                    s.vertex[u] = rng.next() & ((CodeWord{1} << fixed.n()) - 1);
                }
                for (size_t e : c.edges) {
                    s.edge[e] = rng.next() & ((CodeWord{1} << fixed.n_x()) - 1);
                }
                break;
            default:
                break;
        }
        bool fast = general_cluster_validity(code, c, s);
        bool slow = oracle.is_boundary_on_cluster(c, s);
        valid += slow ? 1 : 0;
        disagreements += fast == slow ? 0 : 1;
    }
    return {disagreements == 0, std::to_string(clusters) + " clusters (" + std::to_string(valid) + " valid), " +
                                    std::to_string(disagreements) + " disagreements"};
}

Outcome trivial_reduction() {
    const size_t m = 6;
    AugmentedCode code(m, CssCode::trivial());
    UnionFindDecoder decoder(code);
    plain_uf::PlainToricUf plain(m);
    const uint64_t trials = 10000;
    uint64_t mismatches = 0;
    uint64_t failures = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(31, t);
        ErrorStdForm err = sample_error(code, 0.05, rng);
        std::vector<uint8_t> edges(plain.num_edges());
        for (size_t e = 0; e < edges.size(); ++e) {
            edges[e] = err.edge[e] & 1;
        }
        ErrorStdForm residual = err;
        residual ^= decoder.decode_v1(code.syndrome(err));
        bool lib_fail = code.is_logical_failure(residual);

        std::vector<uint8_t> fix = plain.decode(plain.syndrome(edges));
        for (size_t e = 0; e < edges.size(); ++e) {
            edges[e] ^= fix[e];
        }
        bool plain_fail = plain.is_logical(edges);
        failures += lib_fail ? 1 : 0;
        mismatches += lib_fail == plain_fail ? 0 : 1;
    }
    return {mismatches == 0, "tc(6), 1e4 trials at p=0.05: " + std::to_string(failures) + " failures, " +
                                 std::to_string(mismatches) + " outcome mismatches"};
}

Outcome overhead() {
    auto rows = overhead_table({30});
    AugmentedCode code(6, CssCode::four_two_two());
    double per_k = static_cast<double>(code.n()) / static_cast<double>(code.k());
    bool ok = rows[0].toric == 900.0 && rows[0].augmented == 562.5 && per_k == 90.0;
    return {ok, fmt("d=30: toric %g, augmented %g; tc(6)x422 n/k=%g", rows[0].toric, rows[0].augmented, per_k)};
}

Outcome crossover() {
    const uint64_t trials = 1000000;
    AugmentedCode aug(6, CssCode::four_two_two());
    AugmentedCode toric(9, CssCode::trivial());
    PointResult a = run_point(aug, DecoderKind::kV2, 0.01, trials, 41);
    PointResult b = run_point(toric, DecoderKind::kV2, 0.01, trials, 43);
    bool ok = a.rate < b.rate && a.ci_high < b.ci_low;
    return {ok, fmt("p=0.01, 1e6 trials: tc(6)x422 %.3g [%.3g, %.3g]", a.rate, a.ci_low, a.ci_high) +
                    fmt(" vs tc(9) %.3g [%.3g, %.3g]", b.rate, b.ci_low, b.ci_high)};
}

Outcome low_p_scaling() {
    AugmentedCode code(3, CssCode::four_two_two());
    const std::vector<double> ps = {0.002, 0.005, 0.01};
    const uint64_t trials = 10000000;
    std::vector<double> xs;
    std::vector<double> ys;
    std::string detail;
    for (double p : ps) {
        PointResult r = run_point(code, DecoderKind::kV2, p, trials, 53);
        if (r.failures == 0) {
            return {false, fmt("no failures at p=%g", p)};
        }
        xs.push_back(std::log(p));
        ys.push_back(std::log(r.rate));
        detail += fmt("p=%g:%.3g ", p, r.rate);
    }
    double mx = 0;
    double my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / xs.size();
        my += ys[i] / ys.size();
    }
    double sxy = 0;
    double sxx = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = sxy / sxx;
    return {std::abs(slope - 3.0) <= 0.3, detail + fmt("exponent %.3f", slope)};
}

Outcome determinism() {
    SweepConfig config;
    config.m_values = {3, 4};
    config.p_values = {0.02, 0.05};
    config.trials = 20000;
    config.seed = 7;
    std::vector<std::string> outputs;
    for (unsigned threads : {1u, 1u, 3u}) {
        config.threads = threads;
        std::ostringstream out;
        write_csv(out, config, run_sweep(config));
        outputs.push_back(out.str());
    }
    bool ok = outputs[0] == outputs[1] && outputs[0] == outputs[2];
    return {ok, std::string("repeat run ") + (outputs[0] == outputs[1] ? "identical" : "differs") +
                    ", 3-thread run " + (outputs[0] == outputs[2] ? "identical" : "differs")};
}

}  // namespace

int main() {
    report("code_parameters", 10, code_parameters);
    report("stabilizer_weights", 1, stabilizer_weights);
    report("distance", 300, distance);
    report("half_distance", 120, half_distance);
    report("decoder_soundness", 300, soundness);
    report("validity_equivalence", 120, validity_equivalence);
    report("trivial_reduction", 0, trivial_reduction);
    report("overhead_table", 0, overhead);
    report("crossover_trend", 0, crossover);
    report("low_p_scaling", 0, low_p_scaling);
    report("determinism", 0, determinism);
    std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
