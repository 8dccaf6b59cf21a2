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

#include <string>

#include "augsurf/chain_complex.h"
#include "augsurf/sim.h"

namespace augsurf {

namespace {

CheckResult check(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> verify_invariants(uint64_t seed) {
    std::vector<CheckResult> out;
    CssCode c422 = CssCode::four_two_two();
    CssCode trivial = CssCode::trivial();

    {
        bool ok = true;
        for (size_t m = 2; m <= 8; ++m) {
            ok = ok && Torus(m).chain_complex().verify();
        }
        for (size_t m = 2; m <= 4; ++m) {
            ok = ok && AugmentedCode(m, c422).product_complex().verify();
        }
        out.push_back(check("boundary_squared_zero", ok, "tori m=2..8, products m=2..4"));
    }

    {
        bool ok = true;
        std::string detail;
        for (size_t m = 2; m <= 6; ++m) {
            AugmentedCode code(m, c422);
            size_t k = homology_dim(code.product_complex(), 2);
            ok = ok && code.n() == 10 * m * m && k == 4 && code.k() == 4;
            AugmentedCode plain(m, trivial);
            ok = ok && plain.n() == 2 * m * m && homology_dim(plain.product_complex(), 2) == 2;
            detail += "m=" + std::to_string(m) + ":[[" + std::to_string(code.n()) + "," + std::to_string(k) + "," +
                      std::to_string(code.distance()) + "]] ";
        }
        out.push_back(check("code_parameters", ok, detail));
    }

    {
        AugmentedCode code(3, c422);
        size_t nv = code.torus().num_vertices() * c422.n();
        auto gens = code.x_stabilizers();
        bool ok = gens.size() == code.num_x_checks();
        for (size_t i = 0; i < gens.size(); ++i) {
            ok = ok && gens[i].weight() == (i < nv ? 5u : 6u);
        }
        out.push_back(check("stabilizer_weights", ok, "vertex generators weight 5, edge generators weight 6"));
    }

    {
        bool ok = true;
        for (const CssCode *fixed : {&c422, &trivial}) {
            AugmentedCode code(3, *fixed);
            BitMatrix d2 = code.product_complex().boundary(2);
            for (uint64_t t = 0; t < 200; ++t) {
                TrialRng rng(seed, t);
                ErrorStdForm err = sample_error(code, 0.2, rng);
                ok = ok && code.syndrome_to_bits(code.syndrome(err)) == mat_vec(d2, code.error_to_bits(err));
            }
        }
        out.push_back(check("syndrome_routes_agree", ok, "cellwise accumulation vs product boundary, 400 errors"));
    }

    {
        AugmentedCode code(4, c422);
        UnionFindDecoder decoder(code);
        uint64_t violations = 0;
        uint64_t inconsistencies = 0;
        for (DecoderKind kind : {DecoderKind::kV1, DecoderKind::kV2, DecoderKind::kSubedge}) {
            for (uint64_t t = 0; t < 2000; ++t) {
                TrialRng rng(seed, t);
                SyndromeStdForm s = code.syndrome(sample_error(code, 0.05, rng));
                try {
                    if (code.syndrome(decoder.decode(s, kind)) != s) {
                        ++violations;
                    }
                } catch (const DecoderInconsistency &) {
                    ++inconsistencies;
                }
            }
        }
        out.push_back(check("decoder_soundness", violations == 0 && inconsistencies == 0,
                            std::to_string(violations) + " violations, " + std::to_string(inconsistencies) +
                                " inconsistencies over 6000 decodes"));
    }

    {
        AugmentedCode code(2, c422);
        UnionFindDecoder decoder(code);
        uint64_t failures = 0;
        for (DecoderKind kind : {DecoderKind::kV1, DecoderKind::kV2, DecoderKind::kSubedge}) {
            for (size_t q = 0; q < code.n(); ++q) {
                BitVec bits(code.n());
                bits.set(q);
                ErrorStdForm err = code.error_from_bits(bits);
                try {
                    err ^= decoder.decode(code.syndrome(err), kind);
                    failures += code.is_logical_failure(err) ? 1 : 0;
                } catch (const DecoderInconsistency &) {
                    ++failures;
                }
            }
        }
        out.push_back(check("single_errors_corrected", failures == 0, "tc(2)x422, every weight-1 error, 3 decoders"));
    }

    return out;
}

}  // namespace augsurf
