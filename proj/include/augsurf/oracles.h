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

#ifndef AUGSURF_ORACLES_H
#define AUGSURF_ORACLES_H

#include <cstddef>
#include <cstdint>
#include <optional>

#include "augsurf/augmented_code.h"
#include "augsurf/gf2.h"
#include "augsurf/uf_decoder.h"

namespace augsurf {

// Brute-force references. Slow by construction; every answer comes from enumeration or
// Gaussian elimination on the dense product complex, never from the decoder's data
// structures.

/// Upper limit on the number of candidates an enumeration may visit.
inline constexpr uint64_t kMaxEnumeration = 1'000'000'000;

/// sum_{w <= w_max} C(n, w), saturating at UINT64_MAX.
uint64_t count_candidates(size_t n, size_t w_max);

struct DistanceResult {
    /// Minimum logical weight, or nullopt when none exists up to w_max.
    std::optional<size_t> distance;
    size_t w_max = 0;
    /// Lexicographically first minimum-weight logical, when found.
    std::optional<ErrorStdForm> witness;
};

/// Minimum weight of a Z error with zero syndrome that is a nontrivial logical, found by
/// increasing-weight enumeration. Throws std::invalid_argument when more than
/// kMaxEnumeration candidates would be needed.
DistanceResult brute_force_distance(const AugmentedCode &code, size_t w_max);

/// Minimum-weight error with syndrome `s`; among equal weights the support that comes
/// first lexicographically. nullopt if no error of weight <= w_max matches. Throws
/// std::invalid_argument when the enumeration bound would exceed kMaxEnumeration.
std::optional<ErrorStdForm> exact_decode(const AugmentedCode &code, const SyndromeStdForm &s, size_t w_max);

/// Cluster validity by elimination on the product complex's degree-2 boundary matrix.
class ClusterOracle {
   public:
    explicit ClusterOracle(const AugmentedCode &code);

    /// True iff some error supported on the cluster's qubits (n_Z per vertex, n_C per
    /// edge, n_X per face) has syndrome exactly `s` over all checks of the code.
    bool is_boundary_on_cluster(const Cluster &cluster, const SyndromeStdForm &s) const;

    /// Whole-code version: is `residual` (zero syndrome assumed) a product of
    /// Z-stabilizers, i.e. is it in the column space of the degree-3 boundary?
    bool is_stabilizer(const ErrorStdForm &residual) const;

   private:
    const AugmentedCode *code_;
    BitMatrix boundary2_;
    BitMatrix boundary3_;
};

}  // namespace augsurf

#endif
