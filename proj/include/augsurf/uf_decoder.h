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

#ifndef AUGSURF_UF_DECODER_H
#define AUGSURF_UF_DECODER_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "augsurf/augmented_code.h"

namespace augsurf {

enum class DecoderKind {
    kV1,       // whole validity vector drives growth
    kV2,       // one growth + logical peeling pass per fixed-code logical
    kSubedge,  // kV1 with each edge split into d_C growth units
};

std::string_view decoder_name(DecoderKind kind);
/// Accepts "v1", "v2", "subedge". Throws std::invalid_argument otherwise.
DecoderKind parse_decoder(std::string_view name);

/// Residual vertex syndrome outside the image of H_Z^T. A valid cluster never leaves one
/// behind, so this signals a decoder bug or a syndrome that no error produces.
class DecoderInconsistency : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Disjoint-set forest over torus vertices plus per-edge growth counters.
///
/// Each edge carries `units` growth units split between its two endpoints (2 = half
/// edges). An edge is covered once its counters sum to `units`. Roots carry the XOR of
/// their members' validity words, the number of members that still touch an uncovered
/// edge ("boundary size"), and the smallest member index, which breaks ties.
class ClusterForest {
   public:
    explicit ClusterForest(const Torus &torus);

    /// Singletons, no coverage, zero validity. `units` must be at least 1.
    void reset(uint32_t units);
    uint32_t units() const {
        return units_;
    }

    /// Adds `from_first` units on the side of endpoint 0 and `from_second` on endpoint 1,
    /// saturating at full coverage. Does not merge.
    void seed(size_t edge, uint32_t from_first, uint32_t from_second);
    void set_validity(size_t vertex, CodeWord val);
    /// Unions the endpoints of every covered edge.
    void merge_covered();

    /// Grows invalid clusters until every root has (validity & mask) == 0. Each step picks
    /// the invalid root with the smallest boundary size (ties: smallest member index) and
    /// adds one unit, from the member's side, to every uncovered edge at every boundary
    /// member. Throws std::logic_error if an invalid cluster has nothing left to grow.
    void grow(CodeWord mask);

    size_t find(size_t v);
    bool is_covered(size_t e) const {
        return covered_[e] != 0;
    }
    uint32_t coverage(size_t e, int side) const {
        return counters_[2 * e + side];
    }
    CodeWord validity(size_t root) const {
        return validity_[root];
    }
    size_t boundary_size(size_t root) const {
        return boundary_count_[root];
    }
    /// Covered edges in increasing index.
    std::vector<size_t> covered_edges() const;
    /// Growth steps taken by the last grow() call.
    size_t last_growth_steps() const {
        return last_steps_;
    }

   private:
    void cover(size_t e, std::vector<size_t> &touched);
    void unite(size_t a, size_t b);

    const Torus *torus_;
    uint32_t units_ = 2;
    std::vector<uint32_t> parent_;
    std::vector<uint32_t> size_;
    std::vector<CodeWord> validity_;
    std::vector<uint32_t> boundary_count_;
    std::vector<uint32_t> min_vertex_;
    std::vector<std::vector<uint32_t>> boundary_;
    std::vector<uint32_t> uncovered_;
    std::vector<uint32_t> counters_;
    std::vector<uint8_t> covered_;
    size_t last_steps_ = 0;
};

/// Output of the edge cancellation phase.
struct EdgeCancellation {
    /// e (x) D_X(s(e)) on every edge with s(e) != 0.
    ErrorStdForm correction;
    /// Input syndrome plus the boundary of `correction`: edge parts are zero.
    SyndromeStdForm syndrome;
    /// Edges whose input s(e) was nonzero, increasing.
    std::vector<size_t> erased;
};

/// Spanning forest of a set of covered edges, built breadth first from the smallest
/// unvisited vertex with incident edges taken in increasing index.
struct PeelingForest {
    /// Non-root vertices in discovery order.
    std::vector<size_t> order;
    /// parent_edge[v] for each v in `order`; meaningless for roots and unvisited vertices.
    std::vector<size_t> parent_edge;
};

PeelingForest spanning_forest(const Torus &torus, const std::vector<size_t> &edges);

/// Union-find decoders for Z errors on an augmented surface code.
///
/// One instance owns its scratch state and is not thread safe; share the code, not the
/// decoder.
class UnionFindDecoder {
   public:
    explicit UnionFindDecoder(const AugmentedCode &code);

    const AugmentedCode &code() const {
        return *code_;
    }

    /// Dispatches on kind; kSubedge splits each edge into max(2, d_C) units.
    ErrorStdForm decode(const SyndromeStdForm &s, DecoderKind kind);
    ErrorStdForm decode_v1(const SyndromeStdForm &s);
    ErrorStdForm decode_v2(const SyndromeStdForm &s);
    ErrorStdForm decode_subedge(const SyndromeStdForm &s, uint32_t units);

    EdgeCancellation edge_cancellation(const SyndromeStdForm &s) const;

    /// Seeds the forest from a cancellation, takes vertex validity from `s`, merges, and
    /// grows until clusters are valid under `mask`. An edge corrected with weight c starts
    /// with c units from each side when 2c < units and fully covered otherwise, so with
    /// units = 2 every erased edge starts covered. Returns the covered edges.
    std::vector<size_t> grow(const EdgeCancellation &cancel, const SyndromeStdForm &s, CodeWord mask,
                             uint32_t units);

    /// Peeling over the covered edges: at each leaf u with parent edge e, the non-logical
    /// part of s(u) and each logical z_i with (s(u)|x_i) = 1 are moved across e.
    void peel(SyndromeStdForm &s, const std::vector<size_t> &covered, ErrorStdForm &correction) const;
    /// Moves z_i across the leaf edge whenever (s(u)|x_i) = 1.
    void peel_logical(SyndromeStdForm &s, const std::vector<size_t> &covered, size_t logical,
                      ErrorStdForm &correction) const;
    /// Moves all of s(u) across the leaf edge.
    void peel_transport(SyndromeStdForm &s, const std::vector<size_t> &edges, ErrorStdForm &correction) const;
    /// Clears every vertex syndrome with D_Z^T. Throws DecoderInconsistency when some s(v)
    /// is not in the image of H_Z^T.
    void residual_node_correction(SyndromeStdForm &s, ErrorStdForm &correction) const;

    /// Validity word of a vertex syndrome: bit i is (s | x_i).
    CodeWord vertex_validity(CodeWord s) const {
        return code_->fixed().logical_pairing(s);
    }
    ClusterForest &forest() {
        return forest_;
    }

   private:
    const AugmentedCode *code_;
    ClusterForest forest_;
};

/// A sub-cell complex of the torus used as a cluster. Every edge's endpoints must be
/// listed in `vertices` and every face's edges in `edges`.
struct Cluster {
    std::vector<size_t> vertices;
    std::vector<size_t> edges;
    std::vector<size_t> faces;
};

/// Validity of a cluster for a syndrome supported on it, with the whole fixed code
/// attached to every cell: the boundary of the syndrome vanishes on the cluster, and
/// for every fixed-code logical x_j and every connected component of the cluster the
/// partial inner products (s(v) | x_j) sum to zero. Throws std::invalid_argument when the
/// syndrome has support outside the cluster.
bool general_cluster_validity(const AugmentedCode &code, const Cluster &cluster, const SyndromeStdForm &s);

}  // namespace augsurf

#endif
