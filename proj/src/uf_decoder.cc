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

#include "augsurf/uf_decoder.h"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>
#include <tuple>

namespace augsurf {

std::string_view decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::kV1:
            return "v1";
        case DecoderKind::kV2:
            return "v2";
        case DecoderKind::kSubedge:
            return "subedge";
    }
    return "?";
}

DecoderKind parse_decoder(std::string_view name) {
    if (name == "v1") {
        return DecoderKind::kV1;
    }
    if (name == "v2") {
        return DecoderKind::kV2;
    }
    if (name == "subedge") {
        return DecoderKind::kSubedge;
    }
    throw std::invalid_argument("unknown decoder '" + std::string(name) + "' (expected v1, v2 or subedge)");
}

// ---------------------------------------------------------------------------------------
// ClusterForest

ClusterForest::ClusterForest(const Torus &torus) : torus_(&torus) {
    size_t nv = torus.num_vertices();
    size_t ne = torus.num_edges();
    parent_.resize(nv);
    size_.resize(nv);
    validity_.resize(nv);
    boundary_count_.resize(nv);
    min_vertex_.resize(nv);
    boundary_.resize(nv);
    uncovered_.resize(nv);
    counters_.resize(2 * ne);
    covered_.resize(ne);
    reset(2);
}

void ClusterForest::reset(uint32_t units) {
    if (units == 0) {
        throw std::invalid_argument("edges need at least one growth unit");
    }
    units_ = units;
    for (uint32_t v = 0; v < parent_.size(); ++v) {
        parent_[v] = v;
        size_[v] = 1;
        validity_[v] = 0;
        boundary_count_[v] = 1;
        min_vertex_[v] = v;
        boundary_[v].assign(1, v);
        uncovered_[v] = 4;
    }
    std::fill(counters_.begin(), counters_.end(), 0);
    std::fill(covered_.begin(), covered_.end(), 0);
    last_steps_ = 0;
}

size_t ClusterForest::find(size_t v) {
    uint32_t root = static_cast<uint32_t>(v);
    while (parent_[root] != root) {
        root = parent_[root];
    }
    uint32_t cur = static_cast<uint32_t>(v);
    while (parent_[cur] != root) {
        uint32_t next = parent_[cur];
        parent_[cur] = root;
        cur = next;
    }
    return root;
}

void ClusterForest::set_validity(size_t vertex, CodeWord val) {
    validity_[vertex] = val;
}

void ClusterForest::cover(size_t e, std::vector<size_t> &touched) {
    covered_[e] = 1;
    for (size_t w : torus_->edge_endpoints(e)) {
        if (--uncovered_[w] == 0) {
            size_t root = find(w);
            --boundary_count_[root];
            touched.push_back(root);
        }
    }
}

void ClusterForest::seed(size_t edge, uint32_t from_first, uint32_t from_second) {
    if (covered_[edge]) {
        return;
    }
    uint32_t &a = counters_[2 * edge];
    uint32_t &b = counters_[2 * edge + 1];
    a += std::min(from_first, units_ - a - b);
    b += std::min(from_second, units_ - a - b);
    if (a + b >= units_) {
        std::vector<size_t> touched;
        cover(edge, touched);
    }
}

void ClusterForest::unite(size_t a, size_t b) {
    size_t ra = find(a);
    size_t rb = find(b);
    if (ra == rb) {
        return;
    }
    if (size_[ra] < size_[rb] || (size_[ra] == size_[rb] && rb < ra)) {
        std::swap(ra, rb);
    }
    parent_[rb] = static_cast<uint32_t>(ra);
    size_[ra] += size_[rb];
    validity_[ra] ^= validity_[rb];
    boundary_count_[ra] += boundary_count_[rb];
    min_vertex_[ra] = std::min(min_vertex_[ra], min_vertex_[rb]);
    auto &dst = boundary_[ra];
    auto &src = boundary_[rb];
    if (dst.size() < src.size()) {
        std::swap(dst, src);
    }
    dst.insert(dst.end(), src.begin(), src.end());
    src.clear();
}

void ClusterForest::merge_covered() {
    for (size_t e = 0; e < covered_.size(); ++e) {
        if (covered_[e]) {
            const auto &ends = torus_->edge_endpoints(e);
            unite(ends[0], ends[1]);
        }
    }
}

std::vector<size_t> ClusterForest::covered_edges() const {
    std::vector<size_t> out;
    for (size_t e = 0; e < covered_.size(); ++e) {
        if (covered_[e]) {
            out.push_back(e);
        }
    }
    return out;
}

void ClusterForest::grow(CodeWord mask) {
    using Key = std::tuple<uint32_t, uint32_t, uint32_t>;  // boundary size, min member, root
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue;
    auto consider = [&](size_t root) {
        if ((validity_[root] & mask) != 0) {
            queue.emplace(boundary_count_[root], min_vertex_[root], static_cast<uint32_t>(root));
        }
    };
    for (size_t v = 0; v < parent_.size(); ++v) {
        if (parent_[v] == v) {
            consider(v);
        }
    }

    std::vector<size_t> newly_covered;
    std::vector<size_t> touched;
    size_t budget = static_cast<size_t>(units_) * covered_.size();
    last_steps_ = 0;
    while (!queue.empty()) {
        auto [count, min_member, root] = queue.top();
        queue.pop();
        if (parent_[root] != root || (validity_[root] & mask) == 0 || boundary_count_[root] != count ||
            min_vertex_[root] != min_member) {
            continue;  // stale entry
        }
        if (++last_steps_ > budget) {
            throw std::logic_error("cluster growth exceeded the total edge budget");
        }

        newly_covered.clear();
        touched.clear();
        bool grew = false;
        auto &members = boundary_[root];
        size_t keep = 0;
        for (size_t i = 0; i < members.size(); ++i) {
            uint32_t u = members[i];
            for (size_t e : torus_->vertex_edges(u)) {
                if (covered_[e]) {
                    continue;
                }
                int side = torus_->edge_endpoints(e)[0] == u ? 0 : 1;
                ++counters_[2 * e + side];
                grew = true;
                if (counters_[2 * e] + counters_[2 * e + 1] >= units_) {
                    cover(e, touched);
                    newly_covered.push_back(e);
                }
            }
            if (uncovered_[u] > 0) {
                members[keep++] = u;
            }
        }
        members.resize(keep);
        if (!grew) {
            throw std::logic_error("invalid cluster has no uncovered edge to grow into");
        }
        for (size_t e : newly_covered) {
            const auto &ends = torus_->edge_endpoints(e);
            unite(ends[0], ends[1]);
        }
        touched.push_back(root);
        for (size_t t : touched) {
            size_t r = find(t);
            consider(r);
        }
    }
}

// ---------------------------------------------------------------------------------------
// Peeling forest

PeelingForest spanning_forest(const Torus &torus, const std::vector<size_t> &edges) {
    std::vector<uint8_t> in_set(torus.num_edges(), 0);
    for (size_t e : edges) {
        in_set[e] = 1;
    }
    PeelingForest forest;
    forest.parent_edge.assign(torus.num_vertices(), 0);
    std::vector<uint8_t> visited(torus.num_vertices(), 0);
    std::vector<size_t> frontier;
    for (size_t start = 0; start < torus.num_vertices(); ++start) {
        if (visited[start]) {
            continue;
        }
        visited[start] = 1;
        frontier.assign(1, start);
        for (size_t head = 0; head < frontier.size(); ++head) {
            size_t u = frontier[head];
            for (size_t e : torus.vertex_edges(u)) {
                if (!in_set[e]) {
                    continue;
                }
                const auto &ends = torus.edge_endpoints(e);
                size_t w = ends[0] == u ? ends[1] : ends[0];
                if (visited[w]) {
                    continue;
                }
                visited[w] = 1;
                forest.parent_edge[w] = e;
                forest.order.push_back(w);
                frontier.push_back(w);
            }
        }
    }
    return forest;
}

// ---------------------------------------------------------------------------------------
// UnionFindDecoder

UnionFindDecoder::UnionFindDecoder(const AugmentedCode &code) : code_(&code), forest_(code.torus()) {
}

EdgeCancellation UnionFindDecoder::edge_cancellation(const SyndromeStdForm &s) const {
    const CssCode &fixed = code_->fixed();
    const Torus &torus = code_->torus();
    EdgeCancellation out{code_->zero_error(), s, {}};
    for (size_t e = 0; e < torus.num_edges(); ++e) {
        CodeWord se = s.edge[e];
        if (se == 0) {
            continue;
        }
        out.erased.push_back(e);
        CodeWord fix = fixed.decode_dx(se);
        out.correction.edge[e] = fix;
        // Boundary of e (x) fix is (u + v) (x) fix + e (x) H_X fix, and H_X fix = s(e).
        const auto &ends = torus.edge_endpoints(e);
        out.syndrome.vertex[ends[0]] ^= fix;
        out.syndrome.vertex[ends[1]] ^= fix;
        out.syndrome.edge[e] = 0;
    }
    return out;
}

std::vector<size_t> UnionFindDecoder::grow(const EdgeCancellation &cancel, const SyndromeStdForm &s, CodeWord mask,
                                           uint32_t units) {
    forest_.reset(units);
    for (size_t e : cancel.erased) {
        uint32_t w = static_cast<uint32_t>(std::popcount(cancel.correction.edge[e]));
        if (2 * w >= units) {
            forest_.seed(e, (units + 1) / 2, units / 2);
        } else {
            forest_.seed(e, w, w);
        }
    }
    for (size_t v = 0; v < s.vertex.size(); ++v) {
        forest_.set_validity(v, vertex_validity(s.vertex[v]));
    }
    forest_.merge_covered();
    forest_.grow(mask);
    return forest_.covered_edges();
}

void UnionFindDecoder::peel(SyndromeStdForm &s, const std::vector<size_t> &covered, ErrorStdForm &correction) const {
    const CssCode &fixed = code_->fixed();
    const Torus &torus = code_->torus();
    PeelingForest forest = spanning_forest(torus, covered);
    for (auto it = forest.order.rbegin(); it != forest.order.rend(); ++it) {
        size_t u = *it;
        CodeWord su = s.vertex[u];
        if (su == 0) {
            continue;
        }
        assert(fixed.x_syndrome(su) == 0);
        size_t e = forest.parent_edge[u];
        const auto &ends = torus.edge_endpoints(e);
        size_t v = ends[0] == u ? ends[1] : ends[0];

        CodeWord fired = vertex_validity(su);
        CodeWord logical_part = 0;
        for (size_t i = 0; i < fixed.k(); ++i) {
            if ((fired >> i) & 1) {
                logical_part ^= fixed.z_logical_word(i);
            }
        }
        // Syndrome transport of the part of s(u) orthogonal to every x_i.
        CodeWord rest = su ^ logical_part;
        correction.edge[e] ^= rest;
        s.vertex[u] ^= rest;
        s.vertex[v] ^= rest;
        // Logical cancellation.
        for (size_t i = 0; i < fixed.k(); ++i) {
            if ((fired >> i) & 1) {
                CodeWord z = fixed.z_logical_word(i);
                correction.edge[e] ^= z;
                s.vertex[u] ^= z;
                s.vertex[v] ^= z;
            }
        }
        assert(s.vertex[u] == 0);
    }
}

void UnionFindDecoder::peel_logical(SyndromeStdForm &s, const std::vector<size_t> &covered, size_t logical,
                                    ErrorStdForm &correction) const {
    const CssCode &fixed = code_->fixed();
    const Torus &torus = code_->torus();
    CodeWord x = fixed.x_logical_word(logical);
    CodeWord z = fixed.z_logical_word(logical);
    PeelingForest forest = spanning_forest(torus, covered);
    for (auto it = forest.order.rbegin(); it != forest.order.rend(); ++it) {
        size_t u = *it;
        if (!parity(s.vertex[u] & x)) {
            continue;
        }
        size_t e = forest.parent_edge[u];
        const auto &ends = torus.edge_endpoints(e);
        size_t v = ends[0] == u ? ends[1] : ends[0];
        correction.edge[e] ^= z;
        s.vertex[u] ^= z;
        s.vertex[v] ^= z;
    }
}

void UnionFindDecoder::peel_transport(SyndromeStdForm &s, const std::vector<size_t> &edges,
                                      ErrorStdForm &correction) const {
    const Torus &torus = code_->torus();
    PeelingForest forest = spanning_forest(torus, edges);
    for (auto it = forest.order.rbegin(); it != forest.order.rend(); ++it) {
        size_t u = *it;
        CodeWord su = s.vertex[u];
        if (su == 0) {
            continue;
        }
        size_t e = forest.parent_edge[u];
        const auto &ends = torus.edge_endpoints(e);
        size_t v = ends[0] == u ? ends[1] : ends[0];
        correction.edge[e] ^= su;
        s.vertex[u] = 0;
        s.vertex[v] ^= su;
    }
}

void UnionFindDecoder::residual_node_correction(SyndromeStdForm &s, ErrorStdForm &correction) const {
    const CssCode &fixed = code_->fixed();
    for (size_t v = 0; v < s.vertex.size(); ++v) {
        if (s.vertex[v] == 0) {
            continue;
        }
        auto y = fixed.decode_dzt(s.vertex[v]);
        if (!y) {
            throw DecoderInconsistency("residual syndrome at vertex " + std::to_string(v) +
                                       " is not a Z-stabilizer of the fixed code");
        }
        correction.vertex[v] ^= *y;
        s.vertex[v] = 0;
    }
}

ErrorStdForm UnionFindDecoder::decode(const SyndromeStdForm &s, DecoderKind kind) {
    switch (kind) {
        case DecoderKind::kV1:
            return decode_v1(s);
        case DecoderKind::kV2:
            return decode_v2(s);
        case DecoderKind::kSubedge:
            return decode_subedge(s, static_cast<uint32_t>(std::max<size_t>(2, code_->fixed().distance())));
    }
    throw std::invalid_argument("unknown decoder kind");
}

ErrorStdForm UnionFindDecoder::decode_v1(const SyndromeStdForm &s) {
    return decode_subedge(s, 2);
}

ErrorStdForm UnionFindDecoder::decode_subedge(const SyndromeStdForm &s, uint32_t units) {
    if (units < 2) {
        throw std::invalid_argument("subedge growth needs at least two units per edge");
    }
    EdgeCancellation cancel = edge_cancellation(s);
    CodeWord all = code_->fixed().k() == 64 ? ~CodeWord{0} : (CodeWord{1} << code_->fixed().k()) - 1;
    std::vector<size_t> covered = grow(cancel, cancel.syndrome, all, units);
    ErrorStdForm correction = std::move(cancel.correction);
    SyndromeStdForm rest = std::move(cancel.syndrome);
    peel(rest, covered, correction);
    residual_node_correction(rest, correction);
    return correction;
}

ErrorStdForm UnionFindDecoder::decode_v2(const SyndromeStdForm &s) {
    EdgeCancellation cancel = edge_cancellation(s);
    ErrorStdForm correction = cancel.correction;
    SyndromeStdForm rest = cancel.syndrome;
    for (size_t i = 0; i < code_->fixed().k(); ++i) {
        std::vector<size_t> covered = grow(cancel, rest, CodeWord{1} << i, 2);
        peel_logical(rest, covered, i, correction);
    }
    peel_transport(rest, cancel.erased, correction);
    residual_node_correction(rest, correction);
    return correction;
}

// ---------------------------------------------------------------------------------------
// General validity

bool general_cluster_validity(const AugmentedCode &code, const Cluster &cluster, const SyndromeStdForm &s) {
    const Torus &torus = code.torus();
    const CssCode &fixed = code.fixed();
    std::vector<uint8_t> has_vertex(torus.num_vertices(), 0);
    std::vector<uint8_t> has_edge(torus.num_edges(), 0);
    for (size_t v : cluster.vertices) {
        has_vertex[v] = 1;
    }
    for (size_t e : cluster.edges) {
        has_edge[e] = 1;
    }
    for (size_t v = 0; v < torus.num_vertices(); ++v) {
        if (!has_vertex[v] && s.vertex[v] != 0) {
            throw std::invalid_argument("syndrome has support on a vertex outside the cluster");
        }
    }
    for (size_t e = 0; e < torus.num_edges(); ++e) {
        if (!has_edge[e] && s.edge[e] != 0) {
            throw std::invalid_argument("syndrome has support on an edge outside the cluster");
        }
    }

    // Boundary of the syndrome, restricted to the cluster's vertices: H_X s(v) plus the
    // edge parts of the incident cluster edges.
    std::vector<CodeWord> boundary(torus.num_vertices(), 0);
    for (size_t v : cluster.vertices) {
        boundary[v] ^= fixed.x_syndrome(s.vertex[v]);
    }
    for (size_t e : cluster.edges) {
        for (size_t v : torus.edge_endpoints(e)) {
            boundary[v] ^= s.edge[e];
        }
    }
    for (size_t v : cluster.vertices) {
        if (boundary[v] != 0) {
            return false;
        }
    }

    // Partial inner products per connected component.
    PeelingForest forest = spanning_forest(torus, cluster.edges);
    std::vector<size_t> component(torus.num_vertices());
    for (size_t v = 0; v < torus.num_vertices(); ++v) {
        component[v] = v;
    }
    for (size_t v : forest.order) {
        const auto &ends = torus.edge_endpoints(forest.parent_edge[v]);
        size_t parent = ends[0] == v ? ends[1] : ends[0];
        component[v] = component[parent];
    }
    std::vector<CodeWord> parity_by_root(torus.num_vertices(), 0);
    for (size_t v : cluster.vertices) {
        parity_by_root[component[v]] ^= fixed.logical_pairing(s.vertex[v]);
    }
    return std::all_of(parity_by_root.begin(), parity_by_root.end(), [](CodeWord w) { return w == 0; });
}

}  // namespace augsurf
