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

#include "augsurf/torus.h"

#include <algorithm>
#include <stdexcept>

namespace augsurf {

Torus::Torus(size_t m) : m_(m) {
    if (m < 2) {
        throw std::invalid_argument("torus side must be at least 2");
    }
    endpoints_.resize(num_edges());
    edge_faces_.resize(num_edges());
    vertex_edges_.resize(num_vertices());
    face_edges_.resize(num_faces());
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < m; ++c) {
            size_t h = horizontal_edge(r, c);
            size_t v = vertical_edge(r, c);
            endpoints_[h] = {vertex(r, c), vertex(r, c + 1)};
            endpoints_[v] = {vertex(r, c), vertex(r + 1, c)};
            edge_faces_[h] = {face(r + m - 1, c), face(r, c)};
            edge_faces_[v] = {face(r, c + m - 1), face(r, c)};
            face_edges_[face(r, c)] = {h, horizontal_edge(r + 1, c), v, vertical_edge(r, c + 1)};
            std::array<size_t, 4> inc{h, horizontal_edge(r, c + m - 1), v, vertical_edge(r + m - 1, c)};
            std::sort(inc.begin(), inc.end());
            vertex_edges_[vertex(r, c)] = inc;
        }
    }
}

ChainComplex Torus::chain_complex() const {
    BitMatrix d1(num_vertices(), num_edges());
    for (size_t e = 0; e < num_edges(); ++e) {
        for (size_t v : endpoints_[e]) {
            d1.flip(v, e);
        }
    }
    BitMatrix d2(num_edges(), num_faces());
    for (size_t f = 0; f < num_faces(); ++f) {
        for (size_t e : face_edges_[f]) {
            d2.flip(e, f);
        }
    }
    return ChainComplex({num_vertices(), num_edges(), num_faces()}, {d1, d2});
}

std::array<BitVec, 2> Torus::homology_reps() const {
    std::array<BitVec, 2> reps{BitVec(num_edges()), BitVec(num_edges())};
    for (size_t i = 0; i < m_; ++i) {
        reps[0].set(horizontal_edge(0, i));
        reps[1].set(vertical_edge(i, 0));
    }
    return reps;
}

std::array<BitVec, 2> Torus::cohomology_reps() const {
    auto cuts1 = disjoint_cocycle_reps(1);
    auto cuts2 = disjoint_cocycle_reps(2);
    return {cuts1.front(), cuts2.front()};
}

std::vector<BitVec> Torus::disjoint_cocycle_reps(int class_index) const {
    if (class_index != 1 && class_index != 2) {
        throw std::invalid_argument("cohomology class index must be 1 or 2");
    }
    std::vector<BitVec> reps(m_, BitVec(num_edges()));
    for (size_t k = 0; k < m_; ++k) {
        for (size_t i = 0; i < m_; ++i) {
            reps[k].set(class_index == 1 ? horizontal_edge(i, k) : vertical_edge(k, i));
        }
    }
    return reps;
}

}  // namespace augsurf
