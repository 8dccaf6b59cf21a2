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

#ifndef AUGSURF_TORUS_H
#define AUGSURF_TORUS_H

#include <array>
#include <cstddef>
#include <vector>

#include "augsurf/chain_complex.h"
#include "augsurf/gf2.h"

namespace augsurf {

/// Square-lattice cellulation of an m x m torus.
///
/// Index layout:
///   vertex (r, c)           -> r * m + c
///   horizontal edge (r, c)  -> r * m + c          joins (r, c) and (r, c + 1)
///   vertical edge (r, c)    -> m^2 + r * m + c    joins (r, c) and (r + 1, c)
///   face (r, c)             -> r * m + c          lower-left corner (r, c)
/// All coordinates are taken mod m.
class Torus {
   public:
    /// Throws std::invalid_argument for m < 2.
    explicit Torus(size_t m);

    size_t m() const {
        return m_;
    }
    size_t num_vertices() const {
        return m_ * m_;
    }
    size_t num_edges() const {
        return 2 * m_ * m_;
    }
    size_t num_faces() const {
        return m_ * m_;
    }

    size_t vertex(size_t r, size_t c) const {
        return (r % m_) * m_ + (c % m_);
    }
    size_t horizontal_edge(size_t r, size_t c) const {
        return vertex(r, c);
    }
    size_t vertical_edge(size_t r, size_t c) const {
        return m_ * m_ + vertex(r, c);
    }
    size_t face(size_t r, size_t c) const {
        return vertex(r, c);
    }

    const std::array<size_t, 2> &edge_endpoints(size_t e) const {
        return endpoints_[e];
    }
    /// The four incident edges in increasing edge index.
    const std::array<size_t, 4> &vertex_edges(size_t v) const {
        return vertex_edges_[v];
    }
    /// Bottom, top, left, right.
    const std::array<size_t, 4> &face_edges(size_t f) const {
        return face_edges_[f];
    }
    const std::array<size_t, 2> &edge_faces(size_t e) const {
        return edge_faces_[e];
    }

    /// B_2 = Z_2^F -> B_1 = Z_2^E -> B_0 = Z_2^V.
    ChainComplex chain_complex() const;

    /// Two cycles (logical Z strings of the toric code): the horizontal line r = 0 and the
    /// vertical line c = 0.
    std::array<BitVec, 2> homology_reps() const;
    /// Two cocycles (logical X strings), ordered so that pairing against homology_reps()
    /// is the identity: the cut through horizontal edges at c = 0 and the cut through
    /// vertical edges at r = 0.
    std::array<BitVec, 2> cohomology_reps() const;
    /// m pairwise-disjoint cocycles in the class of cohomology_reps()[class_index - 1]:
    /// the parallel cuts at every c (class 1) or every r (class 2).
    std::vector<BitVec> disjoint_cocycle_reps(int class_index) const;

   private:
    size_t m_;
    std::vector<std::array<size_t, 2>> endpoints_;
    std::vector<std::array<size_t, 4>> vertex_edges_;
    std::vector<std::array<size_t, 4>> face_edges_;
    std::vector<std::array<size_t, 2>> edge_faces_;
};

}  // namespace augsurf

#endif
