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

#ifndef AUGSURF_AUGMENTED_CODE_H
#define AUGSURF_AUGMENTED_CODE_H

#include <array>
#include <cstddef>
#include <vector>

#include "augsurf/chain_complex.h"
#include "augsurf/css_code.h"
#include "augsurf/gf2.h"
#include "augsurf/torus.h"

namespace augsurf {

/// A Z error (2-chain of the product complex) in standard form: one fixed-code vector per
/// cell of the torus. vertex[v] lives in C_2, edge[e] in C_1, face[f] in C_0.
struct ErrorStdForm {
    std::vector<CodeWord> vertex;
    std::vector<CodeWord> edge;
    std::vector<CodeWord> face;

    bool is_zero() const;
    size_t weight() const;
    ErrorStdForm &operator^=(const ErrorStdForm &other);
    bool operator==(const ErrorStdForm &other) const = default;
};

/// A syndrome (1-chain of the product complex) in standard form: vertex[v] lives in C_1,
/// edge[e] in C_0.
struct SyndromeStdForm {
    std::vector<CodeWord> vertex;
    std::vector<CodeWord> edge;

    bool is_zero() const;
    SyndromeStdForm &operator^=(const SyndromeStdForm &other);
    bool operator==(const SyndromeStdForm &other) const = default;
};

/// Homological product of the m x m toric code with a fixed CSS code, with the large code's
/// qubits on edges (q = 1).
///
/// Qubits (degree 2 of the product), in this order:
///   vertex qubits  (v, a), a < n_Z    index v * n_Z + a
///   edge qubits    (e, a), a < n_C    index |V| n_Z + e * n_C + a
///   face qubits    (f, a), a < n_X    index |V| n_Z + |E| n_C + f * n_X + a
/// X checks (degree 1):
///   vertex checks  (v, a), a < n_C    index v * n_C + a
///   edge checks    (e, b), b < n_X    index |V| n_C + e * n_X + b
/// This matches the block order of tensor_product(torus, fixed).
class AugmentedCode {
   public:
    AugmentedCode(size_t m, CssCode fixed);

    const Torus &torus() const {
        return torus_;
    }
    const CssCode &fixed() const {
        return fixed_;
    }
    size_t m() const {
        return torus_.m();
    }
    size_t n() const;
    /// 2 k_C.
    size_t k() const {
        return 2 * fixed_.k();
    }
    /// Product of the distances, m * d_C. Exact for tori; verified by enumeration where
    /// that is feasible.
    size_t distance() const {
        return torus_.m() * fixed_.distance();
    }
    size_t num_x_checks() const;

    size_t vertex_qubit(size_t v, size_t a) const {
        return v * fixed_.n_z() + a;
    }
    size_t edge_qubit(size_t e, size_t a) const {
        return torus_.num_vertices() * fixed_.n_z() + e * fixed_.n() + a;
    }
    size_t face_qubit(size_t f, size_t a) const {
        return torus_.num_vertices() * fixed_.n_z() + torus_.num_edges() * fixed_.n() + f * fixed_.n_x() + a;
    }
    size_t vertex_check(size_t v, size_t a) const {
        return v * fixed_.n() + a;
    }
    size_t edge_check(size_t e, size_t b) const {
        return torus_.num_vertices() * fixed_.n() + e * fixed_.n_x() + b;
    }

    ErrorStdForm zero_error() const;
    SyndromeStdForm zero_syndrome() const;

    BitVec error_to_bits(const ErrorStdForm &err) const;
    ErrorStdForm error_from_bits(const BitVec &bits) const;
    BitVec syndrome_to_bits(const SyndromeStdForm &s) const;
    SyndromeStdForm syndrome_from_bits(const BitVec &bits) const;

    /// Boundary of the error, accumulated cell by cell:
    ///   s(v) = H_Z^T x(v) + sum over edges e at v of x(e)
    ///   s(e) = H_X x(e)   + sum over faces f containing e of x(f)
    SyndromeStdForm syndrome(const ErrorStdForm &err) const;

    /// Dense product complex. Memory grows as n^2; intended for small m.
    ChainComplex product_complex() const;

    /// One generator per X check (rows of the degree-2 boundary): n_C per vertex, then
    /// n_X per edge.
    std::vector<BitVec> x_stabilizers() const;
    /// One generator per 3-cell (columns of the degree-3 boundary): n_Z per edge, then
    /// n_C per face.
    std::vector<BitVec> z_stabilizers() const;

    /// cohomology_reps()[c] (x) x_j for c in {0, 1}, j < k_C, in that order. Edge qubits only.
    std::vector<ErrorStdForm> logical_x_reps() const;
    /// homology_reps()[c] (x) z_j, in the same order as logical_x_reps(); the pairing
    /// matrix between the two lists is the identity.
    std::vector<ErrorStdForm> logical_z_reps() const;

    /// Bit i set iff the residual anticommutes with logical_x_reps()[i].
    BitVec logical_flips(const ErrorStdForm &residual) const;
    /// True iff the residual is a nontrivial logical operator. Throws std::invalid_argument
    /// if its syndrome is nonzero.
    bool is_logical_failure(const ErrorStdForm &residual) const;
    /// logical_flips(residual).any() without the syndrome check; the caller guarantees a
    /// zero-syndrome residual.
    bool flips_logical(const ErrorStdForm &residual) const;

   private:
    Torus torus_;
    CssCode fixed_;
    std::array<std::vector<size_t>, 2> cut_edges_;
};

}  // namespace augsurf

#endif
