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

#ifndef AUGSURF_CHAIN_COMPLEX_H
#define AUGSURF_CHAIN_COMPLEX_H

#include <cstddef>
#include <vector>

#include "augsurf/gf2.h"

namespace augsurf {

/// A finite Z_2 chain complex C_top -> ... -> C_1 -> C_0.
///
/// Degree convention (used everywhere in this library):
///
///     degree i   space        boundary(i)              shape
///     --------   ---------    ---------------------    ------------------
///     0          C_0          (none, maps to zero)     -
///     1          C_1          C_1 -> C_0               dim(0) x dim(1)
///     i          C_i          C_i -> C_{i-1}           dim(i-1) x dim(i)
///
/// Spaces are stored lowest degree first. Signs are irrelevant over Z_2.
class ChainComplex {
   public:
    ChainComplex() = default;
    /// `boundaries[i - 1]` is the map out of degree i. Shapes are checked against `dims`;
    /// the composition condition is not (see verify()).
    ChainComplex(std::vector<size_t> dims, std::vector<BitMatrix> boundaries);

    /// Highest degree with a space.
    size_t top_degree() const {
        return dims_.size() - 1;
    }
    size_t dim(size_t degree) const;
    const std::vector<size_t> &dims() const {
        return dims_;
    }
    /// Map out of `degree`; a zero matrix with no rows for degree 0.
    BitMatrix boundary(size_t degree) const;

    /// True iff every consecutive composition of boundary maps vanishes.
    bool verify() const;

    /// The cochain complex: every boundary transposed, degrees reversed so it is again a
    /// chain complex with boundary maps lowering the degree.
    ChainComplex dual() const;

   private:
    std::vector<size_t> dims_;
    std::vector<BitMatrix> boundaries_;
};

/// dim ker boundary(i) - rank boundary(i + 1). Throws std::out_of_range for a bad degree.
size_t homology_dim(const ChainComplex &complex, size_t degree);

/// Tensor product with boundary d_B (x) I + I (x) d_C.
///
/// Degree i of the product is the direct sum of blocks B_j (x) C_{i-j} for increasing j;
/// inside a block the basis element (b, c) has index b * dim C_{i-j} + c.
ChainComplex tensor_product(const ChainComplex &b, const ChainComplex &c);

/// Offset of the block B_j (x) C_{degree-j} inside degree `degree` of tensor_product(b, c),
/// or SIZE_MAX when that block is absent.
size_t tensor_block_offset(const ChainComplex &b, const ChainComplex &c, size_t degree, size_t j);

}  // namespace augsurf

#endif
