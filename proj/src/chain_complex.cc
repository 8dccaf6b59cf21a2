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

#include "augsurf/chain_complex.h"

#include <limits>
#include <stdexcept>
#include <string>

namespace augsurf {

ChainComplex::ChainComplex(std::vector<size_t> dims, std::vector<BitMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty()) {
        throw std::invalid_argument("chain complex needs at least one space");
    }
    if (boundaries_.size() != dims_.size() - 1) {
        throw std::invalid_argument("chain complex needs one boundary map per positive degree");
    }
    for (size_t i = 1; i < dims_.size(); ++i) {
        const BitMatrix &d = boundaries_[i - 1];
        if (d.cols() != dims_[i] || d.rows() != dims_[i - 1]) {
            throw std::invalid_argument("boundary map of degree " + std::to_string(i) + " has the wrong shape");
        }
    }
}

size_t ChainComplex::dim(size_t degree) const {
    if (degree >= dims_.size()) {
        throw std::out_of_range("chain complex degree out of range");
    }
    return dims_[degree];
}

BitMatrix ChainComplex::boundary(size_t degree) const {
    if (degree >= dims_.size()) {
        throw std::out_of_range("chain complex degree out of range");
    }
    if (degree == 0) {
        return BitMatrix(0, dims_[0]);
    }
    return boundaries_[degree - 1];
}

bool ChainComplex::verify() const {
    for (size_t i = 2; i < dims_.size(); ++i) {
        if (!mat_mul(boundaries_[i - 2], boundaries_[i - 1]).is_zero()) {
            return false;
        }
    }
    return true;
}

ChainComplex ChainComplex::dual() const {
    std::vector<size_t> dims(dims_.rbegin(), dims_.rend());
    std::vector<BitMatrix> maps;
    // Dual degree k is original degree top - k; its boundary is the transpose of the
    // original map into that degree.
    size_t top = top_degree();
    for (size_t k = 1; k <= top; ++k) {
        maps.push_back(boundaries_[top - k].transpose());
    }
    return ChainComplex(std::move(dims), std::move(maps));
}

size_t homology_dim(const ChainComplex &complex, size_t degree) {
    if (degree > complex.top_degree()) {
        throw std::out_of_range("homology degree out of range");
    }
    size_t cycles = complex.dim(degree) - rank(complex.boundary(degree));
    size_t boundaries = degree < complex.top_degree() ? rank(complex.boundary(degree + 1)) : 0;
    return cycles - boundaries;
}

size_t tensor_block_offset(const ChainComplex &b, const ChainComplex &c, size_t degree, size_t j) {
    if (j > degree || j > b.top_degree() || degree - j > c.top_degree()) {
        return std::numeric_limits<size_t>::max();
    }
    size_t offset = 0;
    for (size_t jj = 0; jj < j; ++jj) {
        if (jj <= b.top_degree() && degree - jj <= c.top_degree()) {
            offset += b.dim(jj) * c.dim(degree - jj);
        }
    }
    return offset;
}

ChainComplex tensor_product(const ChainComplex &b, const ChainComplex &c) {
    size_t top = b.top_degree() + c.top_degree();
    std::vector<size_t> dims(top + 1, 0);
    for (size_t i = 0; i <= top; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            if (j <= b.top_degree() && i - j <= c.top_degree()) {
                dims[i] += b.dim(j) * c.dim(i - j);
            }
        }
    }

    std::vector<BitMatrix> maps;
    for (size_t i = 1; i <= top; ++i) {
        BitMatrix d(dims[i - 1], dims[i]);
        for (size_t j = 0; j <= i; ++j) {
            size_t src = tensor_block_offset(b, c, i, j);
            if (src == std::numeric_limits<size_t>::max()) {
                continue;
            }
            size_t cdim = c.dim(i - j);
            // d_B (x) I : B_j (x) C_{i-j} -> B_{j-1} (x) C_{i-j}
            if (j >= 1) {
                size_t dst = tensor_block_offset(b, c, i - 1, j - 1);
                BitMatrix db = b.boundary(j);
                for (size_t row = 0; row < db.rows(); ++row) {
                    for (size_t col : db.row(row).support()) {
                        for (size_t k = 0; k < cdim; ++k) {
                            d.flip(dst + row * cdim + k, src + col * cdim + k);
                        }
                    }
                }
            }
            // I (x) d_C : B_j (x) C_{i-j} -> B_j (x) C_{i-j-1}
            if (i - j >= 1) {
                size_t dst = tensor_block_offset(b, c, i - 1, j);
                BitMatrix dc = c.boundary(i - j);
                size_t cdim_low = c.dim(i - j - 1);
                for (size_t bb = 0; bb < b.dim(j); ++bb) {
                    for (size_t row = 0; row < dc.rows(); ++row) {
                        for (size_t col : dc.row(row).support()) {
                            d.flip(dst + bb * cdim_low + row, src + bb * cdim + col);
                        }
                    }
                }
            }
        }
        maps.push_back(std::move(d));
    }
    return ChainComplex(std::move(dims), std::move(maps));
}

}  // namespace augsurf
