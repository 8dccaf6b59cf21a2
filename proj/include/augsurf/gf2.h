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

#ifndef AUGSURF_GF2_H
#define AUGSURF_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace augsurf {

/// Dense bit-packed vector over Z_2. Bit i lives in word i / 64 at position i % 64.
/// Bits at positions >= size() are always zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t length);

    /// Parses a string of '0'/'1' characters; index 0 is the leftmost character.
    static BitVec from_string(std::string_view bits);
    static BitVec from_indices(size_t length, std::span<const size_t> indices);

    size_t size() const {
        return length_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value = true);
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    void clear();

    size_t weight() const;
    bool none() const;
    bool any() const {
        return !none();
    }
    /// Parity of the overlap with `other` (the Z_2 inner product).
    bool dot(const BitVec &other) const;
    /// Indices of set bits in increasing order.
    std::vector<size_t> support() const;

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        return a ^= b;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        return a &= b;
    }
    bool operator==(const BitVec &other) const = default;

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    std::string str() const;

   private:
    size_t length_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major matrix over Z_2.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// Rows given as '0'/'1' strings, all of equal length.
    static BitMatrix from_rows(std::span<const std::string> rows);
    static BitMatrix from_rows(std::span<const BitVec> rows, size_t cols);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value = true) {
        rows_[r].set(c, value);
    }
    void flip(size_t r, size_t c) {
        rows_[r].flip(c);
    }
    const BitVec &row(size_t r) const {
        return rows_[r];
    }
    BitVec &row(size_t r) {
        return rows_[r];
    }
    BitVec column(size_t c) const;

    BitMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// M v over Z_2. Throws std::invalid_argument on a dimension mismatch.
BitVec mat_vec(const BitMatrix &m, const BitVec &v);
/// A B over Z_2. Throws std::invalid_argument on a dimension mismatch.
BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);

size_t rank(const BitMatrix &m);

/// Some x with M x = b, or nullopt when b is outside the column space.
/// Elimination uses the leftmost pivot column and the topmost available row, so the
/// returned solution is a fixed function of (M, b): free variables are set to zero.
std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b);

/// Basis of {x : M x = 0}, one vector per free column in increasing column order.
std::vector<BitVec> kernel_basis(const BitMatrix &m);

/// Incremental row-echelon basis; answers span-membership queries.
class EchelonBasis {
   public:
    explicit EchelonBasis(size_t length) : length_(length) {
    }

    /// Inserts v. Returns false if v was already in the span.
    bool insert(BitVec v);
    bool contains(BitVec v) const;
    size_t dimension() const {
        return rows_.size();
    }

   private:
    BitVec reduce(BitVec v) const;

    size_t length_;
    std::vector<BitVec> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace augsurf

#endif
