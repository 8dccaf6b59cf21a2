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

#include "augsurf/gf2.h"

#include <algorithm>
#include <stdexcept>

namespace augsurf {

namespace {

size_t words_for(size_t bits) {
    return (bits + 63) / 64;
}

// Reduced row echelon form in place. Returns the pivot column of each of the first
// rank rows. Row operations are mirrored onto `rhs` when it is non-null.
std::vector<size_t> reduce_rows(std::vector<BitVec> &rows, size_t cols, BitVec *rhs) {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 0; c < cols && next < rows.size(); ++c) {
        size_t r = next;
        while (r < rows.size() && !rows[r].get(c)) {
            ++r;
        }
        if (r == rows.size()) {
            continue;
        }
        if (r != next) {
            std::swap(rows[r], rows[next]);
            if (rhs != nullptr) {
                bool a = rhs->get(r);
                rhs->set(r, rhs->get(next));
                rhs->set(next, a);
            }
        }
        for (size_t k = 0; k < rows.size(); ++k) {
            if (k != next && rows[k].get(c)) {
                rows[k] ^= rows[next];
                if (rhs != nullptr && rhs->get(next)) {
                    rhs->flip(k);
                }
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

std::vector<BitVec> copy_rows(const BitMatrix &m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row(r));
    }
    return rows;
}

}  // namespace

BitVec::BitVec(size_t length) : length_(length), words_(words_for(length), 0) {
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string contains a character other than 0/1");
        }
    }
    return v;
}

BitVec BitVec::from_indices(size_t length, std::span<const size_t> indices) {
    BitVec v(length);
    for (size_t i : indices) {
        if (i >= length) {
            throw std::out_of_range("bit index past end of vector");
        }
        v.flip(i);
    }
    return v;
}

void BitVec::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVec::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

size_t BitVec::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::none() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

bool BitVec::dot(const BitVec &other) const {
    if (other.length_ != length_) {
        throw std::invalid_argument("inner product of vectors with different lengths");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); ++k) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::vector<size_t> BitVec::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); ++k) {
        uint64_t w = words_[k];
        while (w != 0) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.length_ != length_) {
        throw std::invalid_argument("xor of vectors with different lengths");
    }
    for (size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    if (other.length_ != length_) {
        throw std::invalid_argument("and of vectors with different lengths");
    }
    for (size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

std::string BitVec::str() const {
    std::string out(length_, '0');
    for (size_t i = 0; i < length_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const std::string> rows) {
    if (rows.empty()) {
        return BitMatrix();
    }
    BitMatrix m(rows.size(), rows.front().size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) {
            throw std::invalid_argument("matrix rows have different lengths");
        }
        m.rows_[r] = BitVec::from_string(rows[r]);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVec> rows, size_t cols) {
    BitMatrix m(0, cols);
    for (const BitVec &row : rows) {
        if (row.size() != cols) {
            throw std::invalid_argument("matrix row has the wrong length");
        }
        m.rows_.push_back(row);
    }
    return m;
}

BitVec BitMatrix::column(size_t c) const {
    BitVec out(rows());
    for (size_t r = 0; r < rows(); ++r) {
        if (get(r, c)) {
            out.set(r);
        }
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(cols_, rows());
    for (size_t r = 0; r < rows(); ++r) {
        for (size_t c : rows_[r].support()) {
            out.set(c, r);
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVec &r) { return r.none(); });
}

BitVec mat_vec(const BitMatrix &m, const BitVec &v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("mat_vec: vector length does not match matrix columns");
    }
    BitVec out(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        if (m.row(r).dot(v)) {
            out.set(r);
        }
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: inner dimensions differ");
    }
    BitMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t k : a.row(r).support()) {
            out.row(r) ^= b.row(k);
        }
    }
    return out;
}

size_t rank(const BitMatrix &m) {
    auto rows = copy_rows(m);
    return reduce_rows(rows, m.cols(), nullptr).size();
}

std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: right-hand side length does not match matrix rows");
    }
    auto rows = copy_rows(m);
    BitVec rhs = b;
    auto pivots = reduce_rows(rows, m.cols(), &rhs);
    for (size_t r = pivots.size(); r < rows.size(); ++r) {
        if (rhs.get(r)) {
            return std::nullopt;
        }
    }
    BitVec x(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (rhs.get(r)) {
            x.set(pivots[r]);
        }
    }
    return x;
}

std::vector<BitVec> kernel_basis(const BitMatrix &m) {
    auto rows = copy_rows(m);
    auto pivots = reduce_rows(rows, m.cols(), nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<BitVec> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec k(m.cols());
        k.set(f);
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (rows[r].get(f)) {
                k.set(pivots[r]);
            }
        }
        basis.push_back(std::move(k));
    }
    return basis;
}

BitVec EchelonBasis::reduce(BitVec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool EchelonBasis::insert(BitVec v) {
    if (v.size() != length_) {
        throw std::invalid_argument("EchelonBasis: vector has the wrong length");
    }
    v = reduce(std::move(v));
    auto bits = v.support();
    if (bits.empty()) {
        return false;
    }
    size_t pivot = bits.front();
    // Keep earlier rows free of the new pivot so reduce() stays a single pass.
    for (auto &row : rows_) {
        if (row.get(pivot)) {
            row ^= v;
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool EchelonBasis::contains(BitVec v) const {
    if (v.size() != length_) {
        throw std::invalid_argument("EchelonBasis: vector has the wrong length");
    }
    return reduce(std::move(v)).none();
}

}  // namespace augsurf
