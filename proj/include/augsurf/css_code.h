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

#ifndef AUGSURF_CSS_CODE_H
#define AUGSURF_CSS_CODE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "augsurf/chain_complex.h"
#include "augsurf/gf2.h"

namespace augsurf {

/// Vector over a fixed code's space packed into one word: bit a is coordinate a.
using CodeWord = uint64_t;

inline bool parity(CodeWord w) {
    return std::popcount(w) & 1;
}

/// Small redundancy-free CSS code used as the fixed factor of the product.
///
/// Its chain complex is C_2 = Z_2^{n_Z} --H_Z^T--> C_1 = Z_2^{n_C} --H_X--> C_0 = Z_2^{n_X}.
/// Commutation is enforced as H_X H_Z^T = 0.
///
/// Size limits: n_C <= 64 so every C_i vector fits a CodeWord, and n_X, n_Z <= 16 so the
/// lookup decoders can be tabulated eagerly.
class CssCode {
   public:
    static constexpr size_t kMaxQubits = 64;
    static constexpr size_t kMaxChecks = 16;

    /// Validates and tabulates. Throws std::invalid_argument when the checks do not
    /// commute, are redundant, exceed the size limits, or encode nothing.
    static CssCode build(const BitMatrix &hx, const BitMatrix &hz, std::string name = "custom");

    /// [[4,2,2]] with checks XXXX and ZZZZ.
    static CssCode four_two_two();
    /// [[1,1,1]] with no checks; the product with it is the plain toric code.
    static CssCode trivial();

    /// Two blocks of 0/1 rows, H_X then H_Z, separated by a blank line. Lines starting with
    /// '#' are ignored; a block with no rows is written as a single "-" line.
    static CssCode parse(std::string_view text, std::string name = "custom");
    /// Reads `path` and parses it. Throws std::runtime_error when the file cannot be read.
    static CssCode load(const std::string &path);

    const std::string &name() const {
        return name_;
    }
    size_t n() const {
        return n_;
    }
    size_t n_x() const {
        return hx_.rows();
    }
    size_t n_z() const {
        return hz_.rows();
    }
    size_t k() const {
        return x_logicals_.size();
    }
    /// min(d_X, d_Z).
    size_t distance() const {
        return distance_;
    }
    size_t z_distance() const {
        return z_distance_;
    }
    size_t x_distance() const {
        return x_distance_;
    }
    const BitMatrix &hx() const {
        return hx_;
    }
    const BitMatrix &hz() const {
        return hz_;
    }
    const std::vector<BitVec> &x_logicals() const {
        return x_logicals_;
    }
    const std::vector<BitVec> &z_logicals() const {
        return z_logicals_;
    }
    ChainComplex chain_complex() const;

    /// H_X e, packed.
    CodeWord x_syndrome(CodeWord e) const;
    /// H_Z^T y, packed.
    CodeWord z_coboundary(CodeWord y) const;
    /// Bit i set iff (s | x_i) = 1.
    CodeWord logical_pairing(CodeWord s) const;
    CodeWord x_logical_word(size_t i) const {
        return x_logical_words_[i];
    }
    CodeWord z_logical_word(size_t i) const {
        return z_logical_words_[i];
    }

    /// Minimum-weight e with H_X e = s. Ties go to the support that comes first in
    /// lexicographic order of sorted index tuples (so 1000 beats 0100).
    CodeWord decode_dx(CodeWord syndrome) const {
        return dx_table_[syndrome];
    }
    BitVec decode_dx(const BitVec &syndrome) const;
    /// Minimum-weight y with H_Z^T y = s, or nullopt when s is not in the image.
    std::optional<CodeWord> decode_dzt(CodeWord s) const;
    std::optional<BitVec> decode_dzt(const BitVec &s) const;

   private:
    CssCode() = default;
    void compute_logicals();
    void compute_distance();
    void build_tables();

    std::string name_;
    size_t n_ = 0;
    BitMatrix hx_;
    BitMatrix hz_;
    std::vector<CodeWord> hx_rows_;
    std::vector<CodeWord> hz_rows_;
    std::vector<BitVec> x_logicals_;
    std::vector<BitVec> z_logicals_;
    std::vector<CodeWord> x_logical_words_;
    std::vector<CodeWord> z_logical_words_;
    size_t distance_ = 0;
    size_t x_distance_ = 0;
    size_t z_distance_ = 0;
    std::vector<CodeWord> dx_table_;
    std::unordered_map<CodeWord, CodeWord> dzt_table_;
};

/// Pairs (x_i | z_j) = delta_ij computed from the check matrices alone. Deterministic:
/// candidates come from kernel_basis() in order and are paired by symplectic
/// Gram-Schmidt.
std::pair<std::vector<BitVec>, std::vector<BitVec>> compute_logicals(const BitMatrix &hx, const BitMatrix &hz);

CodeWord to_word(const BitVec &v);
BitVec from_word(CodeWord w, size_t length);

}  // namespace augsurf

#endif
