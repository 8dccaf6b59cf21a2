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

#include "augsurf/css_code.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace augsurf {

namespace {

// Visits every weight-w subset of [0, n) as a mask, in lexicographic order of the sorted
// index tuples. Stops early when the visitor returns true; returns whether it did.
template <typename Visitor>
bool for_each_combination(size_t n, size_t w, Visitor &&visit) {
    if (w > n) {
        return false;
    }
    std::vector<size_t> idx(w);
    for (size_t i = 0; i < w; ++i) {
        idx[i] = i;
    }
    while (true) {
        CodeWord mask = 0;
        for (size_t i : idx) {
            mask |= CodeWord{1} << i;
        }
        if (visit(mask)) {
            return true;
        }
        // Advance to the next tuple.
        size_t i = w;
        while (i > 0 && idx[i - 1] == n - w + i - 1) {
            --i;
        }
        if (i == 0) {
            return false;
        }
        ++idx[i - 1];
        for (size_t j = i; j < w; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::vector<CodeWord> row_words(const BitMatrix &m) {
    std::vector<CodeWord> out;
    for (size_t r = 0; r < m.rows(); ++r) {
        out.push_back(to_word(m.row(r)));
    }
    return out;
}

CodeWord apply_rows(const std::vector<CodeWord> &rows, CodeWord v) {
    CodeWord out = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (parity(rows[r] & v)) {
            out |= CodeWord{1} << r;
        }
    }
    return out;
}

// Smallest weight of a vector in ker(checks) outside span(stabilizers).
size_t min_logical_weight(size_t n, const BitMatrix &checks, const BitMatrix &stabilizers) {
    auto check_rows = row_words(checks);
    EchelonBasis span(n);
    for (size_t r = 0; r < stabilizers.rows(); ++r) {
        span.insert(stabilizers.row(r));
    }
    for (size_t w = 1; w <= n; ++w) {
        bool found = for_each_combination(n, w, [&](CodeWord mask) {
            return apply_rows(check_rows, mask) == 0 && !span.contains(from_word(mask, n));
        });
        if (found) {
            return w;
        }
    }
    throw std::logic_error("fixed code has no logical operator");
}

// Trims surrounding whitespace (including a trailing '\r').
std::string_view trim(std::string_view s) {
    size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

}  // namespace

CodeWord to_word(const BitVec &v) {
    if (v.size() > 64) {
        throw std::invalid_argument("vector does not fit in one word");
    }
    return v.size() == 0 ? 0 : v.words()[0];
}

BitVec from_word(CodeWord w, size_t length) {
    BitVec v(length);
    for (size_t i = 0; i < length; ++i) {
        if ((w >> i) & 1) {
            v.set(i);
        }
    }
    return v;
}

std::pair<std::vector<BitVec>, std::vector<BitVec>> compute_logicals(const BitMatrix &hx, const BitMatrix &hz) {
    size_t n = hx.cols();
    // Kernel vectors of one check matrix that are independent modulo the other's rows.
    auto representatives = [n](const BitMatrix &checks, const BitMatrix &stabilizers) {
        EchelonBasis span(n);
        for (size_t r = 0; r < stabilizers.rows(); ++r) {
            span.insert(stabilizers.row(r));
        }
        std::vector<BitVec> reps;
        for (BitVec &v : kernel_basis(checks)) {
            if (span.insert(v)) {
                reps.push_back(std::move(v));
            }
        }
        return reps;
    };
    std::vector<BitVec> xs = representatives(hz, hx);
    std::vector<BitVec> zs = representatives(hx, hz);
    if (xs.size() != zs.size()) {
        throw std::logic_error("X and Z logical counts differ");
    }

    // Symplectic Gram-Schmidt.
    size_t k = xs.size();
    for (size_t i = 0; i < k; ++i) {
        bool paired = false;
        for (size_t a = i; a < k && !paired; ++a) {
            for (size_t b = i; b < k && !paired; ++b) {
                if (xs[a].dot(zs[b])) {
                    std::swap(xs[i], xs[a]);
                    std::swap(zs[i], zs[b]);
                    paired = true;
                }
            }
        }
        if (!paired) {
            throw std::logic_error("logical operators have a degenerate pairing");
        }
        for (size_t a = i + 1; a < k; ++a) {
            if (xs[a].dot(zs[i])) {
                xs[a] ^= xs[i];
            }
        }
        for (size_t b = i + 1; b < k; ++b) {
            if (xs[i].dot(zs[b])) {
                zs[b] ^= zs[i];
            }
        }
    }
    return {std::move(xs), std::move(zs)};
}

CssCode CssCode::build(const BitMatrix &hx, const BitMatrix &hz, std::string name) {
    if (hx.cols() != hz.cols()) {
        throw std::invalid_argument("H_X and H_Z have different column counts");
    }
    size_t n = hx.cols();
    if (n == 0 || n > kMaxQubits) {
        throw std::invalid_argument("fixed code must have between 1 and 64 qubits");
    }
    if (hx.rows() > kMaxChecks || hz.rows() > kMaxChecks) {
        throw std::invalid_argument("fixed code has more than 16 X or Z checks");
    }
    if (!mat_mul(hx, hz.transpose()).is_zero()) {
        throw std::invalid_argument("X and Z checks do not commute (H_X H_Z^T != 0)");
    }
    if (rank(hx) != hx.rows() || rank(hz) != hz.rows()) {
        throw std::invalid_argument("fixed code has redundant checks");
    }
    if (hx.rows() + hz.rows() >= n) {
        throw std::invalid_argument("fixed code encodes no logical qubits");
    }

    CssCode code;
    code.name_ = std::move(name);
    code.n_ = n;
    code.hx_ = hx;
    code.hz_ = hz;
    code.hx_rows_ = row_words(hx);
    code.hz_rows_ = row_words(hz);
    code.compute_logicals();
    code.compute_distance();
    code.build_tables();
    return code;
}

CssCode CssCode::four_two_two() {
    std::vector<std::string> row{"1111"};
    return build(BitMatrix::from_rows(row), BitMatrix::from_rows(row), "422");
}

CssCode CssCode::trivial() {
    return build(BitMatrix(0, 1), BitMatrix(0, 1), "trivial");
}

CssCode CssCode::parse(std::string_view text, std::string name) {
    std::vector<std::vector<std::string>> blocks(1);
    std::istringstream in{std::string(text)};
    std::string raw;
    bool block_open = false;
    while (std::getline(in, raw)) {
        std::string_view line = trim(raw);
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        if (line.empty()) {
            if (block_open && blocks.size() == 1) {
                blocks.emplace_back();
            }
            block_open = false;
            continue;
        }
        block_open = true;
        if (line != "-") {
            blocks.back().emplace_back(line);
        }
    }
    if (blocks.size() < 2) {
        throw std::invalid_argument("fixed code text needs H_X and H_Z blocks separated by a blank line");
    }
    size_t n = 0;
    for (const auto &b : blocks) {
        for (const auto &row : b) {
            n = row.size();
        }
    }
    if (n == 0) {
        throw std::invalid_argument("fixed code text has no rows; cannot infer the qubit count");
    }
    auto to_matrix = [n](const std::vector<std::string> &rows) {
        if (rows.empty()) {
            return BitMatrix(0, n);
        }
        return BitMatrix::from_rows(rows);
    };
    return build(to_matrix(blocks[0]), to_matrix(blocks[1]), std::move(name));
}

CssCode CssCode::load(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open fixed code file " + path);
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse(buf.str(), path);
}

void CssCode::compute_logicals() {
    auto [xs, zs] = augsurf::compute_logicals(hx_, hz_);
    x_logicals_ = std::move(xs);
    z_logicals_ = std::move(zs);
    for (const auto &x : x_logicals_) {
        x_logical_words_.push_back(to_word(x));
    }
    for (const auto &z : z_logicals_) {
        z_logical_words_.push_back(to_word(z));
    }
}

void CssCode::compute_distance() {
    z_distance_ = min_logical_weight(n_, hx_, hz_);
    x_distance_ = min_logical_weight(n_, hz_, hx_);
    distance_ = std::min(x_distance_, z_distance_);
}

void CssCode::build_tables() {
    size_t syndromes = size_t{1} << n_x();
    dx_table_.assign(syndromes, 0);
    std::vector<bool> seen(syndromes, false);
    size_t filled = 0;
    for (size_t w = 0; w <= n_ && filled < syndromes; ++w) {
        for_each_combination(n_, w, [&](CodeWord mask) {
            CodeWord s = apply_rows(hx_rows_, mask);
            if (!seen[s]) {
                seen[s] = true;
                dx_table_[s] = mask;
                ++filled;
            }
            return filled == syndromes;
        });
    }

    for (size_t w = 0; w <= n_z(); ++w) {
        for_each_combination(n_z(), w, [&](CodeWord y) {
            dzt_table_.try_emplace(z_coboundary(y), y);
            return false;
        });
    }
}

ChainComplex CssCode::chain_complex() const {
    return ChainComplex({n_x(), n_, n_z()}, {hx_, hz_.transpose()});
}

CodeWord CssCode::x_syndrome(CodeWord e) const {
    return apply_rows(hx_rows_, e);
}

CodeWord CssCode::z_coboundary(CodeWord y) const {
    CodeWord out = 0;
    for (size_t r = 0; r < hz_rows_.size(); ++r) {
        if ((y >> r) & 1) {
            out ^= hz_rows_[r];
        }
    }
    return out;
}

CodeWord CssCode::logical_pairing(CodeWord s) const {
    CodeWord out = 0;
    for (size_t i = 0; i < x_logical_words_.size(); ++i) {
        if (parity(s & x_logical_words_[i])) {
            out |= CodeWord{1} << i;
        }
    }
    return out;
}

BitVec CssCode::decode_dx(const BitVec &syndrome) const {
    if (syndrome.size() != n_x()) {
        throw std::invalid_argument("D_X input must have one bit per X check");
    }
    return from_word(decode_dx(to_word(syndrome)), n_);
}

std::optional<CodeWord> CssCode::decode_dzt(CodeWord s) const {
    auto it = dzt_table_.find(s);
    if (it == dzt_table_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<BitVec> CssCode::decode_dzt(const BitVec &s) const {
    if (s.size() != n_) {
        throw std::invalid_argument("D_Z^T input must have one bit per qubit");
    }
    auto y = decode_dzt(to_word(s));
    if (!y) {
        return std::nullopt;
    }
    return from_word(*y, n_z());
}

}  // namespace augsurf
