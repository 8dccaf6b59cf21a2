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

#include "augsurf/oracles.h"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace augsurf {

namespace {

// Depth-first enumeration of index tuples i_1 < ... < i_w in lexicographic order,
// carrying the XOR of fixed-width word columns. Visitor sees (accumulator, tuple) at
// each leaf and returns true to stop.
class ColumnEnumerator {
   public:
    ColumnEnumerator(size_t n, size_t width) : n_(n), width_(width), columns_(n * width, 0) {
    }

    uint64_t *column(size_t i) {
        return &columns_[i * width_];
    }

    template <typename Visitor>
    bool run(size_t w, Visitor &&visit) {
        acc_.assign((w + 1) * width_, 0);
        tuple_.assign(w, 0);
        if (w > n_) {
            return false;
        }
        return descend(0, 0, w, visit);
    }

    const std::vector<size_t> &tuple() const {
        return tuple_;
    }

   private:
    template <typename Visitor>
    bool descend(size_t depth, size_t start, size_t w, Visitor &visit) {
        const uint64_t *acc = &acc_[depth * width_];
        if (depth == w) {
            return visit(acc, tuple_);
        }
        uint64_t *next = &acc_[(depth + 1) * width_];
        for (size_t i = start; i + (w - depth) <= n_; ++i) {
            const uint64_t *col = &columns_[i * width_];
            for (size_t k = 0; k < width_; ++k) {
                next[k] = acc[k] ^ col[k];
            }
            tuple_[depth] = i;
            if (descend(depth + 1, i + 1, w, visit)) {
                return true;
            }
        }
        return false;
    }

    size_t n_;
    size_t width_;
    std::vector<uint64_t> columns_;
    std::vector<uint64_t> acc_;
    std::vector<size_t> tuple_;
};

void check_feasible(size_t n, size_t w_max) {
    uint64_t count = count_candidates(n, w_max);
    if (count > kMaxEnumeration) {
        throw std::invalid_argument("enumeration over " + std::to_string(count) + " candidates exceeds the limit of " +
                                    std::to_string(kMaxEnumeration));
    }
}

ErrorStdForm error_from_tuple(const AugmentedCode &code, const std::vector<size_t> &tuple) {
    BitVec bits(code.n());
    for (size_t q : tuple) {
        bits.set(q);
    }
    return code.error_from_bits(bits);
}

}  // namespace

uint64_t count_candidates(size_t n, size_t w_max) {
    uint64_t total = 0;
    uint64_t term = 1;  // C(n, w)
    for (size_t w = 0; w <= w_max && w <= n; ++w) {
        if (w > 0) {
            // term * (n - w + 1) / w, guarding overflow.
            unsigned __int128 next = static_cast<unsigned __int128>(term) * (n - w + 1) / w;
            if (next > std::numeric_limits<uint64_t>::max()) {
                return std::numeric_limits<uint64_t>::max();
            }
            term = static_cast<uint64_t>(next);
        }
        if (total > std::numeric_limits<uint64_t>::max() - term) {
            return std::numeric_limits<uint64_t>::max();
        }
        total += term;
    }
    return total;
}

DistanceResult brute_force_distance(const AugmentedCode &code, size_t w_max) {
    check_feasible(code.n(), w_max);
    BitMatrix boundary = code.product_complex().boundary(2);
    size_t checks = boundary.rows();
    size_t syndrome_words = (checks + 63) / 64;
    size_t logical_words = (code.k() + 63) / 64;
    ColumnEnumerator en(code.n(), syndrome_words + logical_words);
    for (size_t q = 0; q < code.n(); ++q) {
        uint64_t *col = en.column(q);
        for (size_t r = 0; r < checks; ++r) {
            if (boundary.get(r, q)) {
                col[r / 64] |= uint64_t{1} << (r % 64);
            }
        }
        BitVec single(code.n());
        single.set(q);
        BitVec flips = code.logical_flips(code.error_from_bits(single));
        for (size_t i : flips.support()) {
            col[syndrome_words + i / 64] |= uint64_t{1} << (i % 64);
        }
    }

    DistanceResult result;
    result.w_max = w_max;
    for (size_t w = 1; w <= w_max; ++w) {
        bool hit = en.run(w, [&](const uint64_t *acc, const std::vector<size_t> &) {
            for (size_t k = 0; k < syndrome_words; ++k) {
                if (acc[k] != 0) {
                    return false;
                }
            }
            for (size_t k = 0; k < logical_words; ++k) {
                if (acc[syndrome_words + k] != 0) {
                    return true;
                }
            }
            return false;
        });
        if (hit) {
            result.distance = w;
            result.witness = error_from_tuple(code, en.tuple());
            break;
        }
    }
    return result;
}

std::optional<ErrorStdForm> exact_decode(const AugmentedCode &code, const SyndromeStdForm &s, size_t w_max) {
    check_feasible(code.n(), w_max);
    BitMatrix boundary = code.product_complex().boundary(2);
    size_t checks = boundary.rows();
    size_t width = (checks + 63) / 64;
    ColumnEnumerator en(code.n(), width);
    for (size_t q = 0; q < code.n(); ++q) {
        uint64_t *col = en.column(q);
        for (size_t r = 0; r < checks; ++r) {
            if (boundary.get(r, q)) {
                col[r / 64] |= uint64_t{1} << (r % 64);
            }
        }
    }
    BitVec target_bits = code.syndrome_to_bits(s);
    std::vector<uint64_t> target(target_bits.words().begin(), target_bits.words().end());
    for (size_t w = 0; w <= w_max; ++w) {
        bool hit = en.run(w, [&](const uint64_t *acc, const std::vector<size_t> &) {
            for (size_t k = 0; k < width; ++k) {
                if (acc[k] != target[k]) {
                    return false;
                }
            }
            return true;
        });
        if (hit) {
            return error_from_tuple(code, en.tuple());
        }
    }
    return std::nullopt;
}

ClusterOracle::ClusterOracle(const AugmentedCode &code) : code_(&code) {
    ChainComplex product = code.product_complex();
    boundary2_ = product.boundary(2);
    boundary3_ = product.boundary(3);
}

bool ClusterOracle::is_boundary_on_cluster(const Cluster &cluster, const SyndromeStdForm &s) const {
    const CssCode &fixed = code_->fixed();
    std::vector<size_t> qubits;
    for (size_t v : cluster.vertices) {
        for (size_t a = 0; a < fixed.n_z(); ++a) {
            qubits.push_back(code_->vertex_qubit(v, a));
        }
    }
    for (size_t e : cluster.edges) {
        for (size_t a = 0; a < fixed.n(); ++a) {
            qubits.push_back(code_->edge_qubit(e, a));
        }
    }
    for (size_t f : cluster.faces) {
        for (size_t a = 0; a < fixed.n_x(); ++a) {
            qubits.push_back(code_->face_qubit(f, a));
        }
    }
    BitMatrix restricted(boundary2_.rows(), qubits.size());
    for (size_t r = 0; r < boundary2_.rows(); ++r) {
        for (size_t c = 0; c < qubits.size(); ++c) {
            if (boundary2_.get(r, qubits[c])) {
                restricted.set(r, c);
            }
        }
    }
    return solve(restricted, code_->syndrome_to_bits(s)).has_value();
}

bool ClusterOracle::is_stabilizer(const ErrorStdForm &residual) const {
    return solve(boundary3_, code_->error_to_bits(residual)).has_value();
}

}  // namespace augsurf
