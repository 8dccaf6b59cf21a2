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

#include "augsurf/augmented_code.h"

#include <algorithm>
#include <stdexcept>

namespace augsurf {

namespace {

bool all_zero(const std::vector<CodeWord> &words) {
    return std::all_of(words.begin(), words.end(), [](CodeWord w) { return w == 0; });
}

void xor_into(std::vector<CodeWord> &dst, const std::vector<CodeWord> &src) {
    if (dst.size() != src.size()) {
        throw std::invalid_argument("standard forms belong to different codes");
    }
    for (size_t i = 0; i < dst.size(); ++i) {
        dst[i] ^= src[i];
    }
}

size_t total_weight(const std::vector<CodeWord> &words) {
    size_t w = 0;
    for (CodeWord x : words) {
        w += std::popcount(x);
    }
    return w;
}

}  // namespace

bool ErrorStdForm::is_zero() const {
    return all_zero(vertex) && all_zero(edge) && all_zero(face);
}

size_t ErrorStdForm::weight() const {
    return total_weight(vertex) + total_weight(edge) + total_weight(face);
}

ErrorStdForm &ErrorStdForm::operator^=(const ErrorStdForm &other) {
    xor_into(vertex, other.vertex);
    xor_into(edge, other.edge);
    xor_into(face, other.face);
    return *this;
}

bool SyndromeStdForm::is_zero() const {
    return all_zero(vertex) && all_zero(edge);
}

SyndromeStdForm &SyndromeStdForm::operator^=(const SyndromeStdForm &other) {
    xor_into(vertex, other.vertex);
    xor_into(edge, other.edge);
    return *this;
}

AugmentedCode::AugmentedCode(size_t m, CssCode fixed) : torus_(m), fixed_(std::move(fixed)) {
    auto cuts = torus_.cohomology_reps();
    for (size_t c = 0; c < cuts.size(); ++c) {
        cut_edges_[c] = cuts[c].support();
    }
}

size_t AugmentedCode::n() const {
    return torus_.num_vertices() * fixed_.n_z() + torus_.num_edges() * fixed_.n() +
           torus_.num_faces() * fixed_.n_x();
}

size_t AugmentedCode::num_x_checks() const {
    return torus_.num_vertices() * fixed_.n() + torus_.num_edges() * fixed_.n_x();
}

ErrorStdForm AugmentedCode::zero_error() const {
    return ErrorStdForm{
        std::vector<CodeWord>(torus_.num_vertices(), 0),
        std::vector<CodeWord>(torus_.num_edges(), 0),
        std::vector<CodeWord>(torus_.num_faces(), 0),
    };
}

SyndromeStdForm AugmentedCode::zero_syndrome() const {
    return SyndromeStdForm{
        std::vector<CodeWord>(torus_.num_vertices(), 0),
        std::vector<CodeWord>(torus_.num_edges(), 0),
    };
}

BitVec AugmentedCode::error_to_bits(const ErrorStdForm &err) const {
    BitVec out(n());
    for (size_t v = 0; v < err.vertex.size(); ++v) {
        for (size_t a = 0; a < fixed_.n_z(); ++a) {
            if ((err.vertex[v] >> a) & 1) {
                out.set(vertex_qubit(v, a));
            }
        }
    }
    for (size_t e = 0; e < err.edge.size(); ++e) {
        for (size_t a = 0; a < fixed_.n(); ++a) {
            if ((err.edge[e] >> a) & 1) {
                out.set(edge_qubit(e, a));
            }
        }
    }
    for (size_t f = 0; f < err.face.size(); ++f) {
        for (size_t a = 0; a < fixed_.n_x(); ++a) {
            if ((err.face[f] >> a) & 1) {
                out.set(face_qubit(f, a));
            }
        }
    }
    return out;
}

ErrorStdForm AugmentedCode::error_from_bits(const BitVec &bits) const {
    if (bits.size() != n()) {
        throw std::invalid_argument("error vector length does not match the qubit count");
    }
    ErrorStdForm err = zero_error();
    for (size_t v = 0; v < err.vertex.size(); ++v) {
        for (size_t a = 0; a < fixed_.n_z(); ++a) {
            err.vertex[v] |= CodeWord{bits.get(vertex_qubit(v, a))} << a;
        }
    }
    for (size_t e = 0; e < err.edge.size(); ++e) {
        for (size_t a = 0; a < fixed_.n(); ++a) {
            err.edge[e] |= CodeWord{bits.get(edge_qubit(e, a))} << a;
        }
    }
    for (size_t f = 0; f < err.face.size(); ++f) {
        for (size_t a = 0; a < fixed_.n_x(); ++a) {
            err.face[f] |= CodeWord{bits.get(face_qubit(f, a))} << a;
        }
    }
    return err;
}

BitVec AugmentedCode::syndrome_to_bits(const SyndromeStdForm &s) const {
    BitVec out(num_x_checks());
    for (size_t v = 0; v < s.vertex.size(); ++v) {
        for (size_t a = 0; a < fixed_.n(); ++a) {
            if ((s.vertex[v] >> a) & 1) {
                out.set(vertex_check(v, a));
            }
        }
    }
    for (size_t e = 0; e < s.edge.size(); ++e) {
        for (size_t b = 0; b < fixed_.n_x(); ++b) {
            if ((s.edge[e] >> b) & 1) {
                out.set(edge_check(e, b));
            }
        }
    }
    return out;
}

SyndromeStdForm AugmentedCode::syndrome_from_bits(const BitVec &bits) const {
    if (bits.size() != num_x_checks()) {
        throw std::invalid_argument("syndrome vector length does not match the check count");
    }
    SyndromeStdForm s = zero_syndrome();
    for (size_t v = 0; v < s.vertex.size(); ++v) {
        for (size_t a = 0; a < fixed_.n(); ++a) {
            s.vertex[v] |= CodeWord{bits.get(vertex_check(v, a))} << a;
        }
    }
    for (size_t e = 0; e < s.edge.size(); ++e) {
        for (size_t b = 0; b < fixed_.n_x(); ++b) {
            s.edge[e] |= CodeWord{bits.get(edge_check(e, b))} << b;
        }
    }
    return s;
}

SyndromeStdForm AugmentedCode::syndrome(const ErrorStdForm &err) const {
    SyndromeStdForm s = zero_syndrome();
    for (size_t v = 0; v < err.vertex.size(); ++v) {
        if (err.vertex[v] != 0) {
            s.vertex[v] ^= fixed_.z_coboundary(err.vertex[v]);
        }
    }
    for (size_t e = 0; e < err.edge.size(); ++e) {
        CodeWord x = err.edge[e];
        if (x == 0) {
            continue;
        }
        const auto &ends = torus_.edge_endpoints(e);
        s.vertex[ends[0]] ^= x;
        s.vertex[ends[1]] ^= x;
        s.edge[e] ^= fixed_.x_syndrome(x);
    }
    for (size_t f = 0; f < err.face.size(); ++f) {
        CodeWord x = err.face[f];
        if (x == 0) {
            continue;
        }
        for (size_t e : torus_.face_edges(f)) {
            s.edge[e] ^= x;
        }
    }
    return s;
}

ChainComplex AugmentedCode::product_complex() const {
    return tensor_product(torus_.chain_complex(), fixed_.chain_complex());
}

std::vector<BitVec> AugmentedCode::x_stabilizers() const {
    std::vector<BitVec> gens;
    size_t nc = fixed_.n();
    for (size_t v = 0; v < torus_.num_vertices(); ++v) {
        for (size_t a = 0; a < nc; ++a) {
            // (prod over edges at v of X_e^a) times X on the vertex qubits (v, b) with
            // H_Z[b][a] = 1.
            BitVec g(n());
            for (size_t e : torus_.vertex_edges(v)) {
                g.flip(edge_qubit(e, a));
            }
            for (size_t b = 0; b < fixed_.n_z(); ++b) {
                if (fixed_.hz().get(b, a)) {
                    g.flip(vertex_qubit(v, b));
                }
            }
            gens.push_back(std::move(g));
        }
    }
    for (size_t e = 0; e < torus_.num_edges(); ++e) {
        for (size_t b = 0; b < fixed_.n_x(); ++b) {
            BitVec g(n());
            for (size_t a = 0; a < nc; ++a) {
                if (fixed_.hx().get(b, a)) {
                    g.flip(edge_qubit(e, a));
                }
            }
            for (size_t f : torus_.edge_faces(e)) {
                g.flip(face_qubit(f, b));
            }
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

std::vector<BitVec> AugmentedCode::z_stabilizers() const {
    std::vector<BitVec> gens;
    size_t nc = fixed_.n();
    for (size_t e = 0; e < torus_.num_edges(); ++e) {
        for (size_t b = 0; b < fixed_.n_z(); ++b) {
            BitVec g(n());
            for (size_t v : torus_.edge_endpoints(e)) {
                g.flip(vertex_qubit(v, b));
            }
            for (size_t a = 0; a < nc; ++a) {
                if (fixed_.hz().get(b, a)) {
                    g.flip(edge_qubit(e, a));
                }
            }
            gens.push_back(std::move(g));
        }
    }
    for (size_t f = 0; f < torus_.num_faces(); ++f) {
        for (size_t a = 0; a < nc; ++a) {
            BitVec g(n());
            for (size_t e : torus_.face_edges(f)) {
                g.flip(edge_qubit(e, a));
            }
            for (size_t b = 0; b < fixed_.n_x(); ++b) {
                if (fixed_.hx().get(b, a)) {
                    g.flip(face_qubit(f, b));
                }
            }
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

std::vector<ErrorStdForm> AugmentedCode::logical_x_reps() const {
    std::vector<ErrorStdForm> reps;
    for (const BitVec &cut : torus_.cohomology_reps()) {
        for (size_t j = 0; j < fixed_.k(); ++j) {
            ErrorStdForm r = zero_error();
            for (size_t e : cut.support()) {
                r.edge[e] = fixed_.x_logical_word(j);
            }
            reps.push_back(std::move(r));
        }
    }
    return reps;
}

std::vector<ErrorStdForm> AugmentedCode::logical_z_reps() const {
    std::vector<ErrorStdForm> reps;
    for (const BitVec &loop : torus_.homology_reps()) {
        for (size_t j = 0; j < fixed_.k(); ++j) {
            ErrorStdForm r = zero_error();
            for (size_t e : loop.support()) {
                r.edge[e] = fixed_.z_logical_word(j);
            }
            reps.push_back(std::move(r));
        }
    }
    return reps;
}

BitVec AugmentedCode::logical_flips(const ErrorStdForm &residual) const {
    BitVec flips(k());
    size_t kc = fixed_.k();
    for (size_t c = 0; c < cut_edges_.size(); ++c) {
        CodeWord acc = 0;
        for (size_t e : cut_edges_[c]) {
            acc ^= residual.edge[e];
        }
        CodeWord pairing = fixed_.logical_pairing(acc);
        for (size_t j = 0; j < kc; ++j) {
            if ((pairing >> j) & 1) {
                flips.set(c * kc + j);
            }
        }
    }
    return flips;
}

bool AugmentedCode::is_logical_failure(const ErrorStdForm &residual) const {
    if (!syndrome(residual).is_zero()) {
        throw std::invalid_argument("residual error has a nonzero syndrome");
    }
    return logical_flips(residual).any();
}

bool AugmentedCode::flips_logical(const ErrorStdForm &residual) const {
    for (const auto &cut : cut_edges_) {
        CodeWord acc = 0;
        for (size_t e : cut) {
            acc ^= residual.edge[e];
        }
        if (fixed_.logical_pairing(acc) != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace augsurf
