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

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"

using namespace augsurf;

namespace {

BitMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            m.set(r, c, bit(rng));
        }
    }
    return m;
}

BitVec random_vec(std::mt19937_64 &rng, size_t n) {
    std::bernoulli_distribution bit(0.5);
    BitVec v(n);
    for (size_t i = 0; i < n; ++i) {
        v.set(i, bit(rng));
    }
    return v;
}

}  // namespace

TEST(bitvec, string_round_trip) {
    BitVec v = BitVec::from_string("0110100000000000000000000000000000000000000000000000000000000000001");
    EXPECT_EQ(v.size(), 67u);
    EXPECT_EQ(v.weight(), 4u);
    EXPECT_EQ(v.support(), (std::vector<size_t>{1, 2, 4, 66}));
    EXPECT_EQ(BitVec::from_string(v.str()), v);
    EXPECT_THROW(BitVec::from_string("01x"), std::invalid_argument);
}

TEST(bitvec, dot_and_xor) {
    BitVec a = BitVec::from_string("1101");
    BitVec b = BitVec::from_string("1011");
    EXPECT_EQ((a ^ b).str(), "0110");
    EXPECT_EQ((a & b).str(), "1001");
    EXPECT_FALSE(a.dot(b));
    EXPECT_TRUE(a.dot(BitVec::from_string("1000")));
    EXPECT_TRUE(BitVec(70).none());
}

TEST(bitmatrix, transpose_and_multiply) {
    std::vector<std::string> rows = {"110", "011"};
    BitMatrix m = BitMatrix::from_rows(rows);
    BitMatrix t = m.transpose();
    EXPECT_EQ(t.rows(), 3u);
    EXPECT_EQ(t.cols(), 2u);
    EXPECT_EQ(t.column(0), m.row(0));
    EXPECT_EQ(mat_mul(m, BitMatrix::identity(3)), m);
    EXPECT_EQ(mat_vec(m, BitVec::from_string("111")).str(), "00");
    EXPECT_EQ(rank(m), 2u);
}

TEST(gf2_property, rank_nullity) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        size_t rows = 1 + rng() % 40;
        size_t cols = 1 + rng() % 140;
        BitMatrix m = random_matrix(rng, rows, cols, trial % 2 ? 0.5 : 0.1);
        auto kernel = kernel_basis(m);
        ASSERT_EQ(rank(m) + kernel.size(), cols);
        EchelonBasis basis(cols);
        for (const BitVec &k : kernel) {
            ASSERT_TRUE(mat_vec(m, k).none());
            ASSERT_TRUE(basis.insert(k));
        }
        ASSERT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(gf2_property, solve_matches_membership) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        size_t rows = 1 + rng() % 70;
        size_t cols = 1 + rng() % 30;
        BitMatrix m = random_matrix(rng, rows, cols, 0.3);
        // Consistent right-hand side.
        BitVec x = random_vec(rng, cols);
        BitVec b = mat_vec(m, x);
        auto sol = solve(m, b);
        ASSERT_TRUE(sol.has_value());
        ASSERT_EQ(mat_vec(m, *sol), b);
        // Arbitrary right-hand side: solvable iff b lies in the column space.
        BitVec c = random_vec(rng, rows);
        EchelonBasis span(rows);
        BitMatrix t = m.transpose();
        for (size_t r = 0; r < t.rows(); ++r) {
            span.insert(t.row(r));
        }
        auto sol_c = solve(m, c);
        ASSERT_EQ(sol_c.has_value(), span.contains(c));
        if (sol_c) {
            ASSERT_EQ(mat_vec(m, *sol_c), c);
        }
    }
}

TEST(gf2_property, mat_mul_associative) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix a = random_matrix(rng, 1 + rng() % 20, 7 + rng() % 70);
        BitMatrix b = random_matrix(rng, a.cols(), 1 + rng() % 70);
        BitMatrix c = random_matrix(rng, b.cols(), 1 + rng() % 20);
        ASSERT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
        ASSERT_EQ(mat_mul(a, b).transpose(), mat_mul(b.transpose(), a.transpose()));
    }
}

TEST(echelon_basis, dimension_tracks_rank) {
    std::mt19937_64 rng(4);
    BitMatrix m = random_matrix(rng, 30, 20);
    EchelonBasis basis(20);
    std::vector<BitVec> prefix;
    for (size_t r = 0; r < m.rows(); ++r) {
        prefix.push_back(m.row(r));
        basis.insert(m.row(r));
        EXPECT_TRUE(basis.contains(m.row(r)));
        EXPECT_EQ(basis.dimension(), rank(BitMatrix::from_rows(prefix, 20)));
    }
    EXPECT_FALSE(basis.insert(BitVec(20)));
}
