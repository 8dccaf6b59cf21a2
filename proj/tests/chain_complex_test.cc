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

#include <random>
#include <string>
#include <vector>

#include "augsurf/css_code.h"
#include "augsurf/torus.h"
#include "gtest/gtest.h"

using namespace augsurf;

TEST(chain_complex, rejects_mismatched_shapes) {
    EXPECT_THROW(ChainComplex({2, 3}, {BitMatrix(3, 2)}), std::invalid_argument);
    EXPECT_NO_THROW(ChainComplex({2, 3}, {BitMatrix(2, 3)}));
}

TEST(chain_complex, degree_zero_boundary_is_empty) {
    ChainComplex c({2, 3}, {BitMatrix(2, 3)});
    EXPECT_EQ(c.boundary(0).rows(), 0u);
    EXPECT_EQ(c.boundary(0).cols(), 2u);
    EXPECT_EQ(c.top_degree(), 1u);
}

TEST(chain_complex, verify_detects_nonzero_square) {
    std::vector<std::string> d1 = {"11"};
    std::vector<std::string> d2 = {"1", "0"};
    ChainComplex bad({1, 2, 1}, {BitMatrix::from_rows(d1), BitMatrix::from_rows(d2)});
    EXPECT_FALSE(bad.verify());
}

TEST(chain_complex, circle_homology) {
    // Cycle graph on 5 vertices: H_0 = H_1 = F_2.
    BitMatrix d(5, 5);
    for (size_t e = 0; e < 5; ++e) {
        d.set(e, e);
        d.set((e + 1) % 5, e);
    }
    ChainComplex circle({5, 5}, {d});
    EXPECT_EQ(homology_dim(circle, 0), 1u);
    EXPECT_EQ(homology_dim(circle, 1), 1u);
    // Künneth: circle x circle is a torus.
    ChainComplex torus = tensor_product(circle, circle);
    EXPECT_TRUE(torus.verify());
    EXPECT_EQ(torus.dims(), (std::vector<size_t>{25, 50, 25}));
    EXPECT_EQ(homology_dim(torus, 0), 1u);
    EXPECT_EQ(homology_dim(torus, 1), 2u);
    EXPECT_EQ(homology_dim(torus, 2), 1u);
}

TEST(chain_complex, block_offsets) {
    ChainComplex a({2, 3}, {BitMatrix(2, 3)});
    ChainComplex b({4, 5, 6}, {BitMatrix(4, 5), BitMatrix(5, 6)});
    // Degree 1 = A_0 (x) B_1 + A_1 (x) B_0.
    EXPECT_EQ(tensor_block_offset(a, b, 1, 0), 0u);
    EXPECT_EQ(tensor_block_offset(a, b, 1, 1), 10u);
    EXPECT_EQ(tensor_block_offset(a, b, 0, 1), SIZE_MAX);
    ChainComplex p = tensor_product(a, b);
    EXPECT_EQ(p.dims(), (std::vector<size_t>{8, 10 + 12, 12 + 15, 18}));
}

TEST(chain_complex_property, tensor_of_random_complexes) {
    // Random length-2 complexes built as d1 = random, d2 = kernel vectors of d1.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto make = [&]() {
            size_t n0 = 1 + rng() % 4;
            size_t n1 = 2 + rng() % 5;
            BitMatrix d1(n0, n1);
            for (size_t r = 0; r < n0; ++r) {
                for (size_t c = 0; c < n1; ++c) {
                    d1.set(r, c, rng() & 1);
                }
            }
            auto kernel = kernel_basis(d1);
            BitMatrix d2(n1, kernel.size());
            for (size_t j = 0; j < kernel.size(); ++j) {
                for (size_t i = 0; i < n1; ++i) {
                    d2.set(i, j, kernel[j].get(i));
                }
            }
            return ChainComplex({n0, n1, kernel.size()}, {d1, d2});
        };
        ChainComplex a = make();
        ChainComplex b = make();
        ChainComplex p = tensor_product(a, b);
        ASSERT_TRUE(p.verify());
        ASSERT_TRUE(p.dual().verify());
        // Künneth over a field.
        for (size_t i = 0; i <= p.top_degree(); ++i) {
            size_t expect = 0;
            for (size_t j = 0; j <= i; ++j) {
                if (j <= a.top_degree() && i - j <= b.top_degree()) {
                    expect += homology_dim(a, j) * homology_dim(b, i - j);
                }
            }
            ASSERT_EQ(homology_dim(p, i), expect) << "degree " << i;
        }
    }
}

TEST(chain_complex, dual_reverses_degrees) {
    ChainComplex t = Torus(3).chain_complex();
    ChainComplex d = t.dual();
    EXPECT_EQ(d.dims(), (std::vector<size_t>{9, 18, 9}));
    EXPECT_EQ(d.boundary(1), t.boundary(2).transpose());
    EXPECT_EQ(d.boundary(2), t.boundary(1).transpose());
}
