// Copyright 2026 The topostab Authors
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

#include "topostab/pauli.h"

#include <gtest/gtest.h>

#include <random>

#include "instances.h"

using topostab::commutes;
using topostab::multiply;
using topostab::PauliOperator;
using topostab::weight;
using topostab::testing::random_pauli;

namespace {

PauliOperator P(const char *text) {
    return PauliOperator::from_str(text);
}

}  // namespace

TEST(Pauli, TextRoundTrip) {
    auto op = P("XIZY");
    EXPECT_EQ(op.str(), "XIZY");
    EXPECT_EQ(op.at(0), 'X');
    EXPECT_EQ(op.at(3), 'Y');
    EXPECT_EQ(op.x_mask().str(), "1001");
    EXPECT_EQ(op.z_mask().str(), "0011");
    EXPECT_EQ(P("X_Z").str(), "XIZ");
    EXPECT_THROW(P("XQ"), std::invalid_argument);
}

TEST(Pauli, Weight) {
    EXPECT_EQ(weight(P("XIZ")), 2u);
    EXPECT_EQ(weight(PauliOperator(5)), 0u);
    EXPECT_EQ(weight(P("XXXX")), 4u);
    EXPECT_EQ(weight(P("YYIY")), 3u);
}

TEST(Pauli, Multiply) {
    EXPECT_EQ(multiply(P("XI"), P("XZ")), P("IZ"));
    EXPECT_EQ(multiply(P("X"), P("Z")), P("Y"));
    auto a = P("XYZIY");
    EXPECT_TRUE(multiply(a, a).is_identity());
    EXPECT_THROW(multiply(P("X"), P("XX")), std::invalid_argument);
}

TEST(Pauli, Commutes) {
    EXPECT_FALSE(commutes(P("X"), P("Z")));
    EXPECT_TRUE(commutes(P("XXXX"), P("ZZZZ")));
    EXPECT_FALSE(commutes(P("XXX"), P("ZZZ")));
    EXPECT_FALSE(commutes(P("Y"), P("X")));
    EXPECT_TRUE(commutes(P("Y"), P("Y")));
    EXPECT_THROW(commutes(P("X"), P("XX")), std::invalid_argument);
}

TEST(Pauli, SymplecticRoundTrip) {
    auto op = P("XIZY");
    EXPECT_EQ(op.symplectic().str(), "10010011");
    EXPECT_EQ(PauliOperator::from_symplectic(op.symplectic()), op);
    EXPECT_THROW(PauliOperator::from_symplectic(topostab::BitVector(3)), std::invalid_argument);
}

TEST(PauliProperty, AlgebraLaws) {
    std::mt19937_64 rng(2026);
    for (size_t n : {1u, 5u, 64u, 70u, 130u}) {
        for (int trial = 0; trial < 200; trial++) {
            auto a = random_pauli(rng, n);
            auto b = random_pauli(rng, n);
            auto c = random_pauli(rng, n);
            EXPECT_EQ(commutes(a, b), commutes(b, a));
            // Bilinearity: the symplectic product is additive in each argument.
            EXPECT_EQ(symplectic_product(a, multiply(b, c)), symplectic_product(a, b) != symplectic_product(a, c));
            EXPECT_LE(weight(multiply(a, b)), weight(a) + weight(b));
            EXPECT_EQ(multiply(a, b), multiply(b, a));
            EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
            EXPECT_TRUE(multiply(a, a).is_identity());
            auto p = multiply(a, b);
            EXPECT_TRUE(p.x_mask().padding_is_clear());
            EXPECT_TRUE(p.z_mask().padding_is_clear());
        }
    }
}
