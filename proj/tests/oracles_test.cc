// Copyright 2026 The Qudit Deutsch Authors
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

#include "qudit/oracles.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qudit {
namespace {

std::vector<uint32_t> table(const BooleanOracle &o) {
    return {o.values().begin(), o.values().end()};
}

TEST(BooleanOracle, Validation) {
    EXPECT_THROW(BooleanOracle({0, 1, 0}), std::invalid_argument);
    EXPECT_THROW(BooleanOracle({0, 2}), std::invalid_argument);
    EXPECT_THROW(BooleanOracle({0}), std::invalid_argument);
    EXPECT_NO_THROW(BooleanOracle({0, 1}));
}

TEST(Classify, BooleanClasses) {
    EXPECT_EQ(classify_boolean(BooleanOracle({1, 1, 1, 1})), OracleClass::Constant);
    EXPECT_EQ(classify_boolean(BooleanOracle({0, 1, 1, 0})), OracleClass::Balanced);
    EXPECT_EQ(classify_boolean(BooleanOracle({0, 1, 1, 1})), OracleClass::Neither);
}

TEST(Classify, ParityClasses) {
    EXPECT_EQ(classify_parity(MultiOracle(8, {4, 2, 0, 0, 0, 6, 2, 4})), ParityClass::ConstantParity);
    EXPECT_EQ(classify_parity(MultiOracle(8, {4, 2, 0, 0, 1, 1, 7, 5})), ParityClass::BalancedParity);
    EXPECT_EQ(classify_parity(MultiOracle(8, {0, 2, 4, 6})), ParityClass::ConstantParity);
    EXPECT_EQ(classify_parity(MultiOracle(4, {1, 3, 3, 0})), ParityClass::Neither);
    EXPECT_THROW(MultiOracle(8, {8, 0}), std::invalid_argument);
    EXPECT_THROW(MultiOracle(6, {0, 0}), std::invalid_argument);
}

TEST(BvOracle, InnerProductTable) {
    EXPECT_EQ(table(bv_expand(BvOracle(2, 1))), (std::vector<uint32_t>{0, 1, 0, 1}));
    EXPECT_EQ(table(bv_expand(BvOracle(2, 3))), (std::vector<uint32_t>{0, 1, 1, 0}));
    EXPECT_THROW(BvOracle(2, 4), std::invalid_argument);
    EXPECT_THROW(BvOracle(0, 0), std::invalid_argument);
    EXPECT_THROW(BvOracle(31, 0), std::invalid_argument);
}

TEST(BvOracle, NonzeroStringsAreBalanced) {
    for (uint64_t a = 0; a < 16; a++) {
        EXPECT_EQ(classify_boolean(bv_expand(BvOracle(4, a))), a ? OracleClass::Balanced : OracleClass::Constant);
    }
}

TEST(Enumeration, Counts) {
    EXPECT_EQ(enumerate_balanced(4).size(), 6u);
    EXPECT_EQ(enumerate_balanced(8).size(), 70u);
    EXPECT_EQ(enumerate_balanced(16).size(), 12870u);
    EXPECT_EQ(enumerate_all_boolean(4).size(), 16u);
    EXPECT_THROW(enumerate_balanced(32), std::invalid_argument);
}

TEST(Enumeration, BalancedOrderAndUniqueness) {
    auto all = enumerate_balanced(4);
    // Masks 3, 5, 6, 9, 10, 12 with bit x = f(x).
    EXPECT_EQ(table(all[0]), (std::vector<uint32_t>{1, 1, 0, 0}));
    EXPECT_EQ(table(all[1]), (std::vector<uint32_t>{1, 0, 1, 0}));
    EXPECT_EQ(table(all[5]), (std::vector<uint32_t>{0, 0, 1, 1}));
    std::set<std::vector<uint32_t>> seen;
    for (const auto &o : enumerate_balanced(8)) {
        EXPECT_EQ(classify_boolean(o), OracleClass::Balanced);
        seen.insert(table(o));
    }
    EXPECT_EQ(seen.size(), 70u);
    auto c = enumerate_constant(8);
    EXPECT_EQ(table(c[0]), std::vector<uint32_t>(8, 0));
    EXPECT_EQ(table(c[1]), std::vector<uint32_t>(8, 1));
}

TEST(RandomOracle, ClassAndReproducibility) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        auto b = random_oracle(16, OracleClass::Balanced, seed);
        EXPECT_EQ(classify_boolean(b), OracleClass::Balanced);
        EXPECT_EQ(b, random_oracle(16, OracleClass::Balanced, seed));
        EXPECT_EQ(classify_boolean(random_oracle(16, OracleClass::Constant, seed)), OracleClass::Constant);
        auto m = random_multi_oracle(8, 16, ParityClass::BalancedParity, seed);
        EXPECT_EQ(classify_parity(m), ParityClass::BalancedParity);
        EXPECT_EQ(classify_parity(random_multi_oracle(8, 16, ParityClass::ConstantParity, seed)),
                  ParityClass::ConstantParity);
    }
    EXPECT_NE(random_oracle(64, OracleClass::Balanced, 1), random_oracle(64, OracleClass::Balanced, 2));
    EXPECT_THROW(random_oracle(8, OracleClass::Neither, 0), std::invalid_argument);
}

TEST(RandomOracle, BalancedCoversAllTablesAtD4) {
    std::set<std::vector<uint32_t>> seen;
    for (uint64_t seed = 0; seed < 400; seed++) seen.insert(table(random_oracle(4, OracleClass::Balanced, seed)));
    EXPECT_EQ(seen.size(), 6u);
}

TEST(Rng, Samplers) {
    Rng rng(42);
    std::vector<int> counts(3);
    for (int k = 0; k < 3000; k++) {
        auto v = uniform_below(rng, 3);
        ASSERT_LT(v, 3u);
        counts[v]++;
    }
    for (int c : counts) EXPECT_GT(c, 850);
    for (int k = 0; k < 1000; k++) {
        double u = uniform_unit(rng);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    EXPECT_THROW(uniform_below(rng, 0), std::invalid_argument);
}

TEST(Rng, FrozenStream) {
    // The std::mt19937_64 10000th output is fixed by the standard.
    Rng rng;
    rng.discard(9999);
    EXPECT_EQ(rng(), 9981545732273789042ull);
}

TEST(CountedOracle, CountsEveryAccess) {
    CountedOracle o(BooleanOracle({0, 1, 1, 0}));
    EXPECT_EQ(o.evaluate(1), 1u);
    EXPECT_EQ(o.evaluate(3), 0u);
    EXPECT_EQ(o.coherent_query().size(), 4u);
    EXPECT_EQ(o.invocations(), 3u);
    EXPECT_THROW(o.evaluate(4), std::out_of_range);
    EXPECT_THROW(CountedOracle({0, 3}, 2), std::invalid_argument);
    EXPECT_EQ(CountedOracle(MultiOracle(8, {0, 7})).range(), 8u);
}

}  // namespace
}  // namespace qudit
