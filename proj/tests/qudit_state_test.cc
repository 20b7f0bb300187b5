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

#include "qudit/qudit_state.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "test_util.h"

namespace qudit {
namespace {

TEST(QuditState, RejectsUnnormalizedAndTinyStates) {
    using Amps = std::vector<Amplitude>;
    EXPECT_THROW(QuditState::from_amplitudes(Amps(2, 1.0)), std::invalid_argument);
    EXPECT_THROW(QuditState::from_amplitudes(Amps(1, 1.0)), std::invalid_argument);
    Amps nan_state = {NAN, 0.0};
    EXPECT_THROW(QuditState::from_amplitudes(nan_state), std::invalid_argument);
    Amps i_state = {Amplitude(0, 1), 0.0};
    EXPECT_NO_THROW(QuditState::from_amplitudes(i_state));
}

TEST(QuditState, BasisAndUniform) {
    auto b = basis_state(4, 2);
    EXPECT_EQ(b[2], Amplitude(1));
    EXPECT_EQ(b[0], Amplitude(0));
    EXPECT_THROW(basis_state(4, 4), std::out_of_range);
    auto u = uniform_superposition(8);
    for (auto a : u.amplitudes()) {
        EXPECT_NEAR(a.real(), 1 / std::sqrt(8.0), 1e-15);
    }
}

TEST(QuditState, TensorIsRowMajor) {
    auto j = tensor(basis_state(2, 1), basis_state(4, 3));
    EXPECT_EQ(j.dim_control(), 2u);
    EXPECT_EQ(j.dim_aux(), 4u);
    EXPECT_EQ(j.amplitudes()[7], Amplitude(1));
    EXPECT_EQ(j.at(1, 3), Amplitude(1));
}

TEST(QuditState, InnerProductAndFidelity) {
    std::mt19937_64 rng(1);
    auto a = testing::random_state(8, rng);
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(basis_state(4, 0), basis_state(4, 1))), 0.0, 1e-15);
}

TEST(Schmidt, ProductStateHasRankOne) {
    std::mt19937_64 rng(7);
    auto c = testing::random_state(4, rng);
    auto a = testing::random_state(8, rng);
    auto report = schmidt_analyze(tensor(c, a));
    EXPECT_EQ(report.rank, 1u);
    EXPECT_TRUE(report.is_product);
    EXPECT_NEAR(report.singular_values[0], 1.0, 1e-12);

    auto factors = product_factors(tensor(c, a));
    ASSERT_TRUE(factors.has_value());
    // Reassembled state equals the original up to one global phase.
    auto back = tensor(factors->first, factors->second);
    EXPECT_TRUE(equal_up_to_global_phase(back.amplitudes(), tensor(c, a).amplitudes(), 1e-12));
}

TEST(Schmidt, BellStateHasRankTwo) {
    double s = 1 / std::sqrt(2.0);
    auto bell = JointState::from_amplitudes(2, 2, {s, 0, 0, s});
    auto report = schmidt_analyze(bell);
    EXPECT_EQ(report.rank, 2u);
    EXPECT_FALSE(report.is_product);
    EXPECT_NEAR(report.singular_values[1], s, 1e-12);
    EXPECT_FALSE(product_factors(bell).has_value());
}

TEST(Schmidt, RankAgreesWithReducedPurity) {
    // Independent check: a pure joint state is a product iff Tr(rho_c^2) = 1.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        auto amps = testing::random_amplitudes(16, rng);
        auto j = JointState::from_amplitudes(4, 4, amps);
        std::vector<std::vector<Amplitude>> rho(4, std::vector<Amplitude>(4));
        for (size_t x = 0; x < 4; x++)
            for (size_t xp = 0; xp < 4; xp++)
                for (size_t y = 0; y < 4; y++) rho[x][xp] += j.at(x, y) * std::conj(j.at(xp, y));
        double purity = 0;
        for (size_t x = 0; x < 4; x++)
            for (size_t xp = 0; xp < 4; xp++) purity += std::norm(rho[x][xp]);
        auto report = schmidt_analyze(j);
        double sum4 = 0;
        for (double s : report.singular_values) sum4 += s * s * s * s;
        EXPECT_NEAR(sum4, purity, 1e-12);
        EXPECT_EQ(report.is_product, purity > 1 - 1e-9);
    }
}

TEST(GlobalPhase, EqualityIgnoresPhaseOnly) {
    std::vector<Amplitude> a = {0.6, Amplitude(0, 0.8)};
    std::vector<Amplitude> b = {a[0] * std::polar(1.0, 0.3), a[1] * std::polar(1.0, 0.3)};
    EXPECT_TRUE(equal_up_to_global_phase(a, b, 1e-12));
    std::vector<Amplitude> c = {0.6, Amplitude(0, -0.8)};
    EXPECT_FALSE(equal_up_to_global_phase(a, c, 1e-6));
    auto ca = canonical_global_phase(b);
    EXPECT_NEAR(max_abs_difference(ca, canonical_global_phase(a)), 0.0, 1e-12);
}

}  // namespace
}  // namespace qudit
