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

/**
 * @file
 * Oracle gates and the one-query pipeline
 *
 *     control |0> --H--*--H--M
 *                      |
 *     aux     |1> --H--U_f----
 *
 * in three flavours: a full d-level auxiliary register (FullShift), a qubit
 * auxiliary register (AuxQubit) and no auxiliary register at all, with the
 * oracle acting as a sign flip on the control (PhaseOnly).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qudit/oracles.h"
#include "qudit/qudit_state.h"

namespace qudit {

enum class OracleMode { FullShift, AuxQubit, PhaseOnly };

/// Computational: the pipeline applies a final H to the control and reads |x>.
/// HadamardFilter: the control is read directly in the {|x_H>} basis.
/// Both give the same outcome statistics.
enum class MeasurementBasis { Computational, HadamardFilter };

std::string_view to_string(OracleMode mode);
std::string_view to_string(MeasurementBasis basis);

/// Largest joint state (in amplitudes) a FullShift run will allocate.
inline constexpr size_t kMaxJointAmplitudes = size_t{1} << 24;

class MeasurementDistribution {
   public:
    /// Throws std::invalid_argument unless probs are nonnegative and sum to 1 within kNormTolerance.
    explicit MeasurementDistribution(std::vector<double> probs);

    size_t dim() const {
        return probs_.size();
    }
    double operator[](size_t x) const {
        return probs_[x];
    }
    std::span<const double> probabilities() const {
        return probs_;
    }
    size_t argmax() const;

   private:
    std::vector<double> probs_;
};

struct BvRecovery {
    uint64_t a;
    double probability;
    bool operator==(const BvRecovery &other) const = default;
};

using Verdict = std::variant<OracleClass, ParityClass, BvRecovery>;

std::string verdict_name(const Verdict &verdict);

struct ClassificationResult {
    Verdict verdict;
    MeasurementDistribution distribution;
    size_t quantum_queries;
    MeasurementBasis basis;
    OracleMode mode;
};

/// |x>|y> -> |x>|y + f(x) mod d_aux>. `f` has one entry per control index, each below dim_aux.
JointState apply_controlled_shift(JointState state, std::span<const uint32_t> f);
JointState apply_controlled_shift(JointState state, const BooleanOracle &oracle);
JointState apply_controlled_shift(JointState state, const MultiOracle &oracle);
/// Counts as one invocation of `oracle`.
JointState apply_controlled_shift(JointState state, CountedOracle &oracle);

/// |x> -> (-1)^f(x) |x>. Multivalued tables flip the sign on odd values.
QuditState apply_phase_oracle(QuditState state, std::span<const uint32_t> f);
QuditState apply_phase_oracle(QuditState state, const BooleanOracle &oracle);
QuditState apply_phase_oracle(QuditState state, const MultiOracle &oracle);
QuditState apply_phase_oracle(QuditState state, CountedOracle &oracle);

/// Distribution over outcomes of measuring `state` in `basis`; for HadamardFilter
/// outcome x is the projection onto |x_H>.
MeasurementDistribution measure(const QuditState &state, MeasurementBasis basis);

/// Same measurement applied to the control register of a joint state, auxiliary traced out.
MeasurementDistribution measure_control(const JointState &state, MeasurementBasis basis);

/// Sorted (outcome, count) pairs with nonzero count; reproducible per seed.
std::vector<std::pair<size_t, uint64_t>> sample(const MeasurementDistribution &dist, uint64_t seed, uint64_t shots);

/// |0_H>|1_H>, built by applying H to both registers of |0>|1>.
JointState prepared_joint_state(size_t dim_control, size_t dim_aux);

/// The joint state right after the single oracle call, with an auxiliary
/// register of dimension `dim_aux` (a power of two exceeding every table value).
/// Throws std::length_error above kMaxJointAmplitudes.
JointState post_oracle_joint_state(CountedOracle &oracle, size_t dim_aux);

/// The control state right after the oracle call of a PhaseOnly run.
QuditState post_oracle_phase_state(CountedOracle &oracle);

/// Auxiliary dimension used by `mode`: `full_shift_dim` for FullShift, 2 for
/// AuxQubit, 1 (no register) for PhaseOnly.
size_t auxiliary_dim(OracleMode mode, size_t full_shift_dim);

/// Runs the full pipeline with one coherent call to `oracle` and returns the
/// final control distribution in `basis`.
MeasurementDistribution run_pipeline(
    CountedOracle &oracle, OracleMode mode, MeasurementBasis basis, size_t full_shift_dim);

/// Constant iff P(0) > 1 - 1e-9, Balanced iff P(0) < 1e-9, otherwise Neither.
OracleClass decide_class(const MeasurementDistribution &dist);
ParityClass decide_parity(const MeasurementDistribution &dist);

ClassificationResult run_deutsch(
    const BooleanOracle &oracle, OracleMode mode, MeasurementBasis basis = MeasurementBasis::Computational);

ClassificationResult run_bernstein_vazirani(
    const BvOracle &oracle, OracleMode mode, MeasurementBasis basis = MeasurementBasis::Computational);

/// AuxQubit mode requires every value to be 0 or 1.
ClassificationResult run_parity(
    const MultiOracle &oracle, OracleMode mode, MeasurementBasis basis = MeasurementBasis::Computational);

}  // namespace qudit
