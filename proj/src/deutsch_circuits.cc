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

#include "qudit/deutsch_circuits.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qudit/walsh_hadamard.h"

namespace qudit {

std::string_view to_string(OracleMode mode) {
    switch (mode) {
        case OracleMode::FullShift:
            return "full-shift";
        case OracleMode::AuxQubit:
            return "aux-qubit";
        case OracleMode::PhaseOnly:
            break;
    }
    return "phase-only";
}

std::string_view to_string(MeasurementBasis basis) {
    return basis == MeasurementBasis::Computational ? "computational" : "hadamard-filter";
}

MeasurementDistribution::MeasurementDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("MeasurementDistribution: empty");
    }
    double total = 0;
    for (double p : probs_) {
        if (!(p >= 0) || !std::isfinite(p)) {
            throw std::invalid_argument("MeasurementDistribution: probabilities must be finite and nonnegative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw std::invalid_argument("MeasurementDistribution: probabilities sum to " + std::to_string(total));
    }
}

size_t MeasurementDistribution::argmax() const {
    return (size_t)std::distance(probs_.begin(), std::max_element(probs_.begin(), probs_.end()));
}

std::string verdict_name(const Verdict &verdict) {
    if (auto c = std::get_if<OracleClass>(&verdict)) {
        return std::string(to_string(*c));
    }
    if (auto p = std::get_if<ParityClass>(&verdict)) {
        return std::string(to_string(*p));
    }
    return "recovered";
}

JointState apply_controlled_shift(JointState state, std::span<const uint32_t> f) {
    size_t rows = state.dim_control();
    size_t cols = state.dim_aux();
    if (f.size() != rows) {
        throw std::invalid_argument(
            "apply_controlled_shift: oracle domain " + std::to_string(f.size()) + " != control dimension " +
            std::to_string(rows));
    }
    for (uint32_t v : f) {
        if (v >= cols) {
            throw std::invalid_argument(
                "apply_controlled_shift: oracle value " + std::to_string(v) + " does not fit auxiliary dimension " +
                std::to_string(cols));
        }
    }
    auto amps = std::move(state).release();
    for (size_t x = 0; x < rows; x++) {
        // new[(y + s) mod cols] = old[y]
        auto row = amps.begin() + (std::ptrdiff_t)(x * cols);
        std::rotate(row, row + (std::ptrdiff_t)(cols - f[x]), row + (std::ptrdiff_t)cols);
    }
    return JointState::from_amplitudes(rows, cols, std::move(amps));
}

JointState apply_controlled_shift(JointState state, const BooleanOracle &oracle) {
    return apply_controlled_shift(std::move(state), oracle.values());
}

JointState apply_controlled_shift(JointState state, const MultiOracle &oracle) {
    return apply_controlled_shift(std::move(state), oracle.values());
}

JointState apply_controlled_shift(JointState state, CountedOracle &oracle) {
    return apply_controlled_shift(std::move(state), oracle.coherent_query());
}

QuditState apply_phase_oracle(QuditState state, std::span<const uint32_t> f) {
    if (f.size() != state.dim()) {
        throw std::invalid_argument(
            "apply_phase_oracle: oracle domain " + std::to_string(f.size()) + " != state dimension " +
            std::to_string(state.dim()));
    }
    auto amps = std::move(state).release();
    for (size_t x = 0; x < amps.size(); x++) {
        if (f[x] & 1u) {
            amps[x] = -amps[x];
        }
    }
    return QuditState::from_amplitudes(std::move(amps));
}

QuditState apply_phase_oracle(QuditState state, const BooleanOracle &oracle) {
    return apply_phase_oracle(std::move(state), oracle.values());
}

QuditState apply_phase_oracle(QuditState state, const MultiOracle &oracle) {
    return apply_phase_oracle(std::move(state), oracle.values());
}

QuditState apply_phase_oracle(QuditState state, CountedOracle &oracle) {
    return apply_phase_oracle(std::move(state), oracle.coherent_query());
}

MeasurementDistribution measure(const QuditState &state, MeasurementBasis basis) {
    std::vector<double> probs(state.dim());
    if (basis == MeasurementBasis::HadamardFilter) {
        // <x_H|psi> = (H psi)_x since H is real and symmetric.
        std::vector<Amplitude> rotated(state.amplitudes().begin(), state.amplitudes().end());
        hadamard_in_place(rotated);
        for (size_t x = 0; x < probs.size(); x++) {
            probs[x] = std::norm(rotated[x]);
        }
    } else {
        for (size_t x = 0; x < probs.size(); x++) {
            probs[x] = std::norm(state[x]);
        }
    }
    return MeasurementDistribution(std::move(probs));
}

MeasurementDistribution measure_control(const JointState &state, MeasurementBasis basis) {
    auto marginal = [](const JointState &s) {
        std::vector<double> probs(s.dim_control());
        for (size_t x = 0; x < probs.size(); x++) {
            for (const auto &a : s.row(x)) {
                probs[x] += std::norm(a);
            }
        }
        return MeasurementDistribution(std::move(probs));
    };
    if (basis == MeasurementBasis::HadamardFilter) {
        return marginal(apply_hadamard_control(state));
    }
    return marginal(state);
}

std::vector<std::pair<size_t, uint64_t>> sample(const MeasurementDistribution &dist, uint64_t seed, uint64_t shots) {
    if (shots == 0) {
        throw std::invalid_argument("sample: shots must be at least 1");
    }
    auto probs = dist.probabilities();
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    size_t last_nonzero = 0;
    for (size_t x = 0; x < probs.size(); x++) {
        if (probs[x] > 0) {
            last_nonzero = x;
        }
    }

    Rng rng(seed);
    std::vector<uint64_t> counts(probs.size());
    for (uint64_t s = 0; s < shots; s++) {
        double u = uniform_unit(rng) * cumulative.back();
        size_t x = (size_t)std::distance(cumulative.begin(), std::upper_bound(cumulative.begin(), cumulative.end(), u));
        counts[std::min(x, last_nonzero)]++;
    }
    std::vector<std::pair<size_t, uint64_t>> histogram;
    for (size_t x = 0; x < counts.size(); x++) {
        if (counts[x]) {
            histogram.emplace_back(x, counts[x]);
        }
    }
    return histogram;
}

JointState prepared_joint_state(size_t dim_control, size_t dim_aux) {
    checked_log2(dim_control);
    checked_log2(dim_aux);
    if (dim_control > kMaxJointAmplitudes / dim_aux) {
        throw std::length_error(
            "joint state of " + std::to_string(dim_control) + " x " + std::to_string(dim_aux) +
            " amplitudes exceeds the full-shift limit; use aux-qubit or phase-only mode");
    }
    auto state = tensor(basis_state(dim_control, 0), basis_state(dim_aux, 1));
    return apply_hadamard_aux(apply_hadamard_control(std::move(state)));
}

JointState post_oracle_joint_state(CountedOracle &oracle, size_t dim_aux) {
    return apply_controlled_shift(prepared_joint_state(oracle.dim(), dim_aux), oracle);
}

QuditState post_oracle_phase_state(CountedOracle &oracle) {
    return apply_phase_oracle(apply_hadamard(basis_state(oracle.dim(), 0)), oracle);
}

size_t auxiliary_dim(OracleMode mode, size_t full_shift_dim) {
    switch (mode) {
        case OracleMode::FullShift:
            return full_shift_dim;
        case OracleMode::AuxQubit:
            return 2;
        case OracleMode::PhaseOnly:
            break;
    }
    return 1;
}

MeasurementDistribution run_pipeline(
    CountedOracle &oracle, OracleMode mode, MeasurementBasis basis, size_t full_shift_dim) {
    bool final_hadamard = basis == MeasurementBasis::Computational;
    if (mode == OracleMode::PhaseOnly) {
        auto state = post_oracle_phase_state(oracle);
        if (final_hadamard) {
            state = apply_hadamard(std::move(state));
        }
        return measure(state, basis);
    }
    auto joint = post_oracle_joint_state(oracle, auxiliary_dim(mode, full_shift_dim));
    if (final_hadamard) {
        joint = apply_hadamard_control(std::move(joint));
    }
    return measure_control(joint, basis);
}

OracleClass decide_class(const MeasurementDistribution &dist) {
    if (dist[0] > 1 - kNormTolerance) {
        return OracleClass::Constant;
    }
    if (dist[0] < kNormTolerance) {
        return OracleClass::Balanced;
    }
    return OracleClass::Neither;
}

ParityClass decide_parity(const MeasurementDistribution &dist) {
    switch (decide_class(dist)) {
        case OracleClass::Constant:
            return ParityClass::ConstantParity;
        case OracleClass::Balanced:
            return ParityClass::BalancedParity;
        case OracleClass::Neither:
            break;
    }
    return ParityClass::Neither;
}

ClassificationResult run_deutsch(const BooleanOracle &oracle, OracleMode mode, MeasurementBasis basis) {
    CountedOracle counted(oracle);
    auto dist = run_pipeline(counted, mode, basis, oracle.dim());
    OracleClass verdict = decide_class(dist);
    return {verdict, std::move(dist), counted.invocations(), basis, mode};
}

ClassificationResult run_bernstein_vazirani(const BvOracle &oracle, OracleMode mode, MeasurementBasis basis) {
    std::vector<uint32_t> table(oracle.dim());
    for (size_t x = 0; x < table.size(); x++) {
        table[x] = oracle(x);
    }
    CountedOracle counted(std::move(table), 2);
    auto dist = run_pipeline(counted, mode, basis, oracle.dim());
    size_t best = dist.argmax();
    BvRecovery recovery{best, dist[best]};
    return {recovery, std::move(dist), counted.invocations(), basis, mode};
}

ClassificationResult run_parity(const MultiOracle &oracle, OracleMode mode, MeasurementBasis basis) {
    if (mode == OracleMode::AuxQubit) {
        auto v = oracle.values();
        if (std::any_of(v.begin(), v.end(), [](uint32_t f) { return f > 1; })) {
            throw std::invalid_argument(
                "aux-qubit mode needs f(x) in {0,1}; shifts mod 2 would alias multivalued outputs. "
                "Use full-shift or phase-only mode");
        }
    }
    CountedOracle counted(oracle);
    auto dist = run_pipeline(counted, mode, basis, oracle.dim_aux());
    ParityClass verdict = decide_parity(dist);
    return {verdict, std::move(dist), counted.invocations(), basis, mode};
}

}  // namespace qudit
