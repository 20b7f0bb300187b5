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

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qudit {

namespace {

double sum_norm_squared(std::span<const Amplitude> amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

void check_amplitudes(std::span<const Amplitude> amps, const char *what) {
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument(std::string(what) + ": non-finite amplitude");
        }
    }
    double n = sum_norm_squared(amps);
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw std::invalid_argument(std::string(what) + ": squared norm " + std::to_string(n) + " differs from 1");
    }
}

using RowMajorMatrix = Eigen::Matrix<Amplitude, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorMatrix> as_matrix(const JointState &state) {
    return Eigen::Map<const RowMajorMatrix>(
        state.amplitudes().data(), (Eigen::Index)state.dim_control(), (Eigen::Index)state.dim_aux());
}

}  // namespace

QuditState QuditState::from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.size() < 2) {
        throw std::invalid_argument("QuditState: dimension must be at least 2, got " + std::to_string(amps.size()));
    }
    check_amplitudes(amps, "QuditState");
    return QuditState(std::move(amps));
}

double QuditState::norm_squared() const {
    return sum_norm_squared(amps_);
}

JointState JointState::from_amplitudes(size_t dim_control, size_t dim_aux, std::vector<Amplitude> amps) {
    if (dim_control == 0 || dim_aux == 0) {
        throw std::invalid_argument("JointState: register dimensions must be positive");
    }
    if (amps.size() != dim_control * dim_aux) {
        throw std::invalid_argument(
            "JointState: expected " + std::to_string(dim_control * dim_aux) + " amplitudes, got " +
            std::to_string(amps.size()));
    }
    check_amplitudes(amps, "JointState");
    return JointState(dim_control, dim_aux, std::move(amps));
}

double JointState::norm_squared() const {
    return sum_norm_squared(amps_);
}

QuditState basis_state(size_t dim, size_t x) {
    if (x >= dim) {
        throw std::out_of_range(
            "basis_state: index " + std::to_string(x) + " out of range for dimension " + std::to_string(dim));
    }
    std::vector<Amplitude> amps(dim);
    amps[x] = 1.0;
    return QuditState::from_amplitudes(std::move(amps));
}

QuditState uniform_superposition(size_t dim) {
    std::vector<Amplitude> amps(dim, Amplitude(1.0 / std::sqrt((double)dim)));
    return QuditState::from_amplitudes(std::move(amps));
}

JointState tensor(const QuditState &control, const QuditState &aux) {
    std::vector<Amplitude> amps;
    amps.reserve(control.dim() * aux.dim());
    for (const auto &c : control.amplitudes()) {
        for (const auto &a : aux.amplitudes()) {
            amps.push_back(c * a);
        }
    }
    return JointState::from_amplitudes(control.dim(), aux.dim(), std::move(amps));
}

Amplitude inner_product(const QuditState &a, const QuditState &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(
            "inner_product: dimension mismatch (" + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
    Amplitude total = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

double fidelity(const QuditState &a, const QuditState &b) {
    return std::norm(inner_product(a, b));
}

SchmidtReport schmidt_analyze(const JointState &state) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(as_matrix(state));
    const auto &sv = svd.singularValues();

    SchmidtReport report{0, {}, true};
    report.singular_values.reserve((size_t)sv.size());
    for (Eigen::Index k = 0; k < sv.size(); k++) {
        report.singular_values.push_back(sv[k]);
    }
    std::sort(report.singular_values.begin(), report.singular_values.end(), std::greater<>());
    for (double s : report.singular_values) {
        if (s >= kSchmidtThreshold) {
            report.rank++;
        }
    }
    report.is_product = report.rank == 1;
    return report;
}

std::optional<std::pair<QuditState, QuditState>> product_factors(const JointState &state) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(as_matrix(state), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    for (Eigen::Index k = 1; k < sv.size(); k++) {
        if (sv[k] >= kSchmidtThreshold) {
            return std::nullopt;
        }
    }
    // A = s0 u0 v0^H with s0 = 1 for a normalized product state.
    std::vector<Amplitude> control(state.dim_control());
    std::vector<Amplitude> aux(state.dim_aux());
    for (size_t x = 0; x < control.size(); x++) {
        control[x] = svd.matrixU()((Eigen::Index)x, 0);
    }
    for (size_t y = 0; y < aux.size(); y++) {
        aux[y] = std::conj(svd.matrixV()((Eigen::Index)y, 0));
    }
    return std::make_pair(
        QuditState::from_amplitudes(std::move(control)), QuditState::from_amplitudes(std::move(aux)));
}

std::vector<Amplitude> canonical_global_phase(std::span<const Amplitude> amps, double tol) {
    std::vector<Amplitude> out(amps.begin(), amps.end());
    for (const auto &a : amps) {
        if (std::abs(a) > tol) {
            Amplitude phase = std::conj(a) / std::abs(a);
            for (auto &v : out) {
                v *= phase;
            }
            break;
        }
    }
    return out;
}

bool equal_up_to_global_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    // Align on the largest entry of `a`, which is the best-conditioned phase reference.
    size_t pivot = 0;
    for (size_t k = 1; k < a.size(); k++) {
        if (std::abs(a[k]) > std::abs(a[pivot])) {
            pivot = k;
        }
    }
    if (a.empty() || std::abs(a[pivot]) == 0 || std::abs(b[pivot]) == 0) {
        return max_abs_difference(a, b) <= tol;
    }
    Amplitude phase = (b[pivot] / std::abs(b[pivot])) / (a[pivot] / std::abs(a[pivot]));
    for (size_t k = 0; k < a.size(); k++) {
        if (std::abs(a[k] * phase - b[k]) > tol) {
            return false;
        }
    }
    return true;
}

double max_abs_difference(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_abs_difference: length mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace qudit
