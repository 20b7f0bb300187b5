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

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qudit {

using Amplitude = std::complex<double>;

/// Tolerance applied to norms and probabilities throughout the library.
inline constexpr double kNormTolerance = 1e-9;

/// Singular values below this are treated as zero when computing Schmidt rank.
inline constexpr double kSchmidtThreshold = 1e-9;

/// A normalized pure state of a single d-level system.
///
/// Instances are immutable. Transforms that want to reuse the buffer take a
/// state by value, call `release()` on it and rebuild with `from_amplitudes`,
/// which re-checks the invariants (finite entries, unit norm, dim >= 2).
class QuditState {
   public:
    static QuditState from_amplitudes(std::vector<Amplitude> amps);

    size_t dim() const {
        return amps_.size();
    }
    const Amplitude &operator[](size_t x) const {
        return amps_[x];
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    double norm_squared() const;

    std::vector<Amplitude> release() && {
        return std::move(amps_);
    }

    bool operator==(const QuditState &other) const = default;

   private:
    explicit QuditState(std::vector<Amplitude> amps) : amps_(std::move(amps)) {
    }
    std::vector<Amplitude> amps_;
};

/// A normalized pure state of a control register (rows) and an auxiliary
/// register (columns). Entry (x, y) is the coefficient of |x>|y>, stored row-major.
class JointState {
   public:
    static JointState from_amplitudes(size_t dim_control, size_t dim_aux, std::vector<Amplitude> amps);

    size_t dim_control() const {
        return dim_control_;
    }
    size_t dim_aux() const {
        return dim_aux_;
    }
    const Amplitude &at(size_t x, size_t y) const {
        return amps_[x * dim_aux_ + y];
    }
    std::span<const Amplitude> row(size_t x) const {
        return std::span<const Amplitude>(amps_).subspan(x * dim_aux_, dim_aux_);
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    double norm_squared() const;

    std::vector<Amplitude> release() && {
        return std::move(amps_);
    }

    bool operator==(const JointState &other) const = default;

   private:
    JointState(size_t dim_control, size_t dim_aux, std::vector<Amplitude> amps)
        : dim_control_(dim_control), dim_aux_(dim_aux), amps_(std::move(amps)) {
    }
    size_t dim_control_;
    size_t dim_aux_;
    std::vector<Amplitude> amps_;
};

struct SchmidtReport {
    size_t rank;
    /// Descending, nonnegative.
    std::vector<double> singular_values;
    bool is_product;
};

QuditState basis_state(size_t dim, size_t x);

/// The equal superposition (1/sqrt(d)) sum_x |x>.
QuditState uniform_superposition(size_t dim);

JointState tensor(const QuditState &control, const QuditState &aux);

/// <a|b>
Amplitude inner_product(const QuditState &a, const QuditState &b);

/// |<a|b>|^2
double fidelity(const QuditState &a, const QuditState &b);

/// Singular values of the amplitude matrix of `state`.
SchmidtReport schmidt_analyze(const JointState &state);

/// Splits a product state into its control and auxiliary factors (each fixed
/// up to a phase). Returns nullopt when the state is entangled.
std::optional<std::pair<QuditState, QuditState>> product_factors(const JointState &state);

/// Multiplies by the phase that makes the first amplitude with magnitude above
/// `tol` real and positive.
std::vector<Amplitude> canonical_global_phase(std::span<const Amplitude> amps, double tol = 1e-9);

/// True when a = e^{i phi} b entrywise within `tol` for some phi.
bool equal_up_to_global_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol);

double max_abs_difference(std::span<const Amplitude> a, std::span<const Amplitude> b);

}  // namespace qudit
