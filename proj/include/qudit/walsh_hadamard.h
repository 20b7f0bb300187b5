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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qudit/qudit_state.h"

namespace qudit {

inline constexpr bool is_power_of_two(uint64_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

/// log2 of `dim`. Throws std::invalid_argument unless dim = 2^n with n >= 1.
unsigned checked_log2(uint64_t dim);

/// Parity of popcount(x AND x_prime), i.e. sum_i x_i x'_i mod 2 with x = sum_i x_i 2^i.
/// Both arguments must be below 2^n.
unsigned bitwise_inner(uint64_t x, uint64_t x_prime, unsigned n);

/// Dense H_d with entries (-1)^(x.x') / sqrt(d). Meant for verification at small d;
/// the circuits always use the fast transform.
class HadamardMatrix {
   public:
    explicit HadamardMatrix(size_t dim);

    size_t dim() const {
        return dim_;
    }
    double operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const double> entries() const {
        return entries_;
    }

    std::vector<Amplitude> apply(std::span<const Amplitude> v) const;

   private:
    size_t dim_;
    std::vector<double> entries_;
};

HadamardMatrix hadamard_matrix(size_t dim);

/// Unnormalized in-place Walsh-Hadamard butterfly (natural/Sylvester ordering).
/// O(d log d) time, no auxiliary storage. `data.size()` must be a power of two.
void fwht_in_place(std::span<Amplitude> data);

/// Like fwht_in_place but scaled by 1/sqrt(d), i.e. applies H_d exactly.
void hadamard_in_place(std::span<Amplitude> data);

/// Applies H_d along the row index of a row-major rows x cols matrix: every
/// column is transformed independently. `rows` must be a power of two.
void hadamard_rows_in_place(std::span<Amplitude> data, size_t rows, size_t cols);

QuditState apply_hadamard(QuditState state);

/// H on the control register of a joint state.
JointState apply_hadamard_control(JointState state);

/// H on the auxiliary register of a joint state.
JointState apply_hadamard_aux(JointState state);

}  // namespace qudit
