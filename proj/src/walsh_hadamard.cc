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

#include "qudit/walsh_hadamard.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qudit {

unsigned checked_log2(uint64_t dim) {
    if (dim < 2 || !is_power_of_two(dim)) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two >= 2");
    }
    return (unsigned)std::countr_zero(dim);
}

unsigned bitwise_inner(uint64_t x, uint64_t x_prime, unsigned n) {
    if (n < 64 && (x >> n != 0 || x_prime >> n != 0)) {
        throw std::out_of_range("bitwise_inner: arguments must be below 2^" + std::to_string(n));
    }
    return (unsigned)std::popcount(x & x_prime) & 1u;
}

HadamardMatrix::HadamardMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
    unsigned n = checked_log2(dim);
    double scale = 1.0 / std::sqrt((double)dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            entries_[r * dim + c] = bitwise_inner(r, c, n) ? -scale : scale;
        }
    }
}

std::vector<Amplitude> HadamardMatrix::apply(std::span<const Amplitude> v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("HadamardMatrix::apply: vector length mismatch");
    }
    std::vector<Amplitude> out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        Amplitude acc = 0;
        for (size_t c = 0; c < dim_; c++) {
            acc += entries_[r * dim_ + c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

HadamardMatrix hadamard_matrix(size_t dim) {
    return HadamardMatrix(dim);
}

void fwht_in_place(std::span<Amplitude> data) {
    size_t len = data.size();
    checked_log2(len);
    for (size_t h = 1; h < len; h <<= 1) {
        for (size_t i = 0; i < len; i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                Amplitude a = data[j];
                Amplitude b = data[j + h];
                data[j] = a + b;
                data[j + h] = a - b;
            }
        }
    }
}

void hadamard_in_place(std::span<Amplitude> data) {
    fwht_in_place(data);
    double scale = 1.0 / std::sqrt((double)data.size());
    for (auto &v : data) {
        v *= scale;
    }
}

void hadamard_rows_in_place(std::span<Amplitude> data, size_t rows, size_t cols) {
    checked_log2(rows);
    if (data.size() != rows * cols) {
        throw std::invalid_argument("hadamard_rows_in_place: buffer is not rows x cols");
    }
    // Same butterfly as fwht_in_place, with whole rows as the butterfly elements.
    for (size_t h = 1; h < rows; h <<= 1) {
        for (size_t i = 0; i < rows; i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                Amplitude *top = data.data() + j * cols;
                Amplitude *bottom = data.data() + (j + h) * cols;
                for (size_t k = 0; k < cols; k++) {
                    Amplitude a = top[k];
                    Amplitude b = bottom[k];
                    top[k] = a + b;
                    bottom[k] = a - b;
                }
            }
        }
    }
    double scale = 1.0 / std::sqrt((double)rows);
    for (auto &v : data) {
        v *= scale;
    }
}

QuditState apply_hadamard(QuditState state) {
    checked_log2(state.dim());
    auto amps = std::move(state).release();
    hadamard_in_place(amps);
    return QuditState::from_amplitudes(std::move(amps));
}

JointState apply_hadamard_control(JointState state) {
    size_t rows = state.dim_control();
    size_t cols = state.dim_aux();
    auto amps = std::move(state).release();
    hadamard_rows_in_place(amps, rows, cols);
    return JointState::from_amplitudes(rows, cols, std::move(amps));
}

JointState apply_hadamard_aux(JointState state) {
    size_t rows = state.dim_control();
    size_t cols = state.dim_aux();
    checked_log2(cols);
    auto amps = std::move(state).release();
    for (size_t x = 0; x < rows; x++) {
        hadamard_in_place(std::span<Amplitude>(amps).subspan(x * cols, cols));
    }
    return JointState::from_amplitudes(rows, cols, std::move(amps));
}

}  // namespace qudit
