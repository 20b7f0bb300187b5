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
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace qudit {

enum class OracleClass { Constant, Balanced, Neither };
enum class ParityClass { ConstantParity, BalancedParity, Neither };

std::string_view to_string(OracleClass c);
std::string_view to_string(ParityClass c);

/// Total function {0..d-1} -> {0,1} with d a power of two.
class BooleanOracle {
   public:
    explicit BooleanOracle(std::vector<uint32_t> values);

    size_t dim() const {
        return values_.size();
    }
    uint32_t operator()(size_t x) const {
        return values_[x];
    }
    std::span<const uint32_t> values() const {
        return values_;
    }

    bool operator==(const BooleanOracle &other) const = default;

   private:
    std::vector<uint32_t> values_;
};

/// f_a(x) = a.x over n-bit strings.
class BvOracle {
   public:
    static constexpr unsigned kMaxBits = 30;

    BvOracle(unsigned n, uint64_t a);

    unsigned n() const {
        return n_;
    }
    uint64_t a() const {
        return a_;
    }
    size_t dim() const {
        return size_t{1} << n_;
    }
    uint32_t operator()(uint64_t x) const;

    bool operator==(const BvOracle &other) const = default;

   private:
    unsigned n_;
    uint64_t a_;
};

/// Total function {0..2^n-1} -> {0..2^m-1}.
class MultiOracle {
   public:
    MultiOracle(size_t dim_aux, std::vector<uint32_t> values);

    size_t dim_control() const {
        return values_.size();
    }
    size_t dim_aux() const {
        return dim_aux_;
    }
    uint32_t operator()(size_t x) const {
        return values_[x];
    }
    std::span<const uint32_t> values() const {
        return values_;
    }

    bool operator==(const MultiOracle &other) const = default;

   private:
    size_t dim_aux_;
    std::vector<uint32_t> values_;
};

OracleClass classify_boolean(const BooleanOracle &oracle);
ParityClass classify_parity(const MultiOracle &oracle);
BooleanOracle bv_expand(const BvOracle &oracle);

/// Uniform over the oracles of class `cls` (Constant or Balanced), reproducible per seed.
BooleanOracle random_oracle(size_t dim, OracleClass cls, uint64_t seed);

/// Uniform over tables of the requested parity class, reproducible per seed.
MultiOracle random_multi_oracle(size_t dim_control, size_t dim_aux, ParityClass cls, uint64_t seed);

inline constexpr size_t kMaxEnumerationDim = 16;

/// Every balanced table of size `dim` exactly once, ordered by the integer
/// sum_x f(x) 2^x. Requires dim <= kMaxEnumerationDim.
std::vector<BooleanOracle> enumerate_balanced(size_t dim);

/// The two constant tables, all-zeros first.
std::vector<BooleanOracle> enumerate_constant(size_t dim);

/// All 2^dim Boolean tables. Requires dim <= kMaxEnumerationDim.
std::vector<BooleanOracle> enumerate_all_boolean(size_t dim);

/// Generator used for every seeded operation in the library. mt19937_64 output
/// is fixed by the standard; the helpers below avoid the implementation-defined
/// std distributions so results match across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
uint64_t uniform_below(Rng &rng, uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng &rng);

/// Oracle access that counts invocations. Classical evaluation and a coherent
/// (superposed) query both register as one invocation, so classical and quantum
/// query counts come from the same counter.
class CountedOracle {
   public:
    CountedOracle(std::vector<uint32_t> table, size_t range);
    explicit CountedOracle(const BooleanOracle &oracle);
    explicit CountedOracle(const MultiOracle &oracle);

    size_t dim() const {
        return table_.size();
    }
    /// Every value is below range().
    size_t range() const {
        return range_;
    }

    /// One classical call f(x).
    uint32_t evaluate(size_t x);

    /// One coherent call: the whole table is consumed by a single application
    /// of the oracle unitary.
    std::span<const uint32_t> coherent_query();

    size_t invocations() const {
        return invocations_;
    }

   private:
    std::vector<uint32_t> table_;
    size_t range_;
    size_t invocations_ = 0;
};

}  // namespace qudit
