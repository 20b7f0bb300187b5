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

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "qudit/walsh_hadamard.h"

namespace qudit {

std::string_view to_string(OracleClass c) {
    switch (c) {
        case OracleClass::Constant:
            return "constant";
        case OracleClass::Balanced:
            return "balanced";
        case OracleClass::Neither:
            break;
    }
    return "neither";
}

std::string_view to_string(ParityClass c) {
    switch (c) {
        case ParityClass::ConstantParity:
            return "constant-parity";
        case ParityClass::BalancedParity:
            return "balanced-parity";
        case ParityClass::Neither:
            break;
    }
    return "neither";
}

BooleanOracle::BooleanOracle(std::vector<uint32_t> values) : values_(std::move(values)) {
    checked_log2(values_.size());
    for (size_t x = 0; x < values_.size(); x++) {
        if (values_[x] > 1) {
            throw std::invalid_argument(
                "BooleanOracle: f(" + std::to_string(x) + ") = " + std::to_string(values_[x]) + " is not a bit");
        }
    }
}

BvOracle::BvOracle(unsigned n, uint64_t a) : n_(n), a_(a) {
    if (n < 1 || n > kMaxBits) {
        throw std::invalid_argument("BvOracle: bit count " + std::to_string(n) + " outside [1, 30]");
    }
    if (a >> n != 0) {
        throw std::invalid_argument("BvOracle: a = " + std::to_string(a) + " does not fit in " + std::to_string(n) + " bits");
    }
}

uint32_t BvOracle::operator()(uint64_t x) const {
    return bitwise_inner(a_, x, n_);
}

MultiOracle::MultiOracle(size_t dim_aux, std::vector<uint32_t> values) : dim_aux_(dim_aux), values_(std::move(values)) {
    checked_log2(values_.size());
    checked_log2(dim_aux_);
    for (size_t x = 0; x < values_.size(); x++) {
        if (values_[x] >= dim_aux_) {
            throw std::invalid_argument(
                "MultiOracle: f(" + std::to_string(x) + ") = " + std::to_string(values_[x]) +
                " is outside the auxiliary range [0, " + std::to_string(dim_aux_) + ")");
        }
    }
}

OracleClass classify_boolean(const BooleanOracle &oracle) {
    auto v = oracle.values();
    if (std::all_of(v.begin(), v.end(), [&](uint32_t b) { return b == v[0]; })) {
        return OracleClass::Constant;
    }
    size_t ones = (size_t)std::count(v.begin(), v.end(), 1u);
    return ones * 2 == v.size() ? OracleClass::Balanced : OracleClass::Neither;
}

ParityClass classify_parity(const MultiOracle &oracle) {
    auto v = oracle.values();
    size_t odd = (size_t)std::count_if(v.begin(), v.end(), [](uint32_t f) { return (f & 1u) != 0; });
    if (odd == 0 || odd == v.size()) {
        return ParityClass::ConstantParity;
    }
    return odd * 2 == v.size() ? ParityClass::BalancedParity : ParityClass::Neither;
}

BooleanOracle bv_expand(const BvOracle &oracle) {
    std::vector<uint32_t> values(oracle.dim());
    for (size_t x = 0; x < values.size(); x++) {
        values[x] = oracle(x);
    }
    return BooleanOracle(std::move(values));
}

uint64_t uniform_below(Rng &rng, uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: bound must be positive");
    }
    // Rejection sampling on the largest multiple of `bound` representable.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
        uint64_t r = rng();
        if (r < limit) {
            return r % bound;
        }
    }
}

double uniform_unit(Rng &rng) {
    return (double)(rng() >> 11) * 0x1.0p-53;
}

namespace {

// Fisher-Yates with the portable bounded sampler.
template <typename T>
void shuffle(std::vector<T> &items, Rng &rng) {
    for (size_t k = items.size(); k > 1; k--) {
        std::swap(items[k - 1], items[uniform_below(rng, k)]);
    }
}

}  // namespace

BooleanOracle random_oracle(size_t dim, OracleClass cls, uint64_t seed) {
    checked_log2(dim);
    Rng rng(seed);
    std::vector<uint32_t> values(dim);
    switch (cls) {
        case OracleClass::Constant:
            std::fill(values.begin(), values.end(), (uint32_t)uniform_below(rng, 2));
            break;
        case OracleClass::Balanced:
            std::fill(values.begin() + (std::ptrdiff_t)(dim / 2), values.end(), 1u);
            shuffle(values, rng);
            break;
        case OracleClass::Neither:
            throw std::invalid_argument("random_oracle: class must be constant or balanced");
    }
    return BooleanOracle(std::move(values));
}

MultiOracle random_multi_oracle(size_t dim_control, size_t dim_aux, ParityClass cls, uint64_t seed) {
    checked_log2(dim_control);
    checked_log2(dim_aux);
    Rng rng(seed);
    std::vector<uint32_t> parities(dim_control);
    switch (cls) {
        case ParityClass::ConstantParity:
            std::fill(parities.begin(), parities.end(), (uint32_t)uniform_below(rng, 2));
            break;
        case ParityClass::BalancedParity:
            std::fill(parities.begin() + (std::ptrdiff_t)(dim_control / 2), parities.end(), 1u);
            shuffle(parities, rng);
            break;
        case ParityClass::Neither:
            throw std::invalid_argument("random_multi_oracle: class must be constant-parity or balanced-parity");
    }
    // dim_aux is even, so each parity has dim_aux / 2 representatives.
    std::vector<uint32_t> values(dim_control);
    for (size_t x = 0; x < dim_control; x++) {
        values[x] = (uint32_t)(2 * uniform_below(rng, dim_aux / 2) + parities[x]);
    }
    return MultiOracle(dim_aux, std::move(values));
}

namespace {

void check_enumerable(size_t dim, const char *what) {
    checked_log2(dim);
    if (dim > kMaxEnumerationDim) {
        throw std::invalid_argument(
            std::string(what) + ": dimension " + std::to_string(dim) + " exceeds enumeration limit " +
            std::to_string(kMaxEnumerationDim));
    }
}

BooleanOracle from_mask(size_t dim, uint64_t mask) {
    std::vector<uint32_t> values(dim);
    for (size_t x = 0; x < dim; x++) {
        values[x] = (uint32_t)((mask >> x) & 1);
    }
    return BooleanOracle(std::move(values));
}

}  // namespace

std::vector<BooleanOracle> enumerate_balanced(size_t dim) {
    check_enumerable(dim, "enumerate_balanced");
    std::vector<BooleanOracle> out;
    // Gosper's hack: successive masks with exactly dim/2 bits set, in increasing order.
    uint64_t mask = (uint64_t{1} << (dim / 2)) - 1;
    uint64_t end = uint64_t{1} << dim;
    while (mask < end) {
        out.push_back(from_mask(dim, mask));
        uint64_t low = mask & -mask;
        uint64_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    return out;
}

std::vector<BooleanOracle> enumerate_constant(size_t dim) {
    checked_log2(dim);
    return {BooleanOracle(std::vector<uint32_t>(dim, 0)), BooleanOracle(std::vector<uint32_t>(dim, 1))};
}

std::vector<BooleanOracle> enumerate_all_boolean(size_t dim) {
    check_enumerable(dim, "enumerate_all_boolean");
    std::vector<BooleanOracle> out;
    out.reserve(size_t{1} << dim);
    for (uint64_t mask = 0; mask < (uint64_t{1} << dim); mask++) {
        out.push_back(from_mask(dim, mask));
    }
    return out;
}

CountedOracle::CountedOracle(std::vector<uint32_t> table, size_t range) : table_(std::move(table)), range_(range) {
    for (uint32_t v : table_) {
        if (v >= range_) {
            throw std::invalid_argument("CountedOracle: table value out of range");
        }
    }
}

CountedOracle::CountedOracle(const BooleanOracle &oracle)
    : CountedOracle(std::vector<uint32_t>(oracle.values().begin(), oracle.values().end()), 2) {
}

CountedOracle::CountedOracle(const MultiOracle &oracle)
    : CountedOracle(std::vector<uint32_t>(oracle.values().begin(), oracle.values().end()), oracle.dim_aux()) {
}

uint32_t CountedOracle::evaluate(size_t x) {
    if (x >= table_.size()) {
        throw std::out_of_range("CountedOracle::evaluate: argument " + std::to_string(x) + " out of range");
    }
    invocations_++;
    return table_[x];
}

std::span<const uint32_t> CountedOracle::coherent_query() {
    invocations_++;
    return table_;
}

}  // namespace qudit
