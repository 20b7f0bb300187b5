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

#include "qudit/classical_baseline.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "qudit/walsh_hadamard.h"

namespace qudit {

QueryTranscript classical_classify(CountedOracle &oracle) {
    size_t d = oracle.dim();
    checked_log2(d);
    QueryTranscript transcript{{}, OracleClass::Constant};
    uint32_t first = 0;
    for (size_t x = 0; x <= d / 2; x++) {
        uint32_t value = oracle.evaluate(x);
        transcript.queries.push_back({x, value});
        if (x == 0) {
            first = value & 1u;
        } else if ((value & 1u) != first) {
            transcript.verdict = OracleClass::Balanced;
            return transcript;
        }
    }
    // d/2 + 1 equal answers rule out every balanced table.
    return transcript;
}

QueryTranscript classical_classify(const BooleanOracle &oracle) {
    CountedOracle counted(oracle);
    return classical_classify(counted);
}

QueryTranscript classical_classify(const MultiOracle &oracle) {
    CountedOracle counted(oracle);
    return classical_classify(counted);
}

ParityClass as_parity_class(OracleClass c) {
    switch (c) {
        case OracleClass::Constant:
            return ParityClass::ConstantParity;
        case OracleClass::Balanced:
            return ParityClass::BalancedParity;
        case OracleClass::Neither:
            break;
    }
    return ParityClass::Neither;
}

namespace {

struct Candidate {
    uint32_t mask;  // bit x holds f(x)
    bool constant;
};

class AdversarySearch {
   public:
    AdversarySearch(size_t dim, size_t budget) : dim_(dim), budget_(budget) {
        uint32_t all = (uint32_t{1} << dim) - 1;
        for (uint32_t mask = 0; mask <= all; mask++) {
            size_t ones = (size_t)std::popcount(mask);
            if (mask == 0 || mask == all) {
                candidates_.push_back({mask, true});
            } else if (ones * 2 == dim) {
                candidates_.push_back({mask, false});
            }
        }
    }

    bool root() {
        return solve(0, 0, budget_);
    }

    AdversaryReport report() {
        AdversaryReport out{dim_, budget_, root(), std::nullopt, {}, 0};
        if (!out.distinguishable) {
            extract_witness(out);
        }
        out.nodes_explored = memo_.size();
        return out;
    }

   private:
    // Whether the candidates consistent with (queried, answers) are all of one class.
    bool settled(uint32_t queried, uint32_t answers) const {
        bool any_constant = false;
        bool any_balanced = false;
        for (const auto &c : candidates_) {
            if ((c.mask & queried) == answers) {
                (c.constant ? any_constant : any_balanced) = true;
            }
        }
        return !(any_constant && any_balanced);
    }

    bool solve(uint32_t queried, uint32_t answers, size_t remaining) {
        uint64_t key = ((uint64_t)queried << 40) | ((uint64_t)answers << 8) | remaining;
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        bool result = settled(queried, answers);
        if (!result && remaining > 0) {
            size_t last_arg = queried == 0 ? 1 : dim_;
            for (size_t arg = 0; arg < last_arg && !result; arg++) {
                uint32_t bit = uint32_t{1} << arg;
                if (queried & bit) {
                    continue;
                }
                result = solve(queried | bit, answers, remaining - 1) && solve(queried | bit, answers | bit, remaining - 1);
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    // Follows the canonical strategy (lowest unqueried argument) along a branch
    // the tree cannot resolve, down to a leaf where both classes survive.
    void extract_witness(AdversaryReport &out) {
        uint32_t queried = 0;
        uint32_t answers = 0;
        size_t remaining = budget_;
        while (remaining > 0) {
            size_t arg = (size_t)std::countr_one(queried);
            uint32_t bit = uint32_t{1} << arg;
            uint32_t value = solve(queried | bit, answers, remaining - 1) ? 1 : 0;
            queried |= bit;
            if (value) {
                answers |= bit;
            }
            out.witness_path.push_back({arg, value});
            remaining--;
        }
        std::optional<uint32_t> constant;
        std::optional<uint32_t> balanced;
        for (const auto &c : candidates_) {
            if ((c.mask & queried) == answers) {
                auto &slot = c.constant ? constant : balanced;
                if (!slot) {
                    slot = c.mask;
                }
            }
        }
        if (!constant || !balanced) {
            throw std::logic_error("adversary_search: failed branch lost one class");
        }
        out.witness = std::make_pair(to_oracle(*constant), to_oracle(*balanced));
    }

    BooleanOracle to_oracle(uint32_t mask) const {
        std::vector<uint32_t> values(dim_);
        for (size_t x = 0; x < dim_; x++) {
            values[x] = (mask >> x) & 1u;
        }
        return BooleanOracle(std::move(values));
    }

    size_t dim_;
    size_t budget_;
    std::vector<Candidate> candidates_;
    std::unordered_map<uint64_t, bool> memo_;
};

}  // namespace

AdversaryReport adversary_search(size_t dim, size_t budget) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw std::invalid_argument(
            "adversary_search: dimension " + std::to_string(dim) + " outside the enumerable set {2, 4, 8}");
    }
    // Deeper trees than d queries add nothing; search with the cap, report the request.
    auto report = AdversarySearch(dim, std::min(budget, dim)).report();
    report.budget = budget;
    return report;
}

ClassicalBvResult classical_bv(const BvOracle &oracle) {
    std::vector<uint32_t> table(oracle.dim());
    for (size_t x = 0; x < table.size(); x++) {
        table[x] = oracle(x);
    }
    CountedOracle counted(std::move(table), 2);
    uint64_t a = 0;
    for (unsigned i = 0; i < oracle.n(); i++) {
        if (counted.evaluate(size_t{1} << i)) {
            a |= uint64_t{1} << i;
        }
    }
    return {a, counted.invocations()};
}

}  // namespace qudit
