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
#include <optional>
#include <utility>
#include <vector>

#include "qudit/oracles.h"

namespace qudit {

struct QueryRecord {
    size_t argument;
    uint32_t value;
    bool operator==(const QueryRecord &other) const = default;
};

struct QueryTranscript {
    std::vector<QueryRecord> queries;
    OracleClass verdict;

    size_t query_count() const {
        return queries.size();
    }
};

/// Queries 0, 1, 2, ... and stops at the first value that differs from f(0)
/// (Balanced) or after d/2 + 1 equal values (Constant). Only the parity of each
/// answer is used, so a multivalued oracle is classified by parity.
/// Correct under the promise; a table outside the promise gets one of the two
/// verdicts without warning.
QueryTranscript classical_classify(CountedOracle &oracle);
QueryTranscript classical_classify(const BooleanOracle &oracle);
QueryTranscript classical_classify(const MultiOracle &oracle);

ParityClass as_parity_class(OracleClass c);

struct AdversaryReport {
    size_t dim;
    size_t budget;
    bool distinguishable;
    /// (constant, balanced) pair consistent with every answer on `witness_path`.
    /// Present iff !distinguishable.
    std::optional<std::pair<BooleanOracle, BooleanOracle>> witness;
    /// The queried branch that leaves both witnesses consistent.
    std::vector<QueryRecord> witness_path;
    /// Distinct (queried points, answers, remaining budget) nodes evaluated.
    uint64_t nodes_explored;
};

inline constexpr size_t kMaxAdversaryDim = 8;

/// Decides whether some deterministic adaptive decision tree of depth <= budget
/// tells every constant oracle apart from every balanced one, by exhaustive
/// AND-OR search over query trees. The first query is fixed to argument 0,
/// which loses nothing since both classes are closed under argument permutation.
/// Requires dim in {2, 4, 8}.
AdversaryReport adversary_search(size_t dim, size_t budget);

struct ClassicalBvResult {
    uint64_t a;
    size_t queries;
};

/// Reads bit i of the hidden string as f(2^i).
ClassicalBvResult classical_bv(const BvOracle &oracle);

}  // namespace qudit
