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
 * Versioned JSON oracle files.
 *
 *     {"version": 1, "kind": "boolean" | "multivalued" | "bv",
 *      "d": int, "d_aux": int, "values": [int, ...], "a": int, "n": int,
 *      "seed": uint64}
 *
 * "d_aux" is present only for multivalued files, "values" for boolean and
 * multivalued files, "a" and "n" only for bv files. "seed" is optional and
 * records the generator seed of a generated file. "version" may be omitted and
 * then defaults to 1. Any other key is rejected.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "qudit/oracles.h"

namespace qudit {

using AnyOracle = std::variant<BooleanOracle, MultiOracle, BvOracle>;

struct OracleFile {
    AnyOracle oracle;
    std::optional<uint64_t> seed;

    bool operator==(const OracleFile &other) const = default;
};

enum class OracleFileErrorKind {
    Io,
    Malformed,
    UnsupportedVersion,
    UnknownField,
    MissingField,
    WrongType,
    DimensionNotPowerOfTwo,
    LengthMismatch,
    ValueOutOfRange,
};

std::string_view to_string(OracleFileErrorKind kind);

class OracleFileError : public std::runtime_error {
   public:
    OracleFileError(OracleFileErrorKind kind, const std::string &message);

    OracleFileErrorKind kind() const {
        return kind_;
    }

   private:
    OracleFileErrorKind kind_;
};

inline constexpr int kOracleFileVersion = 1;

OracleFile load_oracle(std::istream &in);
OracleFile load_oracle(const std::filesystem::path &path);
OracleFile parse_oracle(std::string_view text);

/// Serialized form, keys in a fixed order and a trailing newline. Identical
/// inputs produce byte-identical output.
std::string serialize_oracle(const OracleFile &file);

void save_oracle(const OracleFile &file, std::ostream &out);
void save_oracle(const OracleFile &file, const std::filesystem::path &path);

std::string_view kind_name(const AnyOracle &oracle);

}  // namespace qudit
