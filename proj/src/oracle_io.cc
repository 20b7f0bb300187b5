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

#include "qudit/oracle_io.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "qudit/walsh_hadamard.h"

namespace qudit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(OracleFileErrorKind kind, const std::string &message) {
    throw OracleFileError(kind, message);
}

uint64_t read_uint(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        fail(OracleFileErrorKind::MissingField, std::string("missing field \"") + key + "\"");
    }
    if (!it->is_number_integer() || (!it->is_number_unsigned() && it->get<int64_t>() < 0)) {
        fail(OracleFileErrorKind::WrongType, std::string("field \"") + key + "\" must be a nonnegative integer");
    }
    return it->get<uint64_t>();
}

uint64_t read_dim(const json &doc, const char *key) {
    uint64_t d = read_uint(doc, key);
    if (d < 2 || !is_power_of_two(d) || d > (uint64_t{1} << BvOracle::kMaxBits)) {
        fail(
            OracleFileErrorKind::DimensionNotPowerOfTwo,
            std::string("field \"") + key + "\" = " + std::to_string(d) + " is not a power of two in [2, 2^30]");
    }
    return d;
}

std::vector<uint32_t> read_values(const json &doc, uint64_t d, uint64_t bound) {
    auto it = doc.find("values");
    if (it == doc.end()) {
        fail(OracleFileErrorKind::MissingField, "missing field \"values\"");
    }
    if (!it->is_array()) {
        fail(OracleFileErrorKind::WrongType, "field \"values\" must be an array");
    }
    if (it->size() != d) {
        fail(
            OracleFileErrorKind::LengthMismatch,
            "\"values\" has " + std::to_string(it->size()) + " entries but d = " + std::to_string(d));
    }
    std::vector<uint32_t> values;
    values.reserve(d);
    for (size_t x = 0; x < it->size(); x++) {
        const json &v = (*it)[x];
        if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<int64_t>() < 0)) {
            fail(OracleFileErrorKind::WrongType, "values[" + std::to_string(x) + "] must be a nonnegative integer");
        }
        uint64_t value = v.get<uint64_t>();
        if (value >= bound) {
            fail(
                OracleFileErrorKind::ValueOutOfRange,
                "values[" + std::to_string(x) + "] = " + std::to_string(value) + " is outside [0, " +
                    std::to_string(bound) + ")");
        }
        values.push_back((uint32_t)value);
    }
    return values;
}

void check_keys(const json &doc, const std::string &kind, std::initializer_list<const char *> allowed) {
    for (const auto &item : doc.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char *k) { return item.key() == k; })) {
            fail(OracleFileErrorKind::UnknownField, "field \"" + item.key() + "\" is not allowed for kind \"" + kind + "\"");
        }
    }
}

OracleFile from_json(const json &doc) {
    if (!doc.is_object()) {
        fail(OracleFileErrorKind::Malformed, "oracle file must hold a JSON object");
    }
    if (doc.contains("version")) {
        uint64_t version = read_uint(doc, "version");
        if (version != kOracleFileVersion) {
            fail(OracleFileErrorKind::UnsupportedVersion, "unsupported oracle file version " + std::to_string(version));
        }
    }
    auto kind_it = doc.find("kind");
    if (kind_it == doc.end()) {
        fail(OracleFileErrorKind::MissingField, "missing field \"kind\"");
    }
    if (!kind_it->is_string()) {
        fail(OracleFileErrorKind::WrongType, "field \"kind\" must be a string");
    }
    std::string kind = kind_it->get<std::string>();

    OracleFile file{BooleanOracle({0, 0}), std::nullopt};
    if (kind == "boolean") {
        check_keys(doc, kind, {"version", "kind", "d", "values", "seed"});
        uint64_t d = read_dim(doc, "d");
        file.oracle = BooleanOracle(read_values(doc, d, 2));
    } else if (kind == "multivalued") {
        check_keys(doc, kind, {"version", "kind", "d", "d_aux", "values", "seed"});
        uint64_t d = read_dim(doc, "d");
        uint64_t d_aux = read_dim(doc, "d_aux");
        file.oracle = MultiOracle(d_aux, read_values(doc, d, d_aux));
    } else if (kind == "bv") {
        check_keys(doc, kind, {"version", "kind", "d", "n", "a", "seed"});
        uint64_t d = read_dim(doc, "d");
        uint64_t n = read_uint(doc, "n");
        if (n < 1 || n > BvOracle::kMaxBits || (uint64_t{1} << n) != d) {
            fail(OracleFileErrorKind::LengthMismatch, "bv file requires d = 2^n, got d = " + std::to_string(d) + ", n = " + std::to_string(n));
        }
        uint64_t a = read_uint(doc, "a");
        if (a >= d) {
            fail(OracleFileErrorKind::ValueOutOfRange, "bv string a = " + std::to_string(a) + " is outside [0, d)");
        }
        file.oracle = BvOracle((unsigned)n, a);
    } else {
        fail(OracleFileErrorKind::Malformed, "unknown oracle kind \"" + kind + "\"");
    }
    if (doc.contains("seed")) {
        file.seed = read_uint(doc, "seed");
    }
    return file;
}

nlohmann::ordered_json to_json(const OracleFile &file) {
    nlohmann::ordered_json doc;
    doc["version"] = kOracleFileVersion;
    doc["kind"] = std::string(kind_name(file.oracle));
    std::visit(
        [&](const auto &o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, BooleanOracle>) {
                doc["d"] = o.dim();
                doc["values"] = std::vector<uint32_t>(o.values().begin(), o.values().end());
            } else if constexpr (std::is_same_v<T, MultiOracle>) {
                doc["d"] = o.dim_control();
                doc["d_aux"] = o.dim_aux();
                doc["values"] = std::vector<uint32_t>(o.values().begin(), o.values().end());
            } else {
                doc["d"] = o.dim();
                doc["n"] = o.n();
                doc["a"] = o.a();
            }
        },
        file.oracle);
    if (file.seed) {
        doc["seed"] = *file.seed;
    }
    return doc;
}

}  // namespace

std::string_view to_string(OracleFileErrorKind kind) {
    static constexpr std::array<std::string_view, 9> names = {
        "io-error",
        "malformed",
        "unsupported-version",
        "unknown-field",
        "missing-field",
        "wrong-type",
        "dimension-not-power-of-two",
        "length-mismatch",
        "value-out-of-range",
    };
    return names[(size_t)kind];
}

OracleFileError::OracleFileError(OracleFileErrorKind kind, const std::string &message)
    : std::runtime_error(message), kind_(kind) {
}

OracleFile parse_oracle(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        fail(OracleFileErrorKind::Malformed, std::string("invalid JSON: ") + e.what());
    }
    try {
        return from_json(doc);
    } catch (const std::invalid_argument &e) {
        // Constructor-level checks not already covered above.
        fail(OracleFileErrorKind::ValueOutOfRange, e.what());
    }
}

OracleFile load_oracle(std::istream &in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        fail(OracleFileErrorKind::Io, "failed reading oracle stream");
    }
    return parse_oracle(text);
}

OracleFile load_oracle(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(OracleFileErrorKind::Io, "cannot open oracle file " + path.string());
    }
    return load_oracle(in);
}

std::string serialize_oracle(const OracleFile &file) {
    return to_json(file).dump() + "\n";
}

void save_oracle(const OracleFile &file, std::ostream &out) {
    out << serialize_oracle(file);
    if (!out) {
        fail(OracleFileErrorKind::Io, "failed writing oracle stream");
    }
}

void save_oracle(const OracleFile &file, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(OracleFileErrorKind::Io, "cannot create oracle file " + path.string());
    }
    save_oracle(file, out);
}

std::string_view kind_name(const AnyOracle &oracle) {
    switch (oracle.index()) {
        case 0:
            return "boolean";
        case 1:
            return "multivalued";
        default:
            return "bv";
    }
}

}  // namespace qudit
