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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qudit/classical_baseline.h"
#include "qudit/deutsch_circuits.h"
#include "qudit/oracle_io.h"
#include "qudit/oracles.h"
#include "qudit/walsh_hadamard.h"

namespace qudit::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

const std::map<std::string, OracleMode> kModes = {
    {"full-shift", OracleMode::FullShift},
    {"aux-qubit", OracleMode::AuxQubit},
    {"phase-only", OracleMode::PhaseOnly},
};

const std::map<std::string, MeasurementBasis> kBases = {
    {"computational", MeasurementBasis::Computational},
    {"hadamard-filter", MeasurementBasis::HadamardFilter},
};

struct ReportFlags {
    std::string mode;
    std::string basis = "computational";
    bool compare_classical = false;
    uint64_t shots = 0;
    uint64_t seed = 0;
    bool json_only = false;
    bool full_distribution = false;
    std::string output;
};

struct Context {
    std::ostream &out;
    std::ostream &err;
    bool err_is_terminal;
};

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void add_report_flags(CLI::App *cmd, ReportFlags &flags, const std::string &default_mode) {
    flags.mode = default_mode;
    cmd->add_option("--mode", flags.mode, "Oracle realization")
        ->check(CLI::IsMember({"full-shift", "aux-qubit", "phase-only"}))
        ->capture_default_str();
    cmd->add_option("--basis", flags.basis, "Measurement basis of the control register")
        ->check(CLI::IsMember({"computational", "hadamard-filter"}))
        ->capture_default_str();
    cmd->add_flag("--compare-classical", flags.compare_classical, "Also run the deterministic classical algorithm");
    cmd->add_option("--shots", flags.shots, "Sample this many measurement outcomes");
    cmd->add_option("--seed", flags.seed, "Seed for sampling and generated inputs")->capture_default_str();
    cmd->add_flag("--json", flags.json_only, "JSON only; no human-readable summary");
    cmd->add_flag("--full-distribution", flags.full_distribution, "Emit every probability even above d = 64");
    cmd->add_option("--output", flags.output, "Write the report to this path instead of standard output");
}

Json distribution_json(const MeasurementDistribution &dist, bool force_full) {
    Json j;
    size_t best = dist.argmax();
    bool truncated = dist.dim() > kFullDistributionLimit && !force_full;
    j["dim"] = dist.dim();
    j["truncated"] = truncated;
    j["argmax"] = best;
    j["p_argmax"] = dist[best];
    j["p_zero"] = dist[0];
    if (!truncated) {
        j["probabilities"] = std::vector<double>(dist.probabilities().begin(), dist.probabilities().end());
    }
    return j;
}

Json shots_json(const MeasurementDistribution &dist, const ReportFlags &flags) {
    Json j;
    j["shots"] = flags.shots;
    j["seed"] = flags.seed;
    Json histogram = Json::array();
    for (const auto &[outcome, count] : sample(dist, flags.seed, flags.shots)) {
        histogram.push_back(Json::array({outcome, count}));
    }
    j["histogram"] = histogram;
    return j;
}

Json oracle_json(const OracleFile &file) {
    Json j;
    j["kind"] = std::string(kind_name(file.oracle));
    std::visit(
        [&](const auto &o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, MultiOracle>) {
                j["d"] = o.dim_control();
                j["d_aux"] = o.dim_aux();
            } else if constexpr (std::is_same_v<T, BvOracle>) {
                j["d"] = o.dim();
                j["n"] = o.n();
            } else {
                j["d"] = o.dim();
            }
        },
        file.oracle);
    j["seed"] = file.seed ? Json(*file.seed) : Json(nullptr);
    return j;
}

void emit(const Context &ctx, const Json &report, const std::string &output) {
    std::string text = report.dump(2) + "\n";
    if (output.empty()) {
        ctx.out << text;
        return;
    }
    std::ofstream f(output, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text)) {
        throw OutputError("cannot write report to " + output);
    }
}

void summarize(const Context &ctx, const ReportFlags &flags, const std::string &line) {
    if (ctx.err_is_terminal && !flags.json_only) {
        ctx.err << line << "\n";
    }
}

int exit_code_for(const Verdict &verdict) {
    if (auto c = std::get_if<OracleClass>(&verdict)) {
        return *c == OracleClass::Constant ? kExitConstant : *c == OracleClass::Balanced ? kExitBalanced : kExitPromiseViolated;
    }
    if (auto p = std::get_if<ParityClass>(&verdict)) {
        return *p == ParityClass::ConstantParity   ? kExitConstant
               : *p == ParityClass::BalancedParity ? kExitBalanced
                                                   : kExitPromiseViolated;
    }
    return kExitConstant;
}

bool is_neither(const Verdict &verdict) {
    return exit_code_for(verdict) == kExitPromiseViolated && !std::holds_alternative<BvRecovery>(verdict);
}

std::string format_prob(double p) {
    std::ostringstream s;
    s << std::setprecision(6) << p;
    return s.str();
}

// ---------------------------------------------------------------------------
// classify / parity

int cmd_classify(const Context &ctx, const std::string &command, const std::string &path, const ReportFlags &flags) {
    OracleFile file = load_oracle(std::filesystem::path(path));
    OracleMode mode = kModes.at(flags.mode);
    MeasurementBasis basis = kBases.at(flags.basis);

    auto start = Clock::now();
    std::optional<ClassificationResult> result;
    std::optional<QueryTranscript> classical;
    std::visit(
        [&](const auto &o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, MultiOracle>) {
                result = run_parity(o, mode, basis);
                if (flags.compare_classical) {
                    classical = classical_classify(o);
                }
            } else {
                BooleanOracle table = [&] {
                    if constexpr (std::is_same_v<T, BvOracle>) {
                        return bv_expand(o);
                    } else {
                        return o;
                    }
                }();
                result = run_deutsch(table, mode, basis);
                if (flags.compare_classical) {
                    classical = classical_classify(table);
                }
            }
        },
        file.oracle);
    double wall_ms = elapsed_ms(start);

    Json report;
    report["command"] = command;
    report["oracle"] = oracle_json(file);
    report["mode"] = flags.mode;
    report["basis"] = flags.basis;
    report["verdict"] = verdict_name(result->verdict);
    report["promise_violated"] = is_neither(result->verdict);
    if (basis == MeasurementBasis::HadamardFilter) {
        // Click of the projector onto |0_H>: 1 for constant, 0 for balanced.
        int code = exit_code_for(result->verdict);
        report["filter_result"] = code == kExitConstant ? Json(1) : code == kExitBalanced ? Json(0) : Json(nullptr);
    }
    report["quantum_queries"] = result->quantum_queries;
    if (classical) {
        report["classical_queries"] = classical->query_count();
        report["classical_verdict"] = std::holds_alternative<MultiOracle>(file.oracle)
                                          ? std::string(to_string(as_parity_class(classical->verdict)))
                                          : std::string(to_string(classical->verdict));
    }
    report["distribution"] = distribution_json(result->distribution, flags.full_distribution);
    if (flags.shots > 0) {
        report["sampling"] = shots_json(result->distribution, flags);
    }
    report["wall_time_ms"] = wall_ms;
    emit(ctx, report, flags.output);

    summarize(
        ctx, flags,
        command + ": " + verdict_name(result->verdict) + " (P(0) = " + format_prob(result->distribution[0]) + ", " +
            std::to_string(result->quantum_queries) + " quantum query" +
            (classical ? ", " + std::to_string(classical->query_count()) + " classical" : std::string()) + ")");
    return exit_code_for(result->verdict);
}

// ---------------------------------------------------------------------------
// bv

struct BvFlags {
    std::optional<unsigned> n;
    std::optional<uint64_t> a;
    std::string oracle_path;
};

int cmd_bv(const Context &ctx, const BvFlags &bv, const ReportFlags &flags) {
    OracleFile file{BvOracle(1, 0), std::nullopt};
    if (!bv.oracle_path.empty()) {
        if (bv.n || bv.a) {
            throw UsageError("bv: give either an oracle file or -n/-a, not both");
        }
        file = load_oracle(std::filesystem::path(bv.oracle_path));
        if (!std::holds_alternative<BvOracle>(file.oracle)) {
            throw OracleFileError(OracleFileErrorKind::Malformed, "bv: oracle file must have kind \"bv\"");
        }
    } else {
        if (!bv.n) {
            throw UsageError("bv: -n is required without an oracle file");
        }
        if (*bv.n < 1 || *bv.n > 20) {
            throw UsageError("bv: n = " + std::to_string(*bv.n) + " outside [1, 20]");
        }
        uint64_t a;
        if (bv.a) {
            a = *bv.a;
        } else {
            Rng rng(flags.seed);
            a = uniform_below(rng, uint64_t{1} << *bv.n);
            file.seed = flags.seed;
        }
        if (a >> *bv.n) {
            throw UsageError("bv: a = " + std::to_string(a) + " does not fit in " + std::to_string(*bv.n) + " bits");
        }
        file.oracle = BvOracle(*bv.n, a);
    }
    const auto &oracle = std::get<BvOracle>(file.oracle);
    if (oracle.n() > 20) {
        throw UsageError("bv: n = " + std::to_string(oracle.n()) + " outside [1, 20]");
    }

    auto start = Clock::now();
    auto result = run_bernstein_vazirani(oracle, kModes.at(flags.mode), kBases.at(flags.basis));
    double wall_ms = elapsed_ms(start);
    const auto &recovery = std::get<BvRecovery>(result.verdict);
    bool success = recovery.a == oracle.a() && recovery.probability > 1 - kNormTolerance;

    Json report;
    report["command"] = "bv";
    report["oracle"] = oracle_json(file);
    report["mode"] = flags.mode;
    report["basis"] = flags.basis;
    report["verdict"] = verdict_name(result.verdict);
    report["recovered"] = recovery.a;
    report["probability"] = recovery.probability;
    report["expected"] = oracle.a();
    report["success"] = success;
    report["quantum_queries"] = result.quantum_queries;
    if (flags.compare_classical) {
        auto classical = classical_bv(oracle);
        report["classical_queries"] = classical.queries;
        report["classical_recovered"] = classical.a;
    }
    report["distribution"] = distribution_json(result.distribution, flags.full_distribution);
    if (flags.shots > 0) {
        report["sampling"] = shots_json(result.distribution, flags);
    }
    report["wall_time_ms"] = wall_ms;
    emit(ctx, report, flags.output);

    summarize(
        ctx, flags,
        "bv: recovered a = " + std::to_string(recovery.a) + " with probability " + format_prob(recovery.probability) +
            (success ? "" : " (MISMATCH)"));
    return success ? 0 : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// gen

struct GenFlags {
    size_t d = 0;
    std::optional<size_t> d_aux;
    std::string cls;
    uint64_t seed = 0;
    std::string output;
};

int cmd_gen(const Context &ctx, const GenFlags &gen) {
    if (gen.d < 2 || !is_power_of_two(gen.d)) {
        throw UsageError("gen: d = " + std::to_string(gen.d) + " is not a power of two >= 2");
    }
    OracleFile file{BooleanOracle({0, 0}), gen.seed};
    if (gen.cls == "constant" || gen.cls == "balanced") {
        if (gen.d_aux) {
            throw UsageError("gen: --d-aux only applies to parity classes");
        }
        if (gen.d > (size_t{1} << 24)) {
            throw UsageError("gen: d too large for a table file");
        }
        file.oracle = random_oracle(gen.d, gen.cls == "constant" ? OracleClass::Constant : OracleClass::Balanced, gen.seed);
    } else {
        size_t d_aux = gen.d_aux.value_or(gen.d);
        if (d_aux < 2 || !is_power_of_two(d_aux)) {
            throw UsageError("gen: d_aux = " + std::to_string(d_aux) + " is not a power of two >= 2");
        }
        file.oracle = random_multi_oracle(
            gen.d, d_aux, gen.cls == "constant-parity" ? ParityClass::ConstantParity : ParityClass::BalancedParity,
            gen.seed);
    }
    if (gen.output.empty()) {
        save_oracle(file, ctx.out);
    } else {
        try {
            save_oracle(file, std::filesystem::path(gen.output));
        } catch (const OracleFileError &e) {
            throw OutputError(e.what());
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepFlags {
    std::string suite;
    std::optional<size_t> d;
    std::optional<unsigned> n;
    std::optional<size_t> budget;
    std::optional<std::string> mode;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    bool json_only = false;
    std::string output;
};

struct CaseOutcome {
    bool passed = false;
    std::string failure;
};

// Runs fn(0..count-1) on a pool of workers; results keep case order.
std::vector<CaseOutcome> run_cases(size_t count, unsigned workers, const std::function<CaseOutcome(size_t)> &fn) {
    std::vector<CaseOutcome> results(count);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k = next++; k < count; k = next++) {
            try {
                results[k] = fn(k);
            } catch (const std::exception &e) {
                results[k] = {false, std::string("exception: ") + e.what()};
            }
        }
    };
    unsigned pool_size = (unsigned)std::min<size_t>(std::max(1u, workers), std::max<size_t>(count, 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < pool_size; t++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    return results;
}

std::string table_string(std::span<const uint32_t> values) {
    std::string s = "(";
    for (size_t k = 0; k < values.size(); k++) {
        s += (k ? "," : "") + std::to_string(values[k]);
    }
    return s + ")";
}

Json summarize_cases(Json report, const std::vector<CaseOutcome> &results) {
    size_t passed = (size_t)std::count_if(results.begin(), results.end(), [](const CaseOutcome &c) { return c.passed; });
    Json failures = Json::array();
    for (const auto &c : results) {
        if (!c.passed && failures.size() < 20) {
            failures.push_back(c.failure);
        }
    }
    report["cases"] = results.size();
    report["passed"] = passed;
    report["failed"] = results.size() - passed;
    report["failures"] = failures;
    return report;
}

std::vector<OracleMode> sweep_modes(const SweepFlags &sweep, std::vector<OracleMode> fallback) {
    if (sweep.mode) {
        return {kModes.at(*sweep.mode)};
    }
    return fallback;
}

Json json_modes(const std::vector<OracleMode> &modes) {
    Json j = Json::array();
    for (auto m : modes) {
        j.push_back(std::string(to_string(m)));
    }
    return j;
}

Json witness_json(const AdversaryReport &r) {
    if (!r.witness) {
        return nullptr;
    }
    Json path = Json::array();
    for (const auto &q : r.witness_path) {
        path.push_back(Json::array({q.argument, q.value}));
    }
    Json j;
    j["constant"] = std::vector<uint32_t>(r.witness->first.values().begin(), r.witness->first.values().end());
    j["balanced"] = std::vector<uint32_t>(r.witness->second.values().begin(), r.witness->second.values().end());
    j["path"] = path;
    return j;
}

int cmd_sweep(const Context &ctx, const SweepFlags &sweep) {
    auto start = Clock::now();
    Json report;
    report["command"] = "sweep";
    report["suite"] = sweep.suite;
    std::vector<CaseOutcome> results;

    if (sweep.suite == "deutsch-exhaustive") {
        size_t d = sweep.d.value_or(sweep.n ? size_t{1} << *sweep.n : 8);
        if (d < 2 || !is_power_of_two(d) || d > kMaxEnumerationDim) {
            throw UsageError("sweep deutsch-exhaustive: d must be a power of two in [2, 16]");
        }
        auto modes = sweep_modes(sweep, {OracleMode::FullShift, OracleMode::AuxQubit, OracleMode::PhaseOnly});
        auto oracles = enumerate_constant(d);
        auto balanced = enumerate_balanced(d);
        oracles.insert(oracles.end(), balanced.begin(), balanced.end());
        results = run_cases(oracles.size(), sweep.workers, [&](size_t k) -> CaseOutcome {
            const auto &o = oracles[k];
            OracleClass expected = classify_boolean(o);
            for (auto mode : modes) {
                auto r = run_deutsch(o, mode);
                double p0 = r.distribution[0];
                bool certain = p0 > 1 - kNormTolerance || p0 < kNormTolerance;
                if (std::get<OracleClass>(r.verdict) != expected || r.quantum_queries != 1 || !certain) {
                    return {false, table_string(o.values()) + " in " + std::string(to_string(mode)) + ": got " +
                                       verdict_name(r.verdict) + ", P(0) = " + format_prob(p0)};
                }
            }
            return {true, {}};
        });
        report["d"] = d;
        report["modes"] = json_modes(modes);
        report["constant_cases"] = 2;
        report["balanced_cases"] = balanced.size();
    } else if (sweep.suite == "bv-exhaustive") {
        unsigned n = sweep.n ? *sweep.n : sweep.d ? checked_log2(*sweep.d) : 10;
        if (n < 1 || n > 16) {
            throw UsageError("sweep bv-exhaustive: n must be in [1, 16]");
        }
        auto modes = sweep_modes(sweep, {OracleMode::AuxQubit});
        results = run_cases(size_t{1} << n, sweep.workers, [&](size_t a) -> CaseOutcome {
            BvOracle oracle(n, a);
            for (auto mode : modes) {
                auto r = run_bernstein_vazirani(oracle, mode);
                const auto &rec = std::get<BvRecovery>(r.verdict);
                if (rec.a != a || rec.probability <= 1 - kNormTolerance || r.quantum_queries != 1) {
                    return {false, "a = " + std::to_string(a) + " in " + std::string(to_string(mode)) + ": recovered " +
                                       std::to_string(rec.a)};
                }
            }
            auto classical = classical_bv(oracle);
            if (classical.a != a || classical.queries != n) {
                return {false, "a = " + std::to_string(a) + ": classical recovery failed"};
            }
            return {true, {}};
        });
        report["n"] = n;
        report["d"] = size_t{1} << n;
        report["modes"] = json_modes(modes);
    } else {
        size_t d = sweep.d.value_or(sweep.n ? size_t{1} << *sweep.n : 4);
        if (d != 2 && d != 4 && d != 8) {
            throw UsageError("sweep adversary: d must be 2, 4 or 8");
        }
        report["d"] = d;
        if (sweep.budget) {
            auto r = adversary_search(d, *sweep.budget);
            report["budget"] = *sweep.budget;
            report["distinguishable"] = r.distinguishable;
            report["status"] = r.distinguishable ? "distinguishable" : "not distinguishable";
            report["witness"] = witness_json(r);
            report["nodes_explored"] = r.nodes_explored;
            results.push_back({true, {}});
        } else {
            // Certify the bound: impossible at d/2, possible at d/2 + 1.
            auto below = adversary_search(d, d / 2);
            auto at = adversary_search(d, d / 2 + 1);
            results.push_back({!below.distinguishable, "budget d/2 was distinguishable"});
            results.push_back({at.distinguishable, "budget d/2 + 1 was not distinguishable"});
            report["bound"] = d / 2 + 1;
            report["witness"] = witness_json(below);
        }
    }

    report = summarize_cases(report, results);
    report["wall_time_ms"] = elapsed_ms(start);
    emit(ctx, report, sweep.output);
    if (ctx.err_is_terminal && !sweep.json_only) {
        ctx.err << "sweep " << sweep.suite << ": " << report["passed"].get<size_t>() << "/" << results.size()
                << " passed\n";
    }
    return report["failed"].get<size_t>() == 0 ? 0 : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// bench

struct BenchFlags {
    unsigned n_min = 10;
    unsigned n_max = 20;
    unsigned repetitions = 3;
    std::string format = "json";
    std::string mode = "phase-only";
    std::string output;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

int cmd_bench(const Context &ctx, const BenchFlags &bench) {
    if (bench.n_min < 1 || bench.n_min > bench.n_max || bench.n_max > 22) {
        throw UsageError("bench: need 1 <= n-min <= n-max <= 22");
    }
    if (bench.repetitions < 1) {
        throw UsageError("bench: repetitions must be at least 1");
    }
    OracleMode mode = kModes.at(bench.mode);
    bool single_sample = bench.repetitions == 1;

    Json rows = Json::array();
    std::ostringstream csv;
    csv << "n,d,pipeline_ms,transform_ms,repetitions,single_sample,recovered\n";
    for (unsigned n = bench.n_min; n <= bench.n_max; n++) {
        size_t d = size_t{1} << n;
        uint64_t a = 0x2AAAAAull & (d - 1);
        std::vector<double> pipeline_ms;
        std::vector<double> transform_ms;
        bool recovered = true;
        for (unsigned r = 0; r < bench.repetitions; r++) {
            auto t0 = Clock::now();
            auto result = run_bernstein_vazirani(BvOracle(n, a), mode);
            pipeline_ms.push_back(elapsed_ms(t0));
            recovered = recovered && std::get<BvRecovery>(result.verdict).a == a;

            std::vector<Amplitude> buffer(d, Amplitude(1.0 / std::sqrt((double)d)));
            auto t1 = Clock::now();
            hadamard_in_place(buffer);
            transform_ms.push_back(elapsed_ms(t1));
        }
        Json row;
        row["n"] = n;
        row["d"] = d;
        row["pipeline_ms"] = median(pipeline_ms);
        row["transform_ms"] = median(transform_ms);
        row["recovered"] = recovered;
        rows.push_back(row);
        csv << n << "," << d << "," << row["pipeline_ms"].get<double>() << "," << row["transform_ms"].get<double>()
            << "," << bench.repetitions << "," << (single_sample ? "true" : "false") << ","
            << (recovered ? "true" : "false") << "\n";
    }

    if (bench.format == "csv") {
        if (bench.output.empty()) {
            ctx.out << csv.str();
        } else {
            std::ofstream f(bench.output, std::ios::binary | std::ios::trunc);
            if (!f || !(f << csv.str())) {
                throw OutputError("cannot write report to " + bench.output);
            }
        }
    } else {
        Json report;
        report["command"] = "bench";
        report["mode"] = bench.mode;
        report["repetitions"] = bench.repetitions;
        report["single_sample"] = single_sample;
        report["statistic"] = single_sample ? "single" : "median";
        report["rows"] = rows;
        emit(ctx, report, bench.output);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// selftest

int cmd_selftest(const Context &ctx, bool json_only) {
    std::vector<std::pair<std::string, std::function<bool()>>> checks = {
        {"hadamard-h4-sign-pattern",
         [] {
             const int expected[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
             auto h = hadamard_matrix(4);
             for (size_t r = 0; r < 4; r++) {
                 for (size_t c = 0; c < 4; c++) {
                     if (std::abs(h(r, c) * 2 - expected[r][c]) > 1e-12) {
                         return false;
                     }
                 }
             }
             return true;
         }},
        {"deutsch-exhaustive-d8",
         [] {
             auto oracles = enumerate_balanced(8);
             auto constants = enumerate_constant(8);
             oracles.insert(oracles.end(), constants.begin(), constants.end());
             for (const auto &o : oracles) {
                 for (auto mode : {OracleMode::FullShift, OracleMode::AuxQubit, OracleMode::PhaseOnly}) {
                     auto r = run_deutsch(o, mode);
                     if (std::get<OracleClass>(r.verdict) != classify_boolean(o) || r.quantum_queries != 1) {
                         return false;
                     }
                 }
             }
             return true;
         }},
        {"bernstein-vazirani-n6",
         [] {
             for (uint64_t a = 0; a < 64; a++) {
                 auto r = run_bernstein_vazirani(BvOracle(6, a), OracleMode::FullShift);
                 if (std::get<BvRecovery>(r.verdict).a != a) {
                     return false;
                 }
             }
             return true;
         }},
        {"parity-examples-d8",
         [] {
             MultiOracle constant(8, {4, 2, 0, 0, 0, 6, 2, 4});
             MultiOracle balanced(8, {4, 2, 0, 0, 1, 1, 7, 5});
             return std::get<ParityClass>(run_parity(constant, OracleMode::FullShift).verdict) ==
                        ParityClass::ConstantParity &&
                    std::get<ParityClass>(run_parity(balanced, OracleMode::FullShift).verdict) ==
                        ParityClass::BalancedParity;
         }},
        {"classical-bound-d4",
         [] { return !adversary_search(4, 2).distinguishable && adversary_search(4, 3).distinguishable; }},
    };

    Json list = Json::array();
    size_t passed = 0;
    for (const auto &[name, check] : checks) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception &) {
            ok = false;
        }
        passed += ok ? 1 : 0;
        Json item;
        item["name"] = name;
        item["passed"] = ok;
        list.push_back(item);
        if (ctx.err_is_terminal && !json_only) {
            ctx.err << (ok ? "PASS " : "FAIL ") << name << "\n";
        }
    }
    Json report;
    report["command"] = "selftest";
    report["checks"] = list;
    report["passed"] = passed;
    report["total"] = checks.size();
    emit(ctx, report, "");
    return passed == checks.size() ? 0 : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, bool err_is_terminal) {
    Context ctx{out, err, err_is_terminal};

    CLI::App app{"Two-qudit Deutsch, Bernstein-Vazirani and multivalued parity simulator"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    ReportFlags classify_flags;
    std::string classify_path;
    auto *classify = app.add_subcommand("classify", "Classify a Boolean constant/balanced oracle file");
    classify->add_option("oracle-file", classify_path, "Oracle file (JSON)")->required();
    add_report_flags(classify, classify_flags, "full-shift");

    ReportFlags parity_flags;
    std::string parity_path;
    auto *parity = app.add_subcommand("parity", "Classify a multivalued oracle file by parity (alias of classify)");
    parity->add_option("oracle-file", parity_path, "Oracle file (JSON)")->required();
    add_report_flags(parity, parity_flags, "full-shift");

    ReportFlags bv_report;
    BvFlags bv_flags;
    unsigned bv_n = 0;
    uint64_t bv_a = 0;
    auto *bv = app.add_subcommand("bv", "Recover a Bernstein-Vazirani hidden string");
    auto *bv_n_opt = bv->add_option("-n", bv_n, "Bit count, 1..20");
    auto *bv_a_opt = bv->add_option("-a", bv_a, "Hidden string as an integer (random from --seed when omitted)");
    bv->add_option("oracle-file", bv_flags.oracle_path, "Oracle file of kind \"bv\"");
    add_report_flags(bv, bv_report, "aux-qubit");

    GenFlags gen_flags;
    size_t gen_d_aux = 0;
    auto *gen = app.add_subcommand("gen", "Generate a random oracle file");
    gen->add_option("-d", gen_flags.d, "Domain size (power of two)")->required();
    auto *gen_d_aux_opt = gen->add_option("--d-aux", gen_d_aux, "Range size for parity classes (default d)");
    gen->add_option("--class", gen_flags.cls, "Oracle class")
        ->required()
        ->check(CLI::IsMember({"constant", "balanced", "constant-parity", "balanced-parity"}));
    gen->add_option("--seed", gen_flags.seed, "Generator seed")->capture_default_str();
    gen->add_option("--output", gen_flags.output, "Output path (default standard output)");

    SweepFlags sweep_flags;
    size_t sweep_d = 0;
    unsigned sweep_n = 0;
    size_t sweep_budget = 0;
    std::string sweep_mode;
    auto *sweep = app.add_subcommand("sweep", "Exhaustive verification sweeps");
    sweep->add_option("--suite", sweep_flags.suite, "Sweep to run")
        ->required()
        ->check(CLI::IsMember({"deutsch-exhaustive", "bv-exhaustive", "adversary"}));
    auto *sweep_d_opt = sweep->add_option("-d", sweep_d, "Dimension");
    auto *sweep_n_opt = sweep->add_option("-n", sweep_n, "Bit count (d = 2^n)");
    auto *sweep_budget_opt = sweep->add_option("--budget", sweep_budget, "Classical query budget (adversary suite)");
    auto *sweep_mode_opt = sweep->add_option("--mode", sweep_mode, "Restrict to one oracle realization")
                               ->check(CLI::IsMember({"full-shift", "aux-qubit", "phase-only"}));
    sweep->add_option("--workers", sweep_flags.workers, "Worker threads (default: available processors)");
    sweep->add_flag("--json", sweep_flags.json_only, "JSON only; no human-readable summary");
    sweep->add_option("--output", sweep_flags.output, "Write the report to this path");

    BenchFlags bench_flags;
    auto *bench = app.add_subcommand("bench", "Time the Bernstein-Vazirani pipeline over a range of n");
    bench->add_option("--n-min", bench_flags.n_min, "Smallest n")->capture_default_str();
    bench->add_option("--n-max", bench_flags.n_max, "Largest n (<= 22)")->capture_default_str();
    bench->add_option("--repetitions", bench_flags.repetitions, "Samples per n (median reported)")->capture_default_str();
    bench->add_option("--format", bench_flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    bench->add_option("--mode", bench_flags.mode, "Oracle realization")
        ->check(CLI::IsMember({"full-shift", "aux-qubit", "phase-only"}))
        ->capture_default_str();
    bench->add_option("--output", bench_flags.output, "Write the table to this path");

    bool selftest_json = false;
    auto *selftest = app.add_subcommand("selftest", "Run a quick built-in verification");
    selftest->add_flag("--json", selftest_json, "JSON only");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            return cmd_classify(ctx, "classify", classify_path, classify_flags);
        }
        if (parity->parsed()) {
            return cmd_classify(ctx, "parity", parity_path, parity_flags);
        }
        if (bv->parsed()) {
            if (*bv_n_opt) {
                bv_flags.n = bv_n;
            }
            if (*bv_a_opt) {
                bv_flags.a = bv_a;
            }
            return cmd_bv(ctx, bv_flags, bv_report);
        }
        if (gen->parsed()) {
            if (*gen_d_aux_opt) {
                gen_flags.d_aux = gen_d_aux;
            }
            return cmd_gen(ctx, gen_flags);
        }
        if (sweep->parsed()) {
            if (*sweep_d_opt) {
                sweep_flags.d = sweep_d;
            }
            if (*sweep_n_opt) {
                sweep_flags.n = sweep_n;
            }
            if (*sweep_budget_opt) {
                sweep_flags.budget = sweep_budget;
            }
            if (*sweep_mode_opt) {
                sweep_flags.mode = sweep_mode;
            }
            return cmd_sweep(ctx, sweep_flags);
        }
        if (bench->parsed()) {
            return cmd_bench(ctx, bench_flags);
        }
        if (selftest->parsed()) {
            return cmd_selftest(ctx, selftest_json);
        }
    } catch (const OracleFileError &e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == OracleFileErrorKind::Io ? kExitNoInput : kExitDataError;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitCantCreate;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::bad_alloc &) {
        err << "error: out of memory\n";
        return kExitSoftware;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitSoftware;
    }
    return kExitUsage;
}

}  // namespace qudit::cli
