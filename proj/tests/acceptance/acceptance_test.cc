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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <new>
#include <random>
#include <string>
#include <vector>

#include "../test_util.h"
#include "qudit/classical_baseline.h"
#include "qudit/deutsch_circuits.h"
#include "qudit/walsh_hadamard.h"

// Live-byte accounting for the memory criterion. Every allocation carries a
// small header holding its size.
namespace {

std::atomic<size_t> g_live{0};
std::atomic<size_t> g_peak{0};

struct alignas(alignof(std::max_align_t)) AllocHeader {
    size_t size;
};

void *tracked_alloc(size_t n) {
    void *raw = std::malloc(n + sizeof(AllocHeader));
    if (!raw) {
        throw std::bad_alloc();
    }
    static_cast<AllocHeader *>(raw)->size = n;
    size_t live = g_live.fetch_add(n) + n;
    size_t peak = g_peak.load();
    while (live > peak && !g_peak.compare_exchange_weak(peak, live)) {
    }
    return static_cast<char *>(raw) + sizeof(AllocHeader);
}

void tracked_free(void *p) noexcept {
    if (!p) {
        return;
    }
    auto *h = reinterpret_cast<AllocHeader *>(static_cast<char *>(p) - sizeof(AllocHeader));
    g_live.fetch_sub(h->size);
    std::free(h);
}

}  // namespace

void *operator new(size_t n) {
    return tracked_alloc(n);
}
void *operator new[](size_t n) {
    return tracked_alloc(n);
}
void *operator new(size_t n, const std::nothrow_t &) noexcept {
    try {
        return tracked_alloc(n);
    } catch (...) {
        return nullptr;
    }
}
void *operator new[](size_t n, const std::nothrow_t &) noexcept {
    try {
        return tracked_alloc(n);
    } catch (...) {
        return nullptr;
    }
}
void operator delete(void *p) noexcept {
    tracked_free(p);
}
void operator delete[](void *p) noexcept {
    tracked_free(p);
}
void operator delete(void *p, size_t) noexcept {
    tracked_free(p);
}
void operator delete[](void *p, size_t) noexcept {
    tracked_free(p);
}
void operator delete(void *p, const std::nothrow_t &) noexcept {
    tracked_free(p);
}
void operator delete[](void *p, const std::nothrow_t &) noexcept {
    tracked_free(p);
}

namespace {

using namespace qudit;
namespace t = qudit::testing;

constexpr OracleMode kAllModes[] = {OracleMode::FullShift, OracleMode::AuxQubit, OracleMode::PhaseOnly};

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::vector<BooleanOracle> promise_tables(size_t d) {
    auto all = enumerate_constant(d);
    auto bal = enumerate_balanced(d);
    all.insert(all.end(), bal.begin(), bal.end());
    return all;
}

Check hadamard_fixtures() {
    const int h4[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    const int h8[8][8] = {
        {1, 1, 1, 1, 1, 1, 1, 1},     {1, -1, 1, -1, 1, -1, 1, -1}, {1, 1, -1, -1, 1, 1, -1, -1},
        {1, -1, -1, 1, 1, -1, -1, 1}, {1, 1, 1, 1, -1, -1, -1, -1}, {1, -1, 1, -1, -1, 1, -1, 1},
        {1, 1, -1, -1, -1, -1, 1, 1}, {1, -1, -1, 1, -1, 1, 1, -1},
    };
    Check c;
    double worst = 0;
    auto m4 = hadamard_matrix(4);
    auto m8 = hadamard_matrix(8);
    for (size_t r = 0; r < 8; r++) {
        for (size_t col = 0; col < 8; col++) {
            if (r < 4 && col < 4) {
                worst = std::max(worst, std::abs(m4(r, col) * 2 - h4[r][col]));
            }
            worst = std::max(worst, std::abs(m8(r, col) * std::sqrt(8.0) - h8[r][col]));
        }
    }
    c.require(worst < 1e-12, "entry error " + fmt(worst));
    c.detail = c.ok ? "max entry error " + fmt(worst) : c.detail;
    return c;
}

Check involution() {
    Check c;
    std::mt19937_64 rng(20260);
    double worst = 0;
    for (size_t d = 2; d <= (size_t{1} << 16); d *= 2) {
        for (int k = 0; k < 100; k++) {
            auto v = t::random_amplitudes(d, rng);
            auto w = v;
            hadamard_in_place(w);
            hadamard_in_place(w);
            worst = std::max(worst, max_abs_difference(v, w));
        }
    }
    c.require(worst < 1e-10, "max error " + fmt(worst));
    c.detail = c.ok ? "1600 states, max error " + fmt(worst) : c.detail;
    return c;
}

Check deutsch_exhaustive() {
    Check c;
    size_t cases = 0;
    for (size_t d : {4u, 8u}) {
        auto tables = promise_tables(d);
        c.require(tables.size() == (d == 4 ? 8u : 72u), "wrong table count");
        for (const auto &o : tables) {
            for (auto mode : kAllModes) {
                auto r = run_deutsch(o, mode);
                double p0 = r.distribution[0];
                c.require(std::get<OracleClass>(r.verdict) == classify_boolean(o), "wrong verdict");
                c.require(r.quantum_queries == 1, "query count != 1");
                c.require(p0 > 1 - 1e-9 || p0 < 1e-9, "P(0) = " + fmt(p0));
                cases++;
            }
        }
    }
    c.detail = c.ok ? std::to_string(cases) + " runs" : c.detail;
    return c;
}

double second_singular(const JointState &j) {
    auto s = schmidt_analyze(j).singular_values;
    return s.size() > 1 ? s[1] : 0.0;
}

Check no_entanglement() {
    Check c;
    double worst = 0;
    for (const auto &o : enumerate_all_boolean(4)) {
        CountedOracle counted(o);
        auto j = post_oracle_joint_state(counted, 4);
        worst = std::max(worst, second_singular(j));
        c.require(schmidt_analyze(j).rank == 1, "rank > 1");
    }
    for (auto values : {std::vector<uint32_t>{4, 2, 0, 0, 0, 6, 2, 4}, std::vector<uint32_t>{4, 2, 0, 0, 1, 1, 7, 5}}) {
        CountedOracle counted(MultiOracle(8, values));
        auto j = post_oracle_joint_state(counted, 8);
        worst = std::max(worst, second_singular(j));
        c.require(schmidt_analyze(j).rank == 1, "rank > 1");
    }
    c.require(worst < 1e-9, "second singular value " + fmt(worst));
    c.detail = c.ok ? "18 states, max second singular value " + fmt(worst) : c.detail;
    return c;
}

Check phase_kickback() {
    Check c;
    double worst = 0;
    size_t checks = 0;
    for (size_t d : {2u, 4u, 8u}) {
        auto aux = apply_hadamard(basis_state(d, 1));
        for (const auto &o : enumerate_all_boolean(d)) {
            for (size_t x = 0; x < d; x++) {
                auto after = apply_controlled_shift(tensor(basis_state(d, x), aux), o);
                double sign = o(x) ? -1.0 : 1.0;
                std::vector<Amplitude> expected(after.amplitudes().size());
                for (size_t y = 0; y < d; y++) {
                    expected[x * d + y] = sign * aux[y];
                }
                worst = std::max(worst, max_abs_difference(after.amplitudes(), expected));
                checks++;
            }
        }
    }
    c.require(worst < 1e-12, "max error " + fmt(worst));
    c.detail = c.ok ? std::to_string(checks) + " (table, x) pairs, max error " + fmt(worst) : c.detail;
    return c;
}

// (|0> + (-1)^{a_i}|1>)/sqrt(2) over all bits, most significant first.
std::vector<Amplitude> qubit_product(unsigned n, uint64_t a) {
    double s = 1 / std::sqrt(2.0);
    t::Dense v = {{1.0}};
    for (int i = (int)n - 1; i >= 0; i--) {
        t::Dense q = {{s}, {((a >> i) & 1) ? -s : s}};
        v = t::kron(v, q);
    }
    std::vector<Amplitude> out;
    for (const auto &row : v) {
        out.push_back(row[0]);
    }
    return out;
}

Check bernstein_vazirani() {
    Check c;
    size_t runs = 0;
    for (unsigned n = 1; n <= 10; n++) {
        for (uint64_t a = 0; a < (uint64_t{1} << n); a++) {
            auto r = run_bernstein_vazirani(BvOracle(n, a), OracleMode::AuxQubit);
            auto rec = std::get<BvRecovery>(r.verdict);
            c.require(rec.a == a && rec.probability > 1 - 1e-9, "n=" + std::to_string(n) + " a=" + std::to_string(a));
            c.require(r.quantum_queries == 1, "query count != 1");
            runs++;
        }
    }
    double worst = 0;
    for (unsigned n = 1; n <= 8; n++) {
        for (uint64_t a = 0; a < (uint64_t{1} << n); a++) {
            auto table = bv_expand(BvOracle(n, a));
            CountedOracle counted(table);
            auto chi = post_oracle_phase_state(counted);
            auto expected = qubit_product(n, a);
            worst = std::max(worst, max_abs_difference(chi.amplitudes(), expected));
            if (n <= 5) {
                // Full joint state: the control factor is the same product up to phase.
                CountedOracle again(table);
                auto factors = product_factors(post_oracle_joint_state(again, table.dim()));
                c.require(factors.has_value(), "joint state entangled");
                if (factors) {
                    c.require(equal_up_to_global_phase(factors->first.amplitudes(), expected, 1e-12),
                              "joint control factor mismatch");
                }
            }
        }
    }
    c.require(worst < 1e-12, "factorization error " + fmt(worst));
    c.detail = c.ok ? std::to_string(runs) + " recoveries, factorization error " + fmt(worst) : c.detail;
    return c;
}

Check multivalued_parity() {
    Check c;
    auto cp = run_parity(MultiOracle(8, {4, 2, 0, 0, 0, 6, 2, 4}), OracleMode::FullShift);
    auto bp = run_parity(MultiOracle(8, {4, 2, 0, 0, 1, 1, 7, 5}), OracleMode::FullShift);
    c.require(std::get<ParityClass>(cp.verdict) == ParityClass::ConstantParity, "first example");
    c.require(std::get<ParityClass>(bp.verdict) == ParityClass::BalancedParity, "second example");
    // Rectangular registers: 4-dimensional control, 8-dimensional target.
    std::vector<uint32_t> even = {0, 2, 4, 6};
    std::vector<uint32_t> mixed = {1, 2, 3, 4};
    auto r = run_parity(MultiOracle(8, even), OracleMode::FullShift);
    c.require(std::get<ParityClass>(r.verdict) == ParityClass::ConstantParity, "4x8 constant parity");
    c.require(t::max_diff(r.distribution.probabilities(), t::reference_distribution(even, 8)) < 1e-12,
              "4x8 dense mismatch");
    auto m = run_parity(MultiOracle(8, mixed), OracleMode::FullShift);
    c.require(std::get<ParityClass>(m.verdict) == ParityClass::BalancedParity, "4x8 balanced parity");
    c.require(t::max_diff(m.distribution.probabilities(), t::reference_distribution(mixed, 8)) < 1e-12,
              "4x8 dense mismatch");
    c.detail = c.ok ? "both d=8 examples and 4x8 registers" : c.detail;
    return c;
}

Check classical_bounds() {
    Check c;
    std::string summary;
    for (size_t d : {2u, 4u, 8u}) {
        size_t worst = 0;
        for (const auto &o : promise_tables(d)) {
            auto tr = classical_classify(o);
            c.require(tr.verdict == classify_boolean(o), "classical verdict wrong");
            worst = std::max(worst, tr.query_count());
        }
        c.require(worst == d / 2 + 1, "worst case " + std::to_string(worst) + " at d=" + std::to_string(d));
        c.require(!adversary_search(d, d / 2).distinguishable, "budget d/2 sufficed at d=" + std::to_string(d));
        c.require(adversary_search(d, d / 2 + 1).distinguishable, "budget d/2+1 failed at d=" + std::to_string(d));
        summary += (summary.empty() ? "" : ", ") + std::string("d=") + std::to_string(d) + ":" + std::to_string(worst);
    }
    for (unsigned n = 1; n <= 10; n++) {
        for (uint64_t a = 0; a < (uint64_t{1} << n); a++) {
            auto r = classical_bv(BvOracle(n, a));
            c.require(r.a == a && r.queries == n, "classical bv n=" + std::to_string(n));
        }
    }
    c.detail = c.ok ? "worst cases " + summary + "; adversary bound tight; bv uses n queries" : c.detail;
    return c;
}

Check scale() {
    Check c;
    const unsigned n = 20;
    const size_t d = size_t{1} << n;
    const uint64_t a = 0xB5A3C;
    size_t baseline = g_live.load();
    g_peak.store(baseline);
    auto start = std::chrono::steady_clock::now();
    auto r = run_bernstein_vazirani(BvOracle(n, a), OracleMode::PhaseOnly);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    size_t peak = g_peak.load() - baseline;
    auto rec = std::get<BvRecovery>(r.verdict);
    double arrays = (double)peak / (double)(d * sizeof(double));
    c.require(rec.a == a && rec.probability > 1 - 1e-9, "wrong recovery");
    c.require(seconds < 5.0, "took " + fmt(seconds) + " s");
    c.require(arrays <= 4.0, "peak " + fmt(arrays) + " double arrays");
    c.detail = c.ok ? "d=2^20 in " + fmt(seconds) + " s, peak " + fmt(arrays) + " double arrays of length d" : c.detail;
    return c;
}

Check mode_equivalence() {
    Check c;
    double worst = 0;
    size_t tables = 0;
    for (size_t d : {2u, 4u, 8u}) {
        for (const auto &o : enumerate_all_boolean(d)) {
            for (auto basis : {MeasurementBasis::Computational, MeasurementBasis::HadamardFilter}) {
                auto full = run_deutsch(o, OracleMode::FullShift, basis);
                for (auto mode : {OracleMode::AuxQubit, OracleMode::PhaseOnly}) {
                    auto other = run_deutsch(o, mode, basis);
                    worst = std::max(
                        worst, t::max_diff(full.distribution.probabilities(), other.distribution.probabilities()));
                }
            }
            tables++;
        }
    }
    c.require(worst < 1e-12, "max difference " + fmt(worst));
    c.detail = c.ok ? std::to_string(tables) + " tables, max difference " + fmt(worst) : c.detail;
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"hadamard fixtures", hadamard_fixtures},
        {"hadamard involution", involution},
        {"deutsch exhaustive", deutsch_exhaustive},
        {"no entanglement", no_entanglement},
        {"phase kickback", phase_kickback},
        {"bernstein-vazirani exhaustive", bernstein_vazirani},
        {"multivalued parity", multivalued_parity},
        {"classical bounds", classical_bounds},
        {"scale and memory", scale},
        {"mode equivalence", mode_equivalence},
    };
    int failures = 0;
    for (size_t k = 0; k < criteria.size(); k++) {
        Check result;
        try {
            result = criteria[k].second();
        } catch (const std::exception &e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        failures += result.ok ? 0 : 1;
        std::printf(
            "%s criterion %zu (%s): %s\n", result.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
            result.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
