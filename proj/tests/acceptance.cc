// Copyright 2026 The wirecut Authors
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

// Acceptance gate: runs every primary criterion and prints one line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.h"
#include "oracle.h"
#include "wirecut/bench.h"
#include "wirecut/clifford.h"
#include "wirecut/engine.h"
#include "wirecut/grouping.h"

using namespace wirecut;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *format, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c, d);
    return buf;
}

std::vector<int> all_qubits(int n) {
    std::vector<int> out(n);
    for (int q = 0; q < n; q++) out[q] = q;
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome oracle_exactness() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260101);
    double worst[3] = {0, 0, 0};
    const MethodPolicy policies[3] = {MethodPolicy::CutQC, MethodPolicy::Grouped, MethodPolicy::Auto};
    std::set<size_t> cut_counts;
    for (int trial = 0; trial < 50; trial++) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const int depth = 6 + static_cast<int>(rng() % 7);
        auto bc = fixtures::random_cut_circuit(n, depth, rng);
        cut_counts.insert(bc.cuts.size());
        auto expected = oracle::probabilities(oracle::circuit_state(bc.circuit), n, all_qubits(n));
        for (int m = 0; m < 3; m++) {
            PipelineOptions options;
            options.policy = policies[m];
            auto r = run_pipeline(bc.circuit, bc.cuts, options);
            worst[m] = std::max(worst[m], oracle::tv(r.reconstructed, expected));
        }
    }
    double elapsed = seconds_since(start);
    Outcome o;
    o.pass = worst[0] < 1e-9 && worst[1] < 1e-9 && worst[2] < 1e-9 && elapsed < 300;
    o.detail = fmt("50 circuits, max TV cutqc=%.2e grouped=%.2e auto=%.2e, %.1f s", worst[0], worst[1],
                   worst[2], elapsed);
    o.detail += ", cut counts seen:";
    for (auto k : cut_counts) o.detail += " " + std::to_string(k);
    return o;
}

Outcome mub_partition_check() {
    Outcome o;
    for (int n = 1; n <= 4; n++) {
        auto groups = mub_partition(n);
        bool sizes = groups.size() == (size_t{1} << n) + 1;
        for (const auto &g : groups) sizes = sizes && g.members.size() == (size_t{1} << n) - 1;
        auto report = validate_partition(groups);
        if (!sizes || !report.ok()) {
            o.pass = false;
            o.detail += "n=" + std::to_string(n) + " invalid; ";
        }
    }
    std::set<std::set<std::string>> got;
    for (const auto &g : mub_partition(2)) {
        std::set<std::string> s;
        for (const auto &p : g.members) s.insert(p.str());
        got.insert(s);
    }
    for (std::set<std::string> listed : {std::set<std::string>{"XI", "IX", "XX"}, {"ZI", "IZ", "ZZ"},
                                         {"YI", "IY", "YY"}, {"XY", "YZ", "ZX"}}) {
        if (!got.count(listed)) {
            o.pass = false;
            o.detail += "missing listed 2-qubit group; ";
        }
    }
    if (o.pass) o.detail = "n=1..4 give 3/5/9/17 groups of 1/3/7/15, all predicates hold; 2-qubit listed groups present";
    return o;
}

Outcome diagonalizer_check() {
    Outcome o;
    size_t checked = 0, dense = 0;
    for (int n = 1; n <= 4; n++) {
        for (const auto &d : cached_diagonalizers(n)) {
            if (static_cast<int>(d.transform.size()) > 2 * n * n + 4 * n) {
                o.pass = false;
                o.detail += "gate bound exceeded at n=" + std::to_string(n) + "; ";
            }
            oracle::Mat u;
            if (n <= 3) u = oracle::circuit_unitary(d.transform);
            for (size_t k = 0; k < d.group.members.size(); k++) {
                PauliString expected(n);
                for (int q = 0; q < n; q++) {
                    if ((d.images[k].z_mask >> (n - 1 - q)) & 1) expected.set_letter(q, PauliLetter::Z);
                }
                expected.set_phase_exponent(d.images[k].sign == 1 ? 0 : 2);
                const auto &member = d.group.members[k];
                if (conjugate_pauli(d.transform, member) != expected) o.pass = false;
                checked++;
                if (n <= 3) {
                    oracle::Mat lhs = u * oracle::pauli_matrix(member) * u.adjoint();
                    if (!(lhs - oracle::pauli_matrix(expected)).isZero(1e-10)) o.pass = false;
                    dense++;
                }
            }
        }
    }
    Circuit t = parse_circuit("qubits 2\ncz 0 1\nsdg 0\nh 1\nh 0");
    bool reference = conjugate_pauli(t, PauliString::parse("YZ")) == PauliString::parse("ZI") &&
                     conjugate_pauli(t, PauliString::parse("ZX")) == PauliString::parse("IZ") &&
                     conjugate_pauli(t, PauliString::parse("XY")) == PauliString::parse("-ZZ");
    o.pass = o.pass && reference;
    o.detail += std::to_string(checked) + " member images (" + std::to_string(dense) +
                " against dense matrices), reference transform " + (reference ? "+ZI +IZ -ZZ" : "MISMATCH");
    return o;
}

Outcome ancilla_identity() {
    std::mt19937_64 rng(4242);
    double worst = 0, worst_library = 0;
    for (int trial = 0; trial < 20; trial++) {
        const int width = 2 + trial % 2;
        Circuit u = oracle::random_circuit(width, 15, rng);
        Circuit bell_circuit(width + 1);
        bell_circuit.append(GateKind::H, 0);
        bell_circuit.append(GateKind::CX, 0, width);
        bell_circuit.append_mapped(u, all_qubits(width));
        auto phi = oracle::circuit_state(bell_circuit);

        // Same unitary as a fragment whose qubit 0 is a quantum input.
        Fragment f;
        for (int q = 0; q < width; q++) {
            FragmentQubit fq;
            fq.wire = q;
            if (q == 0) {
                fq.input = Role::Quantum;
                fq.input_cut = 0;
            }
            f.qubits.push_back(fq);
        }
        f.circuit = u;
        f.index_roles();
        auto grouped = estimate_fragment_tensor(f, Method::Grouped, Budget::Exact());

        for (int l = 0; l < 4; l++) {
            auto m = static_cast<PauliLetter>(l);
            for (uint64_t x = 0; x < (uint64_t{1} << width); x++) {
                double init = 0;
                for (auto state : InitializerMap::preparations) {
                    Circuit c(width);
                    InitializerMap::append_preparation(c, state, 0);
                    c.append_mapped(u, all_qubits(width));
                    init += InitializerMap::weight(m, state) *
                            oracle::probabilities(oracle::circuit_state(c), width, all_qubits(width))[x];
                }
                oracle::Mat obs = oracle::Mat::Identity(1, 1);
                for (int q = 0; q < width; q++) {
                    oracle::Mat proj = oracle::Mat::Zero(2, 2);
                    int bit = (x >> (width - 1 - q)) & 1;
                    proj(bit, bit) = 1;
                    obs = oracle::kron(obs, proj);
                }
                obs = oracle::kron(obs, oracle::letter_matrix(m));
                double bell = (phi.adjoint() * obs * phi)(0, 0).real();
                double sign = m == PauliLetter::Y ? -1 : 1;
                worst = std::max(worst, std::abs(2 * sign * bell - init));
                worst_library = std::max(worst_library, std::abs(grouped.at(l, x) - init));
            }
        }
    }
    Outcome o;
    o.pass = worst < 1e-9 && worst_library < 1e-9;
    o.detail = fmt("20 unitaries x 4 labels, max |2 s t_bell - t_init| = %.2e, library grouped vs t_init %.2e",
                   worst, worst_library);
    return o;
}

Outcome count_formulas() {
    std::mt19937_64 rng(5);
    Outcome o;
    int cases = 0;
    for (int qi = 0; qi <= 3; qi++) {
        for (int qo = 0; qo <= 3; qo++) {
            auto f = fixtures::make_fragment(qi, qo, 1, rng, 4);
            uint64_t cutqc = subcircuit_count(f, Method::CutQC);
            uint64_t grouped = subcircuit_count(f, Method::Grouped);
            if (build_subcircuits_cutqc(f).size() != cutqc) o.pass = false;
            if (qi + qo > 0 && build_subcircuits_grouped(f).size() != grouped) o.pass = false;
            if (qi + qo == 0 && (cutqc != 1 || grouped != 1)) o.pass = false;
            if (qo >= 1 && qi + qo >= 2 && grouped > cutqc) o.pass = false;
            cases++;
        }
    }
    auto a = fixtures::make_fragment(1, 1, 1, rng), b = fixtures::make_fragment(2, 0, 1, rng);
    bool spots = subcircuit_count(a, Method::CutQC) == 12 && subcircuit_count(a, Method::Grouped) == 5 &&
                 subcircuit_count(b, Method::CutQC) == 16 && subcircuit_count(b, Method::Grouped) == 5;
    o.pass = o.pass && spots;
    o.detail = std::to_string(cases) + " (n_qi, n_qo) cases match built lists; (1,1) 12 vs 5, (2,0) 16 vs 5" +
               (spots ? "" : " MISMATCH");
    return o;
}

Outcome shot_model() {
    std::mt19937_64 rng(6);
    Outcome o;
    int identities = 0, fragments = 0;
    for (int qi = 0; qi <= 3; qi++) {
        for (int qo = 0; qo <= 3; qo++) {
            for (int co = 0; co <= 3; co++) {
                const double s = exponential_cost(qo + co);
                const double lhs = ((1 << (qi + qo)) + 1.0) * (1 << qi) * s;
                const double rhs = (std::pow(4, qi) * (1 << qo) + (1 << qi)) * s;
                if (lhs != rhs) o.pass = false;
                identities++;
                // A fragment needs n_qi <= width = n_qo + n_co.
                if (qo + co == 0 || qi > qo + co) continue;
                auto f = fixtures::make_fragment(qi, qo, co - (std::max(qi, qo) - qo), rng, 2);
                if (f.n_co() != co) o.pass = false;
                const double grouped = predicted_shots(f, Method::Grouped, exponential_cost);
                const double cutqc = predicted_shots(f, Method::CutQC, exponential_cost);
                if (grouped != rhs) o.pass = false;
                bool branch_ok = select_method(f) == Method::Grouped ? grouped <= cutqc : cutqc < grouped;
                if (!branch_ok) o.pass = false;
                fragments++;
            }
        }
    }
    o.detail = std::to_string(identities) + " reduction identities hold; " + std::to_string(fragments) +
               " realizable fragments agree with predicted_shots and the method branch";
    return o;
}

BenchConfig trend_config() {
    BenchConfig c;
    c.generator = GeneratorSpec{"blocks", 7, 4, 2024, {{0, 3}, {2, 4}, {4, 3}}};
    c.cuts = "natural";
    c.methods = {MethodPolicy::CutQC, MethodPolicy::Grouped};
    for (int e = 10; e <= 16; e++) c.shots.push_back(uint64_t{1} << e);
    c.repetitions = 20;
    c.seed = 7;
    return c;
}

Outcome fig5_trend() {
    auto start = std::chrono::steady_clock::now();
    BenchConfig c = trend_config();
    RunReport r = run_bench(c, 4);
    auto lookup = [&](const char *method, uint64_t shots) {
        for (const auto &m : r.medians) {
            if (m.method == method && m.shots == shots) return m.fidelity;
        }
        return -1.0;
    };
    const uint64_t top = uint64_t{1} << 16, next = uint64_t{1} << 15;
    double g16 = lookup("grouped", top), c16 = lookup("cutqc", top);
    double g15 = lookup("grouped", next), c15 = lookup("cutqc", next);
    double elapsed = seconds_since(start);
    Outcome o;
    o.pass = g15 >= c15 && g16 >= c16 && g16 >= 0.95 && c16 >= 0.95 && elapsed < 1800 &&
             r.fragments.size() == 6;
    o.detail = fmt("median fidelity 2^15 grouped=%.4f cutqc=%.4f; 2^16 grouped=%.4f cutqc=%.4f", g15, c15, g16,
                   c16) +
               fmt(", %.1f s", elapsed);
    return o;
}

Outcome determinism() {
    BenchConfig c = trend_config();
    c.repetitions = 5;
    std::string reference;
    bool same = true;
    for (int threads : {1, 1, 3, 8}) {
        RunReport r = run_bench(c, threads);
        std::string bytes = dump_report(r) + points_to_csv(r.points);
        if (reference.empty()) {
            reference = bytes;
        } else {
            same = same && bytes == reference;
        }
    }
    Outcome o;
    o.pass = same;
    o.detail = "bench reruns at 1, 1, 3, 8 threads " + std::string(same ? "byte-identical" : "DIFFER") + " (" +
               std::to_string(reference.size()) + " bytes)";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"oracle exactness", oracle_exactness},   {"MUB partition", mub_partition_check},
        {"diagonalizer correctness", diagonalizer_check}, {"ancilla-conversion identity", ancilla_identity},
        {"subcircuit-count formulas", count_formulas}, {"shot-model algebra", shot_model},
        {"fidelity trend", fig5_trend},           {"determinism", determinism},
    };
    int failures = 0;
    int index = 1;
    for (const auto &c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d %s: %s (%s)\n", index++, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d of %d criteria passed\n", index - 1 - failures, index - 1);
    return failures == 0 ? 0 : 1;
}
