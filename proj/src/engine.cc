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

#include "wirecut/engine.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "wirecut/grouping.h"
#include "wirecut/rng.h"

namespace wirecut {

namespace {

uint64_t ipow(uint64_t base, int exp) {
    uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

PauliLetter label_letter(uint64_t label, int num_letters, int position) {
    return static_cast<PauliLetter>((label >> (2 * (num_letters - 1 - position))) & 3);
}

int parity(uint64_t v) { return std::popcount(v) & 1; }

std::vector<int> concat(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Runs job(i) for i in [0, count) on up to `threads` workers.
template <typename Job>
void parallel_for(size_t count, int threads, Job job) {
    const size_t workers = std::min<size_t>(count, static_cast<size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) job(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

// Outcome probabilities of every subcircuit, indexed like its measured register.
std::vector<std::vector<double>> run_subcircuits(const std::vector<Subcircuit> &subs,
                                                 int fragment_id, Budget budget, uint64_t seed,
                                                 int threads) {
    std::vector<uint64_t> allocation;
    if (!budget.exact) allocation = allocate_shots(budget.shots, subs.size());
    std::vector<std::vector<double>> probs(subs.size());
    parallel_for(subs.size(), threads, [&](size_t i) {
        Distribution dist = exact_joint_distribution(subs[i].circuit, subs[i].measured);
        if (budget.exact) {
            probs[i].assign(dist.values().begin(), dist.values().end());
            return;
        }
        uint64_t job_seed = derive_seed(seed, {static_cast<uint64_t>(fragment_id), i});
        auto counts = sample_dense(dist, allocation[i], job_seed);
        probs[i].resize(counts.size());
        for (size_t k = 0; k < counts.size(); k++) {
            probs[i][k] = static_cast<double>(counts[k]) / static_cast<double>(allocation[i]);
        }
    });
    return probs;
}

FragmentTensor empty_tensor(const Fragment &f, Method method, Budget budget) {
    FragmentTensor t;
    t.fragment_id = f.id;
    t.method = method;
    t.exact = budget.exact;
    t.shots = budget.exact ? 0 : budget.shots;
    t.num_labels = f.n_q();
    t.num_outputs = f.n_co();
    t.entries.assign(t.label_count() * t.output_count(), 0.0);
    return t;
}

FragmentTensor cutqc_tensor(const Fragment &f, Budget budget, uint64_t seed, int threads) {
    auto subs = build_subcircuits_cutqc(f);
    auto probs = run_subcircuits(subs, f.id, budget, seed, threads);
    FragmentTensor t = empty_tensor(f, Method::CutQC, budget);
    const int nqo = f.n_qo(), nqi = f.n_qi(), nq = f.n_q(), nco = f.n_co();
    const uint64_t bases = ipow(3, nqo);
    const uint64_t preps = ipow(4, nqi);
    for (uint64_t label = 0; label < t.label_count(); label++) {
        uint64_t basis = 0, sign_mask = 0;
        for (int j = 0; j < nqo; j++) {
            PauliLetter m = label_letter(label, nq, j);
            int digit = m == PauliLetter::X ? 0 : m == PauliLetter::Y ? 1 : 2;
            basis = basis * 3 + digit;
            if (m != PauliLetter::I) sign_mask |= uint64_t{1} << (nqo - 1 - j);
        }
        for (uint64_t c = 0; c < preps; c++) {
            double w = 1.0;
            for (int j = 0; j < nqi && w != 0.0; j++) {
                auto state = InitializerMap::preparations[(c >> (2 * (nqi - 1 - j))) & 3];
                w *= InitializerMap::weight(label_letter(label, nq, nqo + j), state);
            }
            if (w == 0.0) continue;
            const auto &p = probs[c * bases + basis];
            for (uint64_t x = 0; x < t.output_count(); x++) {
                double sum = 0.0;
                for (uint64_t m = 0; m < (uint64_t{1} << nqo); m++) {
                    double v = p[(m << nco) | x];
                    sum += parity(m & sign_mask) ? -v : v;
                }
                t.at(label, x) += w * sum;
            }
        }
    }
    return t;
}

FragmentTensor grouped_tensor(const Fragment &f, Budget budget, uint64_t seed, int threads) {
    auto subs = build_subcircuits_grouped(f);
    auto probs = run_subcircuits(subs, f.id, budget, seed, threads);
    FragmentTensor t = empty_tensor(f, Method::Grouped, budget);
    const int nqo = f.n_qo(), nqi = f.n_qi(), nq = f.n_q(), nco = f.n_co();
    const auto &diagonalizers = cached_diagonalizers(nq);

    struct Entry {
        int group = 0;
        ZImage image;
    };
    std::vector<Entry> lookup(t.label_count());
    for (const auto &d : diagonalizers) {
        for (size_t k = 0; k < d.group.members.size(); k++) {
            lookup[d.group.members[k].index()] = {d.group.id, d.images[k]};
        }
    }
    const double scale = static_cast<double>(uint64_t{1} << nqi);
    for (uint64_t label = 0; label < t.label_count(); label++) {
        const Entry &e = lookup[label];
        int ys = 0;
        for (int j = 0; j < nqi; j++) ys += label_letter(label, nq, nqo + j) == PauliLetter::Y;
        const double factor = scale * e.image.sign * ((ys & 1) ? -1.0 : 1.0);
        const auto &p = probs[e.group];
        for (uint64_t x = 0; x < t.output_count(); x++) {
            double sum = 0.0;
            for (uint64_t m = 0; m < (uint64_t{1} << nq); m++) {
                double v = p[(m << nco) | x];
                sum += parity(m & e.image.z_mask) ? -v : v;
            }
            t.at(label, x) = factor * sum;
        }
    }
    return t;
}

}  // namespace

void InitializerMap::append_preparation(Circuit &c, PrepState state, int q) {
    switch (state) {
        case PrepState::Zero:
            break;
        case PrepState::One:
            c.append(GateKind::X, q);
            break;
        case PrepState::Plus:
            c.append(GateKind::H, q);
            break;
        case PrepState::PlusI:
            c.append(GateKind::H, q);
            c.append(GateKind::S, q);
            break;
    }
}

double InitializerMap::weight(PauliLetter label, PrepState state) {
    static constexpr double table[4][4] = {
        // |0>  |1>  |+>  |+i>
        {1, 1, 0, 0},    // I
        {-1, -1, 2, 0},  // X
        {-1, -1, 0, 2},  // Y
        {1, -1, 0, 0},   // Z
    };
    return table[static_cast<int>(label)][static_cast<int>(state)];
}

double InitializerMap::coefficient(PauliLetter label, const std::array<double, 4> &readouts) {
    double sum = 0.0;
    for (size_t s = 0; s < 4; s++) sum += weight(label, preparations[s]) * readouts[s];
    return sum;
}

void append_basis_change(Circuit &c, PauliLetter basis, int q) {
    if (basis == PauliLetter::X) {
        c.append(GateKind::H, q);
    } else if (basis == PauliLetter::Y) {
        c.append(GateKind::Sdg, q);
        c.append(GateKind::H, q);
    }
}

Fragment convert_quantum_inputs(const Fragment &f) {
    if (f.n_qi() == 0) {
        throw std::invalid_argument("convert_quantum_inputs: fragment has no quantum input");
    }
    Fragment out;
    out.id = f.id;
    out.qubits = f.qubits;
    out.circuit = Circuit(f.width() + f.n_qi());
    for (int i = 0; i < f.n_qi(); i++) {
        const int q = f.quantum_inputs[i];
        const int ancilla = f.width() + i;
        FragmentQubit a;
        a.output = Role::Quantum;
        a.output_cut = f.qubits[q].input_cut;
        a.converted = true;
        out.qubits.push_back(a);
        out.qubits[q].input = Role::Classical;
        out.qubits[q].input_cut = -1;
        out.circuit.append(GateKind::H, q);
        out.circuit.append(GateKind::CX, q, ancilla);
    }
    std::vector<int> identity(f.width());
    for (int q = 0; q < f.width(); q++) identity[q] = q;
    out.circuit.append_mapped(f.circuit, identity);
    out.index_roles();
    return out;
}

std::vector<Subcircuit> build_subcircuits_cutqc(const Fragment &f) {
    const int nqi = f.n_qi(), nqo = f.n_qo();
    static constexpr PauliLetter kBases[3] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
    const std::vector<int> measured = concat(f.quantum_outputs, f.classical_outputs);
    std::vector<Subcircuit> subs;
    for (uint64_t c = 0; c < ipow(4, nqi); c++) {
        for (uint64_t b = 0; b < ipow(3, nqo); b++) {
            Subcircuit s;
            s.id = static_cast<int>(subs.size());
            s.circuit = Circuit(f.width());
            s.measured = measured;
            for (int j = 0; j < nqi; j++) {
                auto state = InitializerMap::preparations[(c >> (2 * (nqi - 1 - j))) & 3];
                s.preps.push_back(state);
                InitializerMap::append_preparation(s.circuit, state, f.quantum_inputs[j]);
            }
            std::vector<int> identity(f.width());
            for (int q = 0; q < f.width(); q++) identity[q] = q;
            s.circuit.append_mapped(f.circuit, identity);
            uint64_t rest = b;
            s.bases.resize(nqo);
            for (int j = nqo - 1; j >= 0; j--) {
                s.bases[j] = kBases[rest % 3];
                rest /= 3;
            }
            for (int j = 0; j < nqo; j++) {
                append_basis_change(s.circuit, s.bases[j], f.quantum_outputs[j]);
            }
            subs.push_back(std::move(s));
        }
    }
    return subs;
}

std::vector<Subcircuit> build_subcircuits_grouped(const Fragment &f) {
    if (f.n_q() == 0) {
        throw std::invalid_argument(
            "build_subcircuits_grouped: fragment has no quantum edges; use the cutqc path");
    }
    const Fragment conv = f.n_qi() > 0 ? convert_quantum_inputs(f) : f;
    const std::vector<int> &reg = conv.quantum_outputs;
    const std::vector<int> measured = concat(reg, conv.classical_outputs);
    std::vector<Subcircuit> subs;
    for (const auto &d : cached_diagonalizers(static_cast<int>(reg.size()))) {
        Subcircuit s;
        s.id = static_cast<int>(subs.size());
        s.circuit = conv.circuit;
        s.circuit.append_mapped(d.transform, reg);
        s.measured = measured;
        s.group = d.group.id;
        subs.push_back(std::move(s));
    }
    return subs;
}

std::vector<uint64_t> allocate_shots(uint64_t budget, uint64_t subcircuits) {
    if (subcircuits == 0) throw std::invalid_argument("allocate_shots: no subcircuits");
    if (budget < subcircuits) {
        throw std::invalid_argument("shot budget " + std::to_string(budget) +
                                    " is smaller than the subcircuit count " +
                                    std::to_string(subcircuits));
    }
    std::vector<uint64_t> out(subcircuits, budget / subcircuits);
    for (uint64_t i = 0; i < budget % subcircuits; i++) out[i]++;
    return out;
}

double exponential_cost(int m) { return std::ldexp(1.0, m); }

uint64_t ShotPlan::total() const {
    uint64_t sum = 0;
    for (auto a : allocation) sum += a;
    return sum;
}

ShotPlan plan_shots(const Fragment &f, Method method, uint64_t budget, const ShotCost &cost) {
    ShotPlan plan;
    plan.fragment_id = f.id;
    plan.method = method;
    plan.allocation = allocate_shots(budget, subcircuit_count(f, method));
    plan.predicted_cutqc = predicted_shots(f, Method::CutQC, cost);
    plan.predicted_grouped = predicted_shots(f, Method::Grouped, cost);
    return plan;
}

double FragmentTensor::at(std::string_view label, std::string_view x) const {
    if (static_cast<int>(label.size()) != num_labels || static_cast<int>(x.size()) != num_outputs) {
        throw std::invalid_argument("FragmentTensor::at: key length mismatch");
    }
    uint64_t l = 0;
    for (char c : label) {
        auto pos = std::string_view("IXYZ").find(c);
        if (pos == std::string_view::npos) {
            throw std::invalid_argument("FragmentTensor::at: bad letter in label");
        }
        l = (l << 2) | pos;
    }
    return at(l, x.empty() ? 0 : parse_bitstring(std::string(x)));
}

FragmentTensor estimate_fragment_tensor(const Fragment &f, Method method, Budget budget,
                                        uint64_t seed, int threads) {
    if (method == Method::Grouped && f.n_q() > 0) {
        return grouped_tensor(f, budget, seed, threads);
    }
    FragmentTensor t = cutqc_tensor(f, budget, seed, threads);
    t.method = method;
    return t;
}

std::vector<double> reconstruct_distribution(std::span<const Fragment> fragments,
                                             std::span<const FragmentTensor> tensors,
                                             const CutSpec &spec, int num_qubits) {
    if (fragments.size() != tensors.size()) {
        throw std::invalid_argument("reconstruct_distribution: one tensor per fragment required");
    }
    if (num_qubits < 1 || num_qubits > 30) {
        throw std::invalid_argument("reconstruct_distribution: unsupported qubit count");
    }
    const int k = static_cast<int>(spec.size());
    std::vector<int> producers(k, 0), consumers(k, 0), wire_owner(num_qubits, 0);
    for (size_t j = 0; j < fragments.size(); j++) {
        const Fragment &f = fragments[j];
        if (tensors[j].num_labels != f.n_q() || tensors[j].num_outputs != f.n_co()) {
            throw std::invalid_argument("reconstruct_distribution: tensor shape does not match fragment " +
                                        std::to_string(f.id));
        }
        for (const auto &q : f.qubits) {
            if (q.output == Role::Quantum) {
                if (q.output_cut < 0 || q.output_cut >= k) {
                    throw std::invalid_argument("reconstruct_distribution: unknown cut id");
                }
                producers[q.output_cut]++;
            }
            if (q.input == Role::Quantum) {
                if (q.input_cut < 0 || q.input_cut >= k) {
                    throw std::invalid_argument("reconstruct_distribution: unknown cut id");
                }
                consumers[q.input_cut]++;
            }
        }
        for (int w : f.output_wires()) {
            if (w < 0 || w >= num_qubits) {
                throw std::invalid_argument("reconstruct_distribution: output wire out of range");
            }
            wire_owner[w]++;
        }
    }
    for (int c = 0; c < k; c++) {
        if (producers[c] != 1 || consumers[c] != 1) {
            throw std::invalid_argument("reconstruct_distribution: cut " + std::to_string(c) +
                                        " is not matched by exactly one producer and one consumer");
        }
    }
    for (int w = 0; w < num_qubits; w++) {
        if (wire_owner[w] != 1) {
            throw std::invalid_argument("reconstruct_distribution: wire " + std::to_string(w) +
                                        " is not measured exactly once");
        }
    }

    const uint64_t outcomes = uint64_t{1} << num_qubits;
    std::vector<std::vector<uint64_t>> local(fragments.size(), std::vector<uint64_t>(outcomes));
    for (size_t j = 0; j < fragments.size(); j++) {
        auto wires = fragments[j].output_wires();
        for (uint64_t x = 0; x < outcomes; x++) {
            uint64_t l = 0;
            for (int w : wires) l = (l << 1) | ((x >> (num_qubits - 1 - w)) & 1);
            local[j][x] = l;
        }
    }
    std::vector<std::vector<int>> label_cuts;
    for (const auto &f : fragments) label_cuts.push_back(f.label_cuts());

    std::vector<double> result(outcomes, 0.0);
    std::vector<const double *> rows(fragments.size());
    for (uint64_t a = 0; a < (uint64_t{1} << (2 * k)); a++) {
        for (size_t j = 0; j < fragments.size(); j++) {
            uint64_t label = 0;
            for (int c : label_cuts[j]) label = (label << 2) | ((a >> (2 * (k - 1 - c))) & 3);
            rows[j] = &tensors[j].entries[label * tensors[j].output_count()];
        }
        for (uint64_t x = 0; x < outcomes; x++) {
            double prod = 1.0;
            for (size_t j = 0; j < fragments.size() && prod != 0.0; j++) prod *= rows[j][local[j][x]];
            result[x] += prod;
        }
    }
    const double norm = std::ldexp(1.0, -k);
    for (auto &v : result) v *= norm;
    return result;
}

Method select_method(const Fragment &f) { return f.n_qo() > 0 ? Method::Grouped : Method::CutQC; }

double predicted_shots(const Fragment &f, Method method, const ShotCost &cost) {
    if (method == Method::CutQC) {
        return static_cast<double>(ipow(4, f.n_qi()) * ipow(3, f.n_qo())) * cost(f.n_qo() + f.n_co());
    }
    return static_cast<double>(ipow(2, f.n_q()) + 1) * cost(f.n_q() + f.n_co());
}

double fidelity(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw std::invalid_argument("fidelity: key spaces differ");
    double mass = 0.0;
    for (double v : q) mass += std::max(v, 0.0);
    if (mass <= 0.0) return 0.0;
    double overlap = 0.0;
    for (size_t i = 0; i < p.size(); i++) {
        overlap += std::sqrt(std::max(p[i], 0.0) * std::max(q[i], 0.0) / mass);
    }
    return std::min(overlap * overlap, 1.0);
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: key spaces differ");
    double sum = 0.0;
    for (size_t i = 0; i < p.size(); i++) sum += std::abs(p[i] - q[i]);
    return 0.5 * sum;
}

std::string_view policy_name(MethodPolicy p) {
    switch (p) {
        case MethodPolicy::CutQC:
            return "cutqc";
        case MethodPolicy::Grouped:
            return "grouped";
        case MethodPolicy::Auto:
            return "auto";
    }
    return "auto";
}

MethodPolicy policy_from_name(std::string_view name) {
    if (name == "cutqc") return MethodPolicy::CutQC;
    if (name == "grouped") return MethodPolicy::Grouped;
    if (name == "auto") return MethodPolicy::Auto;
    throw std::invalid_argument("unknown method '" + std::string(name) +
                                "' (expected cutqc, grouped or auto)");
}

Method resolve_method(const Fragment &f, MethodPolicy policy) {
    switch (policy) {
        case MethodPolicy::CutQC:
            return Method::CutQC;
        case MethodPolicy::Grouped:
            return Method::Grouped;
        case MethodPolicy::Auto:
            break;
    }
    return select_method(f);
}

PipelineResult run_pipeline(const Circuit &circuit, const CutSpec &spec,
                            const PipelineOptions &options) {
    PipelineResult r;
    r.fragments = apply_cuts(circuit, spec);
    for (const auto &f : r.fragments) {
        r.methods.push_back(resolve_method(f, options.policy));
        r.tensors.push_back(
            estimate_fragment_tensor(f, r.methods.back(), options.budget, options.seed, options.threads));
    }
    r.reconstructed = reconstruct_distribution(r.fragments, r.tensors, spec, circuit.num_qubits());
    std::vector<int> all(circuit.num_qubits());
    for (int q = 0; q < circuit.num_qubits(); q++) all[q] = q;
    r.reference = exact_joint_distribution(circuit, all);
    r.fidelity = fidelity(r.reference.values(), r.reconstructed);
    r.tv = tv_distance(r.reference.values(), r.reconstructed);
    return r;
}

}  // namespace wirecut
