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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wirecut/circuit.h"
#include "wirecut/cutting.h"
#include "wirecut/pauli.h"
#include "wirecut/statevector.h"

namespace wirecut {

enum class PrepState { Zero, One, Plus, PlusI };

/// Eigenstate preparations for quantum inputs and the coefficients that turn their
/// readouts into Pauli-label contributions.
struct InitializerMap {
    static constexpr std::array<PrepState, 4> preparations{PrepState::Zero, PrepState::One,
                                                           PrepState::Plus, PrepState::PlusI};

    /// Appends the gates taking |0> to `state` on qubit `q`.
    static void append_preparation(Circuit &c, PrepState state, int q);

    /// Weight of the readout under `state` in the coefficient for `label`:
    /// I = r0 + r1, Z = r0 - r1, X = 2 r+ - r0 - r1, Y = 2 r+i - r0 - r1.
    static double weight(PauliLetter label, PrepState state);

    /// Applies the table to readouts ordered as `preparations`.
    static double coefficient(PauliLetter label, const std::array<double, 4> &readouts);
};

/// Appends the rotation taking the `basis` eigenbasis to the computational basis
/// (H for X, S^dagger then H for Y, nothing for Z or I).
void append_basis_change(Circuit &c, PauliLetter basis, int q);

/// Adds a Bell-paired ancilla for every quantum input; each ancilla becomes a quantum
/// output carrying the input's cut id. Throws std::invalid_argument if n_qi = 0.
Fragment convert_quantum_inputs(const Fragment &f);

struct Subcircuit {
    int id = 0;
    Circuit circuit;
    std::vector<int> measured;         // quantum outputs first, then classical outputs
    std::vector<PrepState> preps;      // cutqc: one per quantum input
    std::vector<PauliLetter> bases;    // cutqc: one per quantum output, from {X, Y, Z}
    int group = -1;                    // grouped: commuting group id
};

/// Every (preparation, measurement basis) combination; preparations vary slowest.
std::vector<Subcircuit> build_subcircuits_cutqc(const Fragment &f);

/// One subcircuit per commuting group of the quantum-output register of the
/// input-converted fragment. Throws std::invalid_argument without quantum edges.
std::vector<Subcircuit> build_subcircuits_grouped(const Fragment &f);

/// Exact probabilities, or `shots` samples split across the subcircuits.
struct Budget {
    bool exact = true;
    uint64_t shots = 0;

    static Budget Exact() { return {true, 0}; }
    static Budget Shots(uint64_t n) { return {false, n}; }
};

/// Equal split of `budget` over `subcircuits`, remainder to the first ones.
/// Throws std::invalid_argument when budget < subcircuits.
std::vector<uint64_t> allocate_shots(uint64_t budget, uint64_t subcircuits);

using ShotCost = std::function<double(int)>;

/// S(m) = 2^m.
double exponential_cost(int m);

struct ShotPlan {
    int fragment_id = 0;
    Method method = Method::CutQC;
    std::vector<uint64_t> allocation;
    double predicted_cutqc = 0;
    double predicted_grouped = 0;

    uint64_t total() const;
};

ShotPlan plan_shots(const Fragment &f, Method method, uint64_t budget,
                    const ShotCost &cost = exponential_cost);

/// Coefficients t(M, x): M ranges over 4^{n_q} labels (quantum-output letters, then
/// quantum-input letters, first letter most significant), x over the 2^{n_co}
/// classical-output bitstrings.
struct FragmentTensor {
    int fragment_id = 0;
    Method method = Method::CutQC;
    bool exact = true;
    uint64_t shots = 0;
    int num_labels = 0;   // n_q
    int num_outputs = 0;  // n_co
    std::vector<double> entries;

    uint64_t label_count() const { return uint64_t{1} << (2 * num_labels); }
    uint64_t output_count() const { return uint64_t{1} << num_outputs; }
    double at(uint64_t label, uint64_t x) const { return entries[label * output_count() + x]; }
    double &at(uint64_t label, uint64_t x) { return entries[label * output_count() + x]; }
    /// `label` is a letter string such as "XZ"; `x` a bitstring.
    double at(std::string_view label, std::string_view x) const;
};

/// Runs every subcircuit of `f` under `method` and assembles its tensor. Grouped on a
/// fragment without quantum edges uses the single cutqc subcircuit. Subcircuit i draws
/// from derive_seed(seed, {fragment id, i}); `threads` only affects speed.
FragmentTensor estimate_fragment_tensor(const Fragment &f, Method method, Budget budget,
                                        uint64_t seed = 0, int threads = 1);

/// Contracts the tensors over all 4^k cut-label assignments. Entry x of the result is
/// indexed by the uncut circuit's qubits, qubit 0 most significant; entries may be
/// negative with sampled tensors.
std::vector<double> reconstruct_distribution(std::span<const Fragment> fragments,
                                             std::span<const FragmentTensor> tensors,
                                             const CutSpec &spec, int num_qubits);

/// Grouped iff the fragment has a quantum output.
Method select_method(const Fragment &f);

/// cutqc: 4^{n_qi} 3^{n_qo} S(n_qo + n_co); grouped: (2^{n_q} + 1) S(n_q + n_co).
double predicted_shots(const Fragment &f, Method method, const ShotCost &cost);

/// (sum_x sqrt(p q~))^2 with q~ the clipped, renormalized q; 0 if q has no positive mass.
double fidelity(std::span<const double> p, std::span<const double> q);
double tv_distance(std::span<const double> p, std::span<const double> q);

enum class MethodPolicy { CutQC, Grouped, Auto };

std::string_view policy_name(MethodPolicy p);
MethodPolicy policy_from_name(std::string_view name);
Method resolve_method(const Fragment &f, MethodPolicy policy);

struct PipelineOptions {
    MethodPolicy policy = MethodPolicy::Auto;
    Budget budget = Budget::Exact();  // shots are per fragment
    uint64_t seed = 0;
    int threads = 1;
};

struct PipelineResult {
    std::vector<Fragment> fragments;
    std::vector<Method> methods;
    std::vector<FragmentTensor> tensors;
    std::vector<double> reconstructed;
    Distribution reference;
    double fidelity = 0;
    double tv = 0;
};

/// Cuts, runs each fragment under `seed` (see estimate_fragment_tensor), reconstructs
/// and compares against the exact uncut distribution.
PipelineResult run_pipeline(const Circuit &circuit, const CutSpec &spec,
                            const PipelineOptions &options);

}  // namespace wirecut
