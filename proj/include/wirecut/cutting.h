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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wirecut/circuit.h"

namespace wirecut {

/// Severs `qubit` after its `position`-th gate (counting only gates on that wire).
struct Cut {
    int qubit = 0;
    int position = 0;

    auto operator<=>(const Cut &) const = default;
};

/// Cut ids are indices into `cuts`.
struct CutSpec {
    std::vector<Cut> cuts;

    size_t size() const { return cuts.size(); }
    bool empty() const { return cuts.empty(); }
    bool operator==(const CutSpec &) const = default;
};

/// Lines of the form `cut <qubit> <position>`; `#` comments and blank lines are ignored.
CutSpec parse_cut_spec(std::string_view text);
CutSpec load_cut_spec(const std::string &path);
std::string to_text(const CutSpec &spec);

/// Throws std::invalid_argument unless every cut severs an interior segment of an
/// existing wire and no cut is repeated.
void validate_cut_spec(const Circuit &circuit, const CutSpec &spec);

enum class Role { Classical, Quantum };

struct FragmentQubit {
    int wire = -1;        // global wire; -1 for an ancilla
    int segment = 0;      // index of the wire segment between cuts
    Role input = Role::Classical;
    int input_cut = -1;   // cut id when input is Quantum
    Role output = Role::Classical;
    int output_cut = -1;  // cut id when output is Quantum
    bool converted = false;  // ancilla standing in for a quantum input
};

/// One connected piece of a cut circuit. Local qubits are wire segments ordered by
/// (wire, segment); ancillas added by input conversion follow at the high end.
struct Fragment {
    int id = 0;
    Circuit circuit;
    std::vector<FragmentQubit> qubits;

    // Local index sets, ascending.
    std::vector<int> quantum_inputs;
    std::vector<int> quantum_outputs;
    std::vector<int> classical_inputs;
    std::vector<int> classical_outputs;

    int width() const { return static_cast<int>(qubits.size()); }
    int n_qi() const { return static_cast<int>(quantum_inputs.size()); }
    int n_qo() const { return static_cast<int>(quantum_outputs.size()); }
    int n_ci() const { return static_cast<int>(classical_inputs.size()); }
    int n_co() const { return static_cast<int>(classical_outputs.size()); }
    int n_q() const { return n_qi() + n_qo(); }
    int converted_inputs() const;

    /// Cut id of each tensor label position: quantum outputs first, then quantum inputs.
    std::vector<int> label_cuts() const;
    /// Global wire of each classical output, in classical_outputs order.
    std::vector<int> output_wires() const;

    /// Rebuilds the role index sets from `qubits`.
    void index_roles();
};

/// Splits `circuit` into the connected components of its gate graph after severing
/// every cut. Throws CutPlanError when the fragments depend on each other cyclically,
/// std::invalid_argument for a cut that does not sever an interior wire segment.
std::vector<Fragment> apply_cuts(const Circuit &circuit, const CutSpec &spec);

/// Checks the counting identity n = n_qo + n_co = n_qi + n_ci and role consistency;
/// returns a description of the first violation, or an empty string.
std::string check_fragment(const Fragment &f);

enum class Method { CutQC, Grouped };

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);

/// CutQC: 4^{n_qi} 3^{n_qo}. Grouped: 2^{n_qi + n_qo} + 1. Both 1 without quantum edges.
uint64_t subcircuit_count(const Fragment &f, Method method);

/// Width a fragment needs under the grouped method: local qubits plus one ancilla per
/// quantum input.
int grouped_width(const Fragment &f);

/// Cut search over one candidate per gap between consecutive two-qubit gates on a wire.
/// Returns a smallest set of cuts under which every fragment's grouped width fits
/// `max_width`, preferring fewer total grouped subcircuits. Throws InfeasibleError when no
/// set exists or the evaluation budget (2^18 plans) runs out.
CutSpec greedy_find_cuts(const Circuit &circuit, int max_width);

}  // namespace wirecut
