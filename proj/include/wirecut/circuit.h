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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wirecut {

enum class GateKind { H, X, Y, Z, S, Sdg, T, Tdg, RX, RY, RZ, CX, CZ, Swap };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
bool is_rotation(GateKind kind);
bool is_two_qubit(GateKind kind);
bool is_clifford(GateKind kind);

struct Gate {
    GateKind kind;
    std::array<int, 2> qubits{-1, -1};
    double angle = 0.0;

    int arity() const { return is_two_qubit(kind) ? 2 : 1; }
    bool acts_on(int q) const { return qubits[0] == q || (arity() == 2 && qubits[1] == q); }
    bool operator==(const Gate &) const = default;
};

/// Ordered gate list on a fixed register. Every appended gate is validated.
class Circuit {
  public:
    explicit Circuit(int num_qubits = 0);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    Circuit &append(const Gate &gate);
    Circuit &append(GateKind kind, int q);
    Circuit &append(GateKind kind, int q0, int q1);
    Circuit &append_rotation(GateKind kind, double angle, int q);

    /// Appends `other`, sending its qubit i to `qubit_map[i]`.
    Circuit &append_mapped(const Circuit &other, const std::vector<int> &qubit_map);

    bool operator==(const Circuit &) const = default;

  private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

/// Parses the line-oriented text format:
///
///     qubits 3        # header, required before any gate
///     h 0
///     rz 1.5708 1     # rotations take the angle (radians) before the qubit
///     cx 0 1
///
/// Throws ParseError with the offending line number.
Circuit parse_circuit(std::string_view text);
Circuit load_circuit(const std::string &path);

/// Inverse of parse_circuit; angles are printed with round-trip precision.
std::string to_text(const Circuit &circuit);

/// The circuit on num_qubits + extra qubits; the new qubits sit at the high end untouched.
Circuit widen(const Circuit &circuit, int extra);

}  // namespace wirecut
