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

#include "wirecut/clifford.h"

#include <stdexcept>
#include <string>

namespace wirecut {

namespace {

// Images of the local generators (X_a, Z_a[, X_b, Z_b]) under conjugation by the gate.
struct LocalImages {
    int arity;
    const char *images[4];
};

LocalImages images_of(GateKind kind) {
    switch (kind) {
        case GateKind::H: return {1, {"Z", "X"}};
        case GateKind::S: return {1, {"Y", "Z"}};
        case GateKind::Sdg: return {1, {"-Y", "Z"}};
        case GateKind::X: return {1, {"X", "-Z"}};
        case GateKind::Y: return {1, {"-X", "-Z"}};
        case GateKind::Z: return {1, {"-X", "Z"}};
        case GateKind::CX: return {2, {"XX", "ZI", "IX", "ZZ"}};
        case GateKind::CZ: return {2, {"XZ", "ZI", "ZX", "IZ"}};
        case GateKind::Swap: return {2, {"IX", "IZ", "XI", "ZI"}};
        default:
            throw std::invalid_argument("conjugate_pauli: gate '" + std::string(gate_name(kind)) +
                                        "' is not Clifford");
    }
}

}  // namespace

void conjugate_in_place(PauliString &p, const Gate &gate) {
    auto table = images_of(gate.kind);
    int arity = table.arity;
    for (int i = 0; i < arity; i++) {
        if (gate.qubits[i] < 0 || gate.qubits[i] >= static_cast<int>(p.num_qubits())) {
            throw std::invalid_argument("conjugate_pauli: gate qubit out of range");
        }
    }
    // Local part as i^{#Y} prod_k X_k^{x_k} Z_k^{z_k}; map each factor through the table.
    PauliString image(arity);
    int y_count = 0;
    for (int i = 0; i < arity; i++) {
        int q = gate.qubits[i];
        if (p.x_bit(q)) {
            image = image * PauliString::parse(table.images[2 * i]);
        }
        if (p.z_bit(q)) {
            image = image * PauliString::parse(table.images[2 * i + 1]);
        }
        y_count += p.x_bit(q) && p.z_bit(q);
    }
    for (int i = 0; i < arity; i++) {
        p.set_letter(gate.qubits[i], image.letter(i));
    }
    p.set_phase_exponent(p.phase_exponent() + image.phase_exponent() + y_count);
}

PauliString conjugate_pauli(const Circuit &t, const PauliString &p) {
    if (static_cast<int>(p.num_qubits()) != t.num_qubits()) {
        throw std::invalid_argument("conjugate_pauli: width mismatch");
    }
    PauliString out = p;
    for (const auto &g : t.gates()) {
        conjugate_in_place(out, g);
    }
    return out;
}

}  // namespace wirecut
