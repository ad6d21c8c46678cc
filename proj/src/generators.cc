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

#include "wirecut/generators.h"

#include <numbers>
#include <stdexcept>
#include <string>

#include "wirecut/rng.h"

namespace wirecut {

namespace {

void random_layers(Circuit &c, int first, int width, int depth, Rng &rng) {
    constexpr double kTwoPi = 2 * std::numbers::pi;
    for (int layer = 0; layer < depth; layer++) {
        for (int q = first; q < first + width; q++) {
            c.append_rotation(GateKind::RY, kTwoPi * rng.uniform(), q);
            c.append_rotation(GateKind::RZ, kTwoPi * rng.uniform(), q);
        }
        for (int q = first + layer % 2; q + 1 < first + width; q += 2) {
            c.append(GateKind::CX, q, q + 1);
        }
    }
}

void check_size(int num_qubits, int depth) {
    if (num_qubits < 1) throw std::invalid_argument("generator: qubit count must be positive");
    if (depth < 0) throw std::invalid_argument("generator: depth must be non-negative");
}

}  // namespace

Circuit random_layered(int num_qubits, int depth, uint64_t seed) {
    check_size(num_qubits, depth);
    Circuit c(num_qubits);
    Rng rng(seed);
    random_layers(c, 0, num_qubits, depth, rng);
    return c;
}

BlockCircuit random_blocks(int num_qubits, const std::vector<Block> &blocks, int depth,
                           uint64_t seed) {
    check_size(num_qubits, depth);
    if (depth < 1) throw std::invalid_argument("random_blocks: depth must be positive");
    BlockCircuit out{Circuit(num_qubits), {}};
    Rng rng(seed);
    std::vector<int> gates_on(num_qubits, 0);
    for (const auto &b : blocks) {
        if (b.width < 1 || b.first < 0 || b.first + b.width > num_qubits) {
            throw std::invalid_argument("random_blocks: block [" + std::to_string(b.first) + ", " +
                                        std::to_string(b.first + b.width) + ") out of range");
        }
        for (int q = b.first; q < b.first + b.width; q++) {
            if (gates_on[q] > 0) out.cuts.cuts.push_back(Cut{q, gates_on[q]});
        }
        size_t before = out.circuit.size();
        random_layers(out.circuit, b.first, b.width, depth, rng);
        for (size_t i = before; i < out.circuit.size(); i++) {
            const Gate &g = out.circuit.gates()[i];
            for (int k = 0; k < g.arity(); k++) gates_on[g.qubits[k]]++;
        }
    }
    return out;
}

Circuit ghz(int num_qubits) {
    check_size(num_qubits, 0);
    Circuit c(num_qubits);
    c.append(GateKind::H, 0);
    for (int q = 0; q + 1 < num_qubits; q++) c.append(GateKind::CX, q, q + 1);
    return c;
}

Circuit qft(int num_qubits, uint64_t seed) {
    check_size(num_qubits, 0);
    Circuit c(num_qubits);
    Rng rng(seed);
    for (int q = 0; q < num_qubits; q++) {
        if (rng.next() & 1) c.append(GateKind::X, q);
    }
    for (int j = 0; j < num_qubits; j++) {
        c.append(GateKind::H, j);
        for (int k = j + 1; k < num_qubits; k++) {
            const double lambda = std::numbers::pi / static_cast<double>(uint64_t{1} << (k - j));
            c.append_rotation(GateKind::RZ, lambda / 2, k);
            c.append(GateKind::CX, k, j);
            c.append_rotation(GateKind::RZ, -lambda / 2, j);
            c.append(GateKind::CX, k, j);
            c.append_rotation(GateKind::RZ, lambda / 2, j);
        }
    }
    for (int q = 0; q < num_qubits / 2; q++) c.append(GateKind::Swap, q, num_qubits - 1 - q);
    return c;
}

}  // namespace wirecut
