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

#include <cstdint>
#include <vector>

#include "wirecut/circuit.h"
#include "wirecut/cutting.h"

namespace wirecut {

/// `depth` layers of ry and rz on every qubit (uniform angles in [0, 2 pi)) followed by
/// cx on neighbouring pairs, starting at even pairs and alternating.
Circuit random_layered(int num_qubits, int depth, uint64_t seed);

struct Block {
    int first = 0;
    int width = 1;

    friend bool operator==(const Block&, const Block&) = default;
};

struct BlockCircuit {
    Circuit circuit;
    CutSpec cuts;  // one cut per wire handed from one block to a later one
};

/// Layered random blocks applied in order, each acting on `width` consecutive qubits.
BlockCircuit random_blocks(int num_qubits, const std::vector<Block> &blocks, int depth,
                           uint64_t seed);

Circuit ghz(int num_qubits);

/// Random computational basis input followed by the quantum Fourier transform, with
/// controlled phases expanded into rz and cx.
Circuit qft(int num_qubits, uint64_t seed);

}  // namespace wirecut
