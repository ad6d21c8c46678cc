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

// Synthetic fragments and cut circuits shared by the test suites.

#include <algorithm>
#include <random>

#include "oracle.h"
#include "wirecut/cutting.h"
#include "wirecut/errors.h"
#include "wirecut/generators.h"

namespace fixtures {

/// A fragment of width max(n_qi, n_qo) + extra whose first n_qi qubits are quantum
/// inputs and first n_qo qubits quantum outputs, running a random circuit.
inline wirecut::Fragment make_fragment(int n_qi, int n_qo, int extra, std::mt19937_64 &rng,
                                       int gates = 12) {
    wirecut::Fragment f;
    const int width = std::max(n_qi, n_qo) + extra;
    for (int q = 0; q < width; q++) {
        wirecut::FragmentQubit fq;
        fq.wire = q;
        if (q < n_qo) {
            fq.output = wirecut::Role::Quantum;
            fq.output_cut = q;
        }
        if (q < n_qi) {
            fq.input = wirecut::Role::Quantum;
            fq.input_cut = n_qo + q;
        }
        f.qubits.push_back(fq);
    }
    f.circuit = oracle::random_circuit(width, gates, rng);
    f.index_roles();
    return f;
}

/// Random layered blocks whose block boundaries give 1..3 cuts on `n` qubits, every
/// wire covered and every fragment small enough for the grouped method.
inline wirecut::BlockCircuit random_cut_circuit(int n, int depth, std::mt19937_64 &rng) {
    for (;;) {
        const int num_blocks = 2 + static_cast<int>(rng() % 2);
        std::vector<wirecut::Block> blocks;
        std::vector<int> covered(n, 0);
        for (int b = 0; b < num_blocks; b++) {
            int width = 2 + static_cast<int>(rng() % (n - 1));
            int first = static_cast<int>(rng() % (n - width + 1));
            blocks.push_back({first, width});
            for (int q = first; q < first + width; q++) covered[q] = 1;
        }
        if (std::count(covered.begin(), covered.end(), 0) > 0) continue;
        auto bc = wirecut::random_blocks(n, blocks, std::max(2, depth / num_blocks), rng());
        if (bc.cuts.size() < 1 || bc.cuts.size() > 3) continue;
        try {
            auto fragments = wirecut::apply_cuts(bc.circuit, bc.cuts);
            if (fragments.size() < 2) continue;
            return bc;
        } catch (const wirecut::CutPlanError &) {
            continue;
        }
    }
}

}  // namespace fixtures
