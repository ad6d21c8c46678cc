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
#include <span>
#include <string>
#include <vector>

#include "wirecut/circuit.h"
#include "wirecut/pauli.h"

namespace wirecut {

inline constexpr int kMaxGroupingQubits = 6;

/// One maximal commuting family: 2^n - 1 non-identity Pauli strings (phase +1) that,
/// with the identity, form an abelian group.
struct CommutingGroup {
    int num_qubits = 0;
    int id = 0;
    std::vector<PauliString> members;  // lexicographic order

    bool contains(const PauliString &p) const;
};

/// Partitions the 4^n - 1 non-identity strings into 2^n + 1 commuting groups of 2^n - 1
/// by clique cover on the commutation graph (lexicographic tie-breaking, backtracking).
/// Valid for 1 <= n <= 6; the result is deterministic.
std::vector<CommutingGroup> mub_partition(int num_qubits);

/// Memoized mub_partition; safe to call from several threads.
const std::vector<CommutingGroup> &cached_mub_partition(int num_qubits);

struct ValidationReport {
    std::vector<std::string> failures;  // "<predicate>: <detail>"

    bool ok() const { return failures.empty(); }
    bool failed(const std::string &predicate) const;
};

/// Checks count, sizes, pairwise commutation, disjointness, coverage and closure.
ValidationReport validate_partition(std::span<const CommutingGroup> groups);

/// T member T^dagger = sign * Z^{z_mask}. Bit (n-1-q) of z_mask is qubit q, matching
/// the integer value of a measured bitstring.
struct ZImage {
    int sign = 1;
    uint64_t z_mask = 0;
};

struct Diagonalizer {
    CommutingGroup group;
    Circuit transform;
    std::vector<ZImage> images;  // parallel to group.members

    const ZImage &image_of(const PauliString &member) const;
};

/// Builds a Clifford circuit over {h, sdg, cz} mapping every member to a signed Z string,
/// by symplectic Gaussian elimination on n independent generators. Uses at most
/// n^2/2 + 5n/2 gates.
Diagonalizer synthesize_diagonalizer(const CommutingGroup &group);

/// Diagonalizers for every group of cached_mub_partition(n), memoized.
const std::vector<Diagonalizer> &cached_diagonalizers(int num_qubits);

/// Eigenvalue of `member` (+1/-1) reported by a Z-basis outcome after the transform.
int outcome_eigenvalue(const Diagonalizer &d, const PauliString &member, uint64_t bits);
int outcome_eigenvalue(const Diagonalizer &d, const PauliString &member, const std::string &bits);

}  // namespace wirecut
