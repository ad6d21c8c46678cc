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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wirecut/circuit.h"
#include "wirecut/pauli.h"

namespace wirecut {

inline constexpr int kDefaultSimulationCap = 24;

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

/// Bitstring key for `index` over `bits` bits; the first character is the most significant bit.
std::string bitstring(uint64_t index, int bits);
uint64_t parse_bitstring(const std::string &key);

/// Probabilities over the computational basis of a set of measured qubits.
///
/// Dense storage: entry `k` is the outcome whose first measured qubit is the most
/// significant bit of `k`.
class Distribution {
  public:
    Distribution() = default;
    explicit Distribution(std::vector<double> probs);

    int num_bits() const { return num_bits_; }
    size_t size() const { return probs_.size(); }
    double operator[](uint64_t k) const { return probs_[k]; }
    double probability(const std::string &key) const;
    std::span<const double> values() const { return probs_; }
    double total() const;

    /// Non-zero entries keyed by bitstring.
    std::map<std::string, double> to_map(double threshold = 0.0) const;

  private:
    int num_bits_ = 0;
    std::vector<double> probs_;
};

using Counts = std::map<std::string, uint64_t>;

/// Applies one gate in place. Qubit q of an n-qubit register is bit (n-1-q) of the index.
void apply_gate(StateVector &state, int num_qubits, const Gate &gate);

StateVector simulate_state(const Circuit &circuit, int cap = kDefaultSimulationCap);

/// Born-rule marginal of `state` over `measured` (other qubits traced out).
Distribution marginal_distribution(const StateVector &state, int num_qubits,
                                   std::span<const int> measured);
Distribution exact_joint_distribution(const Circuit &circuit, std::span<const int> measured);

/// Multinomial draw of `shots` outcomes; entry k counts outcome k. Deterministic in `seed`.
std::vector<uint64_t> sample_dense(const Distribution &dist, uint64_t shots, uint64_t seed);
Counts sample_counts(const Circuit &circuit, std::span<const int> measured, uint64_t shots,
                     uint64_t seed);

double expectation(const StateVector &state, const PauliString &p);
double expectation(const Circuit &circuit, const PauliString &p);

}  // namespace wirecut
