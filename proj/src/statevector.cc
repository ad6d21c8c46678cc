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

#include "wirecut/statevector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wirecut/rng.h"

namespace wirecut {

namespace {

using Mat2 = std::array<Amplitude, 4>;

Mat2 single_qubit_matrix(const Gate &g) {
    const double r = 1.0 / std::sqrt(2.0);
    const Amplitude i{0, 1};
    double c = std::cos(g.angle / 2);
    double s = std::sin(g.angle / 2);
    switch (g.kind) {
        case GateKind::H: return {r, r, r, -r};
        case GateKind::X: return {0, 1, 1, 0};
        case GateKind::Y: return {0, -i, i, 0};
        case GateKind::Z: return {1, 0, 0, -1};
        case GateKind::S: return {1, 0, 0, i};
        case GateKind::Sdg: return {1, 0, 0, -i};
        case GateKind::T: return {1, 0, 0, std::polar(1.0, M_PI / 4)};
        case GateKind::Tdg: return {1, 0, 0, std::polar(1.0, -M_PI / 4)};
        case GateKind::RX: return {c, -i * s, -i * s, c};
        case GateKind::RY: return {c, -s, s, c};
        case GateKind::RZ: return {std::polar(1.0, -g.angle / 2), 0, 0, std::polar(1.0, g.angle / 2)};
        default: throw std::logic_error("not a single-qubit gate");
    }
}

void apply_matrix(StateVector &state, uint64_t bit, const Mat2 &m) {
    const uint64_t dim = state.size();
    for (uint64_t k = 0; k < dim; k++) {
        if (k & bit) {
            continue;
        }
        Amplitude a0 = state[k];
        Amplitude a1 = state[k | bit];
        state[k] = m[0] * a0 + m[1] * a1;
        state[k | bit] = m[2] * a0 + m[3] * a1;
    }
}

}  // namespace

std::string bitstring(uint64_t index, int bits) {
    std::string out(bits, '0');
    for (int b = 0; b < bits; b++) {
        if ((index >> (bits - 1 - b)) & 1) {
            out[b] = '1';
        }
    }
    return out;
}

uint64_t parse_bitstring(const std::string &key) {
    uint64_t k = 0;
    for (char ch : key) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bad bitstring '" + key + "'");
        }
        k = (k << 1) | static_cast<uint64_t>(ch == '1');
    }
    return k;
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty() || !std::has_single_bit(probs_.size())) {
        throw std::invalid_argument("distribution size must be a power of two");
    }
    num_bits_ = std::countr_zero(probs_.size());
}

double Distribution::probability(const std::string &key) const {
    if (static_cast<int>(key.size()) != num_bits_) {
        throw std::invalid_argument("bitstring '" + key + "' has wrong length");
    }
    return probs_[parse_bitstring(key)];
}

double Distribution::total() const { return std::accumulate(probs_.begin(), probs_.end(), 0.0); }

std::map<std::string, double> Distribution::to_map(double threshold) const {
    std::map<std::string, double> out;
    for (uint64_t k = 0; k < probs_.size(); k++) {
        if (std::abs(probs_[k]) > threshold) {
            out.emplace(bitstring(k, num_bits_), probs_[k]);
        }
    }
    return out;
}

void apply_gate(StateVector &state, int num_qubits, const Gate &g) {
    auto bit_of = [&](int q) { return uint64_t{1} << (num_qubits - 1 - q); };
    const uint64_t dim = state.size();
    switch (g.kind) {
        case GateKind::CX: {
            uint64_t c = bit_of(g.qubits[0]);
            uint64_t t = bit_of(g.qubits[1]);
            for (uint64_t k = 0; k < dim; k++) {
                if ((k & c) && !(k & t)) {
                    std::swap(state[k], state[k | t]);
                }
            }
            return;
        }
        case GateKind::CZ: {
            uint64_t mask = bit_of(g.qubits[0]) | bit_of(g.qubits[1]);
            for (uint64_t k = 0; k < dim; k++) {
                if ((k & mask) == mask) {
                    state[k] = -state[k];
                }
            }
            return;
        }
        case GateKind::Swap: {
            uint64_t a = bit_of(g.qubits[0]);
            uint64_t b = bit_of(g.qubits[1]);
            for (uint64_t k = 0; k < dim; k++) {
                if ((k & a) && !(k & b)) {
                    std::swap(state[k], state[(k & ~a) | b]);
                }
            }
            return;
        }
        default:
            apply_matrix(state, bit_of(g.qubits[0]), single_qubit_matrix(g));
    }
}

StateVector simulate_state(const Circuit &circuit, int cap) {
    const int n = circuit.num_qubits();
    if (n > cap) {
        throw std::invalid_argument("simulate_state: " + std::to_string(n) +
                                    " qubits exceeds the cap of " + std::to_string(cap));
    }
    StateVector state(uint64_t{1} << n, Amplitude{0, 0});
    state[0] = 1;
    for (const auto &g : circuit.gates()) {
        apply_gate(state, n, g);
    }
    return state;
}

Distribution marginal_distribution(const StateVector &state, int num_qubits,
                                   std::span<const int> measured) {
    if (measured.empty()) {
        throw std::invalid_argument("empty measured set");
    }
    const int m = static_cast<int>(measured.size());
    for (int i = 0; i < m; i++) {
        if (measured[i] < 0 || measured[i] >= num_qubits) {
            throw std::invalid_argument("measured qubit " + std::to_string(measured[i]) +
                                        " out of range");
        }
        for (int j = 0; j < i; j++) {
            if (measured[i] == measured[j]) {
                throw std::invalid_argument("measured qubit listed twice");
            }
        }
    }
    std::vector<double> probs(uint64_t{1} << m, 0.0);
    for (uint64_t k = 0; k < state.size(); k++) {
        double p = std::norm(state[k]);
        if (p == 0.0) {
            continue;
        }
        uint64_t out = 0;
        for (int i = 0; i < m; i++) {
            out = (out << 1) | ((k >> (num_qubits - 1 - measured[i])) & 1);
        }
        probs[out] += p;
    }
    return Distribution(std::move(probs));
}

Distribution exact_joint_distribution(const Circuit &circuit, std::span<const int> measured) {
    if (measured.empty()) {
        throw std::invalid_argument("exact_joint_distribution: empty measured set");
    }
    return marginal_distribution(simulate_state(circuit), circuit.num_qubits(), measured);
}

std::vector<uint64_t> sample_dense(const Distribution &dist, uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    std::vector<double> cdf(dist.size());
    double acc = 0;
    for (size_t k = 0; k < dist.size(); k++) {
        acc += std::max(dist[k], 0.0);
        cdf[k] = acc;
    }
    std::vector<uint64_t> counts(dist.size(), 0);
    Rng rng(seed);
    for (uint64_t s = 0; s < shots; s++) {
        double u = rng.uniform() * acc;
        // First index whose cdf exceeds u; zero-probability outcomes have cdf equal to the
        // previous entry and are never selected.
        size_t k = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        if (k >= cdf.size()) {
            k = cdf.size() - 1;
            while (k > 0 && dist[k] <= 0) {
                k--;
            }
        }
        counts[k]++;
    }
    return counts;
}

Counts sample_counts(const Circuit &circuit, std::span<const int> measured, uint64_t shots,
                     uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sample_counts: shots must be positive");
    }
    auto dist = exact_joint_distribution(circuit, measured);
    auto dense = sample_dense(dist, shots, seed);
    Counts out;
    for (uint64_t k = 0; k < dense.size(); k++) {
        if (dense[k]) {
            out.emplace(bitstring(k, dist.num_bits()), dense[k]);
        }
    }
    return out;
}

double expectation(const StateVector &state, const PauliString &p) {
    const int n = std::countr_zero(state.size());
    if (static_cast<int>(p.num_qubits()) != n) {
        throw std::invalid_argument("expectation: Pauli string length " +
                                    std::to_string(p.num_qubits()) + " vs " + std::to_string(n) +
                                    " qubits");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("expectation: non-Hermitian Pauli string " + p.str());
    }
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    for (int q = 0; q < n; q++) {
        uint64_t bit = uint64_t{1} << (n - 1 - q);
        if (p.x_bit(q)) xmask |= bit;
        if (p.z_bit(q)) zmask |= bit;
    }
    // P = i^{k + #Y} X^x Z^z, so (P psi)[b ^ x] = i^{k + #Y} (-1)^{b.z} psi[b].
    int k = (p.phase_exponent() + std::popcount(xmask & zmask)) & 3;
    static constexpr Amplitude kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Amplitude acc = 0;
    for (uint64_t b = 0; b < state.size(); b++) {
        Amplitude term = std::conj(state[b ^ xmask]) * state[b];
        acc += (std::popcount(b & zmask) & 1) ? -term : term;
    }
    acc *= kPowers[k];
    if (std::abs(acc.imag()) > 1e-10) {
        throw std::logic_error("expectation: imaginary residue " + std::to_string(acc.imag()));
    }
    return acc.real();
}

double expectation(const Circuit &circuit, const PauliString &p) {
    if (static_cast<int>(p.num_qubits()) != circuit.num_qubits()) {
        throw std::invalid_argument("expectation: Pauli string length does not match circuit width");
    }
    return expectation(simulate_state(circuit), p);
}

}  // namespace wirecut
