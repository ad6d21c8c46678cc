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
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wirecut {

enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter letter);

/// An n-qubit Pauli operator i^k * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Letters are packed symplectically (I=00, X=10, Z=01, Y=11 as (x,z)) into
/// 64-bit words; the phase is the exponent k of i, kept mod 4. Qubit 0 is the
/// leftmost letter of the textual form.
class PauliString {
  public:
    /// The identity on `num_qubits` qubits with phase +1.
    explicit PauliString(size_t num_qubits);

    /// Parses `[+|-|+i|-i]LETTERS`, e.g. "-ZZ" or "+iXYI".
    static PauliString parse(std::string_view text);
    static PauliString from_letters(std::span<const PauliLetter> letters, int phase_exponent = 0);

    /// Inverse of index(): base-4 digits I=0,X=1,Y=2,Z=3 with qubit 0 most significant.
    static PauliString from_index(size_t num_qubits, uint64_t index);

    size_t num_qubits() const { return num_qubits_; }
    PauliLetter letter(size_t q) const;
    void set_letter(size_t q, PauliLetter letter);
    bool x_bit(size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
    std::span<const uint64_t> x_words() const { return xs_; }
    std::span<const uint64_t> z_words() const { return zs_; }

    int phase_exponent() const { return phase_; }
    void set_phase_exponent(int k) { phase_ = ((k % 4) + 4) % 4; }
    std::complex<double> phase() const;
    bool is_hermitian() const { return (phase_ & 1) == 0; }

    /// True when every letter is I (the phase is ignored).
    bool is_identity_letters() const;
    size_t weight() const;
    size_t count(PauliLetter letter) const;

    /// Lexicographic rank of the letters, I<X<Y<Z. Requires num_qubits <= 32.
    uint64_t index() const;

    std::string str() const;
    std::string letters() const;

    bool operator==(const PauliString &other) const = default;
    bool same_letters(const PauliString &other) const {
        return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
    }

  private:
    size_t num_qubits_;
    int phase_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;

    friend PauliString multiply(const PauliString &p, const PauliString &q);
    friend bool commutes(const PauliString &p, const PauliString &q);
};

/// True iff [p, q] = 0, i.e. the symplectic inner product vanishes.
bool commutes(const PauliString &p, const PauliString &q);

/// The operator product p * q with exact phase.
PauliString multiply(const PauliString &p, const PauliString &q);
inline PauliString operator*(const PauliString &p, const PauliString &q) { return multiply(p, q); }

/// Letters of `p` at `qubits`, in that order; the phase is kept.
PauliString restricted(const PauliString &p, std::span<const size_t> qubits);

inline constexpr size_t kDefaultEnumerationCap = 8;

/// All 4^n letter strings with phase +1 in lexicographic order (I<X<Y<Z).
std::vector<PauliString> enumerate_all(size_t num_qubits, size_t cap = kDefaultEnumerationCap);

std::ostream &operator<<(std::ostream &out, const PauliString &p);

struct PauliLettersHash {
    size_t operator()(const PauliString &p) const;
};

}  // namespace wirecut
