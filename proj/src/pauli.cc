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

#include "wirecut/pauli.h"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace wirecut {

namespace {

size_t num_words(size_t n) { return (n + 63) / 64; }

void check_same_size(const PauliString &p, const PauliString &q, const char *op) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(std::string(op) + ": Pauli strings of different lengths (" +
                                    std::to_string(p.num_qubits()) + " vs " +
                                    std::to_string(q.num_qubits()) + ")");
    }
}

}  // namespace

char to_char(PauliLetter letter) { return "IXYZ"[static_cast<int>(letter)]; }

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(num_words(num_qubits), 0), zs_(num_words(num_qubits), 0) {
    if (num_qubits == 0) {
        throw std::invalid_argument("PauliString needs at least one qubit");
    }
}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    size_t pos = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        pos = 1;
        if (pos < text.size() && text[pos] == 'i') {
            phase += 1;
            pos = 2;
        }
    }
    std::string_view body = text.substr(pos);
    if (body.empty()) {
        throw std::invalid_argument("empty Pauli string '" + std::string(text) + "'");
    }
    PauliString p(body.size());
    for (size_t q = 0; q < body.size(); q++) {
        switch (body[q]) {
            case 'I': break;
            case 'X': p.set_letter(q, PauliLetter::X); break;
            case 'Y': p.set_letter(q, PauliLetter::Y); break;
            case 'Z': p.set_letter(q, PauliLetter::Z); break;
            default:
                throw std::invalid_argument("invalid Pauli letter '" + std::string(1, body[q]) +
                                            "' in '" + std::string(text) + "'");
        }
    }
    p.phase_ = phase;
    return p;
}

PauliString PauliString::from_letters(std::span<const PauliLetter> letters, int phase_exponent) {
    PauliString p(letters.size());
    for (size_t q = 0; q < letters.size(); q++) {
        p.set_letter(q, letters[q]);
    }
    p.set_phase_exponent(phase_exponent);
    return p;
}

PauliString PauliString::from_index(size_t num_qubits, uint64_t index) {
    if (num_qubits > 32) {
        throw std::invalid_argument("from_index supports at most 32 qubits");
    }
    PauliString p(num_qubits);
    for (size_t q = num_qubits; q-- > 0;) {
        p.set_letter(q, static_cast<PauliLetter>(index & 3));
        index >>= 2;
    }
    return p;
}

PauliLetter PauliString::letter(size_t q) const {
    bool x = x_bit(q);
    bool z = z_bit(q);
    if (x) {
        return z ? PauliLetter::Y : PauliLetter::X;
    }
    return z ? PauliLetter::Z : PauliLetter::I;
}

void PauliString::set_letter(size_t q, PauliLetter letter) {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
    }
    uint64_t bit = uint64_t{1} << (q & 63);
    bool x = letter == PauliLetter::X || letter == PauliLetter::Y;
    bool z = letter == PauliLetter::Z || letter == PauliLetter::Y;
    xs_[q >> 6] = x ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
    zs_[q >> 6] = z ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

std::complex<double> PauliString::phase() const {
    static constexpr std::complex<double> kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[phase_];
}

bool PauliString::is_identity_letters() const {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

size_t PauliString::count(PauliLetter letter) const {
    size_t total = 0;
    for (size_t q = 0; q < num_qubits_; q++) {
        total += this->letter(q) == letter;
    }
    return total;
}

uint64_t PauliString::index() const {
    if (num_qubits_ > 32) {
        throw std::invalid_argument("index() supports at most 32 qubits");
    }
    uint64_t result = 0;
    for (size_t q = 0; q < num_qubits_; q++) {
        result = (result << 2) | static_cast<uint64_t>(letter(q));
    }
    return result;
}

std::string PauliString::letters() const {
    std::string out(num_qubits_, 'I');
    for (size_t q = 0; q < num_qubits_; q++) {
        out[q] = to_char(letter(q));
    }
    return out;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"", "+i", "-", "-i"};
    return kPrefix[phase_] + letters();
}

bool commutes(const PauliString &p, const PauliString &q) {
    check_same_size(p, q, "commutes");
    int parity = 0;
    for (size_t w = 0; w < p.xs_.size(); w++) {
        parity ^= std::popcount((p.xs_[w] & q.zs_[w]) ^ (p.zs_[w] & q.xs_[w])) & 1;
    }
    return parity == 0;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
    check_same_size(p, q, "multiply");
    // Write each letter as i^{xz} X^x Z^z. Moving Z^{z1} past X^{x2} costs (-1)^{z1.x2}.
    PauliString r(p.num_qubits_);
    int exponent = p.phase_ + q.phase_;
    for (size_t w = 0; w < p.xs_.size(); w++) {
        uint64_t x3 = p.xs_[w] ^ q.xs_[w];
        uint64_t z3 = p.zs_[w] ^ q.zs_[w];
        exponent += std::popcount(p.xs_[w] & p.zs_[w]);
        exponent += std::popcount(q.xs_[w] & q.zs_[w]);
        exponent += 2 * std::popcount(p.zs_[w] & q.xs_[w]);
        exponent -= std::popcount(x3 & z3);
        r.xs_[w] = x3;
        r.zs_[w] = z3;
    }
    r.set_phase_exponent(exponent);
    return r;
}

PauliString restricted(const PauliString &p, std::span<const size_t> qubits) {
    PauliString r(qubits.size());
    for (size_t i = 0; i < qubits.size(); i++) {
        if (qubits[i] >= p.num_qubits()) {
            throw std::invalid_argument("restrict: qubit " + std::to_string(qubits[i]) +
                                        " out of range for " + std::to_string(p.num_qubits()) +
                                        "-qubit string");
        }
        for (size_t j = 0; j < i; j++) {
            if (qubits[j] == qubits[i]) {
                throw std::invalid_argument("restrict: duplicate qubit " + std::to_string(qubits[i]));
            }
        }
        r.set_letter(i, p.letter(qubits[i]));
    }
    r.set_phase_exponent(p.phase_exponent());
    return r;
}

std::vector<PauliString> enumerate_all(size_t num_qubits, size_t cap) {
    if (num_qubits < 1 || num_qubits > cap) {
        throw std::invalid_argument("enumerate_all: qubit count " + std::to_string(num_qubits) +
                                    " outside [1, " + std::to_string(cap) + "]");
    }
    uint64_t total = uint64_t{1} << (2 * num_qubits);
    std::vector<PauliString> out;
    out.reserve(total);
    for (uint64_t k = 0; k < total; k++) {
        out.push_back(PauliString::from_index(num_qubits, k));
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) { return out << p.str(); }

size_t PauliLettersHash::operator()(const PauliString &p) const {
    size_t h = p.num_qubits();
    for (size_t w = 0; w < p.x_words().size(); w++) {
        h = h * 0x9E3779B97F4A7C15ull ^ std::hash<uint64_t>{}(p.x_words()[w]);
        h = h * 0x9E3779B97F4A7C15ull ^ std::hash<uint64_t>{}(p.z_words()[w]);
    }
    return h;
}

}  // namespace wirecut
