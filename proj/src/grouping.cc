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

#include "wirecut/grouping.h"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "wirecut/clifford.h"

namespace wirecut {

namespace {

void check_range(int n, const char *op) {
    if (n < 1 || n > kMaxGroupingQubits) {
        throw std::invalid_argument(std::string(op) + ": qubit count " + std::to_string(n) +
                                    " outside [1, " + std::to_string(kMaxGroupingQubits) + "]");
    }
}

// Clique cover over symplectic codes c = (x << n) | z, qubit 0 in the high bit of each half.
// Candidates are tried in increasing code order (lexicographic over the bit vector
// x_0..x_{n-1} z_0..z_{n-1}). Each clique grows by whole cosets, so a partial clique is
// always closed under multiplication.
class PartitionSearch {
  public:
    explicit PartitionSearch(int n)
        : n_(n),
          total_(uint32_t{1} << (2 * n)),
          group_size_(uint32_t{1} << n),
          covered_(total_, 0),
          in_clique_(total_, 0) {
        covered_[0] = 1;
    }

    std::vector<std::vector<uint32_t>> run() {
        if (!solve()) {
            throw std::logic_error("mub_partition: search exhausted without a partition");
        }
        return groups_;
    }

  private:
    bool commute(uint32_t a, uint32_t b) const {
        uint32_t mask = (uint32_t{1} << n_) - 1;
        uint32_t ax = a >> n_, az = a & mask, bx = b >> n_, bz = b & mask;
        return (std::popcount((ax & bz) ^ (az & bx)) & 1) == 0;
    }

    bool solve() {
        uint32_t p = 1;
        while (p < total_ && covered_[p]) {
            p++;
        }
        if (p == total_) {
            return true;
        }
        std::vector<uint32_t> clique{0, p};
        std::vector<uint32_t> gens{p};
        in_clique_[0] = in_clique_[p] = 1;
        bool ok = grow(clique, gens, p);
        in_clique_[0] = in_clique_[p] = 0;
        return ok;
    }

    bool grow(std::vector<uint32_t> &clique, std::vector<uint32_t> &gens, uint32_t last) {
        if (clique.size() == group_size_) {
            for (uint32_t c : clique) covered_[c] = 1;
            groups_.push_back(clique);
            if (solve()) {
                return true;
            }
            groups_.pop_back();
            for (uint32_t c : clique) {
                if (c != 0) covered_[c] = 0;
            }
            return false;
        }
        for (uint32_t c = last + 1; c < total_; c++) {
            if (covered_[c] || in_clique_[c]) {
                continue;
            }
            if (!std::all_of(gens.begin(), gens.end(), [&](uint32_t g) { return commute(g, c); })) {
                continue;
            }
            // The coset c * clique must be uncovered, with c as its minimum so each
            // subspace is reached through one generator sequence only.
            bool usable = true;
            size_t base = clique.size();
            for (size_t i = 0; i < base && usable; i++) {
                uint32_t e = c ^ clique[i];
                usable = !covered_[e] && e >= c;
            }
            if (!usable) {
                continue;
            }
            for (size_t i = 0; i < base; i++) {
                clique.push_back(c ^ clique[i]);
                in_clique_[clique.back()] = 1;
            }
            gens.push_back(c);
            if (grow(clique, gens, c)) {
                return true;
            }
            gens.pop_back();
            for (size_t i = base; i < clique.size(); i++) in_clique_[clique[i]] = 0;
            clique.resize(base);
        }
        return false;
    }

    int n_;
    uint32_t total_;
    uint32_t group_size_;
    std::vector<char> covered_;
    std::vector<char> in_clique_;
    std::vector<std::vector<uint32_t>> groups_;
};

PauliString from_code(int n, uint32_t code) {
    PauliString p(n);
    uint32_t x = code >> n;
    uint32_t z = code & ((uint32_t{1} << n) - 1);
    for (int q = 0; q < n; q++) {
        bool xb = (x >> (n - 1 - q)) & 1;
        bool zb = (z >> (n - 1 - q)) & 1;
        p.set_letter(q, xb ? (zb ? PauliLetter::Y : PauliLetter::X)
                           : (zb ? PauliLetter::Z : PauliLetter::I));
    }
    return p;
}

uint64_t z_mask_of(const PauliString &p) {
    const size_t n = p.num_qubits();
    uint64_t mask = 0;
    for (size_t q = 0; q < n; q++) {
        if (p.z_bit(q)) {
            mask |= uint64_t{1} << (n - 1 - q);
        }
    }
    return mask;
}

// Removes adjacent H-H pairs on the same qubit (nothing else touching it in between).
Circuit cancel_hadamard_pairs(const Circuit &c) {
    std::vector<Gate> gates = c.gates();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < gates.size() && !changed; i++) {
            if (gates[i].kind != GateKind::H) {
                continue;
            }
            int q = gates[i].qubits[0];
            for (size_t j = i + 1; j < gates.size(); j++) {
                if (!gates[j].acts_on(q)) {
                    continue;
                }
                if (gates[j].kind == GateKind::H) {
                    gates.erase(gates.begin() + j);
                    gates.erase(gates.begin() + i);
                    changed = true;
                }
                break;
            }
        }
    }
    Circuit out(c.num_qubits());
    for (const auto &g : gates) out.append(g);
    return out;
}

}  // namespace

bool CommutingGroup::contains(const PauliString &p) const {
    return std::any_of(members.begin(), members.end(),
                       [&](const PauliString &m) { return m.same_letters(p); });
}

std::vector<CommutingGroup> mub_partition(int num_qubits) {
    check_range(num_qubits, "mub_partition");
    auto cliques = PartitionSearch(num_qubits).run();
    std::vector<CommutingGroup> groups;
    for (size_t g = 0; g < cliques.size(); g++) {
        CommutingGroup group{num_qubits, static_cast<int>(g), {}};
        for (uint32_t code : cliques[g]) {
            if (code != 0) group.members.push_back(from_code(num_qubits, code));
        }
        std::sort(group.members.begin(), group.members.end(),
                  [](const PauliString &a, const PauliString &b) { return a.index() < b.index(); });
        groups.push_back(std::move(group));
    }
    return groups;
}

const std::vector<CommutingGroup> &cached_mub_partition(int num_qubits) {
    check_range(num_qubits, "cached_mub_partition");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<CommutingGroup>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[num_qubits];
    if (!slot) {
        slot = std::make_unique<std::vector<CommutingGroup>>(mub_partition(num_qubits));
    }
    return *slot;
}

bool ValidationReport::failed(const std::string &predicate) const {
    return std::any_of(failures.begin(), failures.end(), [&](const std::string &f) {
        return f.compare(0, predicate.size(), predicate) == 0;
    });
}

ValidationReport validate_partition(std::span<const CommutingGroup> groups) {
    ValidationReport report;
    if (groups.empty()) {
        report.failures.push_back("count: empty partition");
        return report;
    }
    const int n = groups[0].num_qubits;
    const size_t expected_groups = (size_t{1} << n) + 1;
    const size_t expected_size = (size_t{1} << n) - 1;
    if (groups.size() != expected_groups) {
        report.failures.push_back("count: " + std::to_string(groups.size()) + " groups, expected " +
                                  std::to_string(expected_groups));
    }
    std::map<uint64_t, int> owner;
    for (const auto &g : groups) {
        std::string tag = "group " + std::to_string(g.id);
        if (g.num_qubits != n) {
            report.failures.push_back("width: " + tag + " has a different qubit count");
            continue;
        }
        if (g.members.size() != expected_size) {
            report.failures.push_back("size: " + tag + " has " + std::to_string(g.members.size()) +
                                      " members, expected " + std::to_string(expected_size));
        }
        for (size_t i = 0; i < g.members.size(); i++) {
            const auto &a = g.members[i];
            if (a.is_identity_letters()) {
                report.failures.push_back("identity: " + tag + " contains the identity");
            }
            for (size_t j = i + 1; j < g.members.size(); j++) {
                const auto &b = g.members[j];
                if (!commutes(a, b)) {
                    report.failures.push_back("commutation: " + a.str() + " and " + b.str() +
                                              " in " + tag + " anticommute");
                }
                if (a.same_letters(b)) {
                    report.failures.push_back("distinct: " + a.str() + " repeated in " + tag);
                    continue;
                }
                auto product = a * b;
                if (!product.is_identity_letters() && !g.contains(product)) {
                    report.failures.push_back("closure: " + a.str() + " * " + b.str() + " = " +
                                              product.str() + " not in " + tag);
                }
            }
            auto [it, inserted] = owner.emplace(a.index(), g.id);
            if (!inserted && it->second != g.id) {
                report.failures.push_back("disjoint: " + a.str() + " in groups " +
                                          std::to_string(it->second) + " and " +
                                          std::to_string(g.id));
            }
        }
    }
    const uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t k = 1; k < total; k++) {
        if (!owner.count(k)) {
            report.failures.push_back("coverage: " + PauliString::from_index(n, k).str() +
                                      " not covered");
        }
    }
    return report;
}

const ZImage &Diagonalizer::image_of(const PauliString &member) const {
    for (size_t i = 0; i < group.members.size(); i++) {
        if (group.members[i].same_letters(member)) {
            return images[i];
        }
    }
    throw std::invalid_argument("Pauli string " + member.str() + " is not in group " +
                                std::to_string(group.id));
}

Diagonalizer synthesize_diagonalizer(const CommutingGroup &group) {
    const int n = group.num_qubits;
    for (size_t i = 0; i < group.members.size(); i++) {
        for (size_t j = i + 1; j < group.members.size(); j++) {
            if (!commutes(group.members[i], group.members[j])) {
                throw std::invalid_argument("synthesize_diagonalizer: " +
                                            group.members[i].str() + " and " +
                                            group.members[j].str() + " anticommute");
            }
        }
    }

    // n independent generators, chosen greedily in member order.
    std::vector<PauliString> rows;
    std::set<uint64_t> span{PauliString(n).index()};
    for (const auto &m : group.members) {
        if (span.count(m.index())) {
            continue;
        }
        std::set<uint64_t> grown = span;
        for (uint64_t s : span) {
            grown.insert((PauliString::from_index(n, s) * m).index());
        }
        span = std::move(grown);
        rows.push_back(m);
    }
    if (static_cast<int>(rows.size()) != n) {
        throw std::invalid_argument("synthesize_diagonalizer: group " + std::to_string(group.id) +
                                    " has " + std::to_string(rows.size()) +
                                    " independent generators, expected " + std::to_string(n));
    }

    Circuit t(n);
    auto apply = [&](const Gate &g) {
        t.append(g);
        for (auto &r : rows) conjugate_in_place(r, g);
    };
    auto eliminate_x = [&](int col, size_t pivot) {
        for (size_t j = 0; j < rows.size(); j++) {
            if (j != pivot && rows[j].x_bit(col)) {
                rows[j] = rows[j] * rows[pivot];
            }
        }
    };

    // Row-reduce the X block. Columns without an X pivot get a Hadamard; the pure-Z rows
    // are invertible on exactly those columns, so X becomes full rank.
    std::vector<bool> pivot_col(n, false);
    size_t rank = 0;
    for (int col = 0; col < n; col++) {
        size_t r = rank;
        while (r < rows.size() && !rows[r].x_bit(col)) r++;
        if (r == rows.size()) continue;
        std::swap(rows[rank], rows[r]);
        eliminate_x(col, rank);
        pivot_col[col] = true;
        rank++;
    }
    for (int col = 0; col < n; col++) {
        if (!pivot_col[col]) apply(Gate{GateKind::H, {col, -1}});
    }

    // Gauss-Jordan to X = identity; the Z block is then symmetric.
    for (int col = 0; col < n; col++) {
        size_t r = col;
        while (r < rows.size() && !rows[r].x_bit(col)) r++;
        if (r == rows.size()) {
            throw std::logic_error("synthesize_diagonalizer: X block not invertible");
        }
        std::swap(rows[col], rows[r]);
        eliminate_x(col, col);
    }
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (rows[i].z_bit(j)) apply(Gate{GateKind::CZ, {i, j}});
        }
    }
    for (int i = 0; i < n; i++) {
        if (rows[i].z_bit(i)) apply(Gate{GateKind::Sdg, {i, -1}});
    }
    for (int i = 0; i < n; i++) {
        apply(Gate{GateKind::H, {i, -1}});
    }

    Diagonalizer d{group, cancel_hadamard_pairs(t), {}};
    for (const auto &m : group.members) {
        auto image = conjugate_pauli(d.transform, m);
        for (int q = 0; q < n; q++) {
            if (image.x_bit(q)) {
                throw std::logic_error("synthesize_diagonalizer: " + m.str() + " maps to " +
                                       image.str() + ", not a Z string");
            }
        }
        if (!image.is_hermitian()) {
            throw std::logic_error("synthesize_diagonalizer: non-Hermitian image " + image.str());
        }
        d.images.push_back(ZImage{image.phase_exponent() == 0 ? 1 : -1, z_mask_of(image)});
    }
    return d;
}

const std::vector<Diagonalizer> &cached_diagonalizers(int num_qubits) {
    const auto &groups = cached_mub_partition(num_qubits);
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Diagonalizer>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[num_qubits];
    if (!slot) {
        auto out = std::make_unique<std::vector<Diagonalizer>>();
        for (const auto &g : groups) out->push_back(synthesize_diagonalizer(g));
        slot = std::move(out);
    }
    return *slot;
}

int outcome_eigenvalue(const Diagonalizer &d, const PauliString &member, uint64_t bits) {
    const auto &image = d.image_of(member);
    return (std::popcount(image.z_mask & bits) & 1) ? -image.sign : image.sign;
}

int outcome_eigenvalue(const Diagonalizer &d, const PauliString &member, const std::string &bits) {
    if (static_cast<int>(bits.size()) != d.group.num_qubits) {
        throw std::invalid_argument("outcome_eigenvalue: bitstring length " +
                                    std::to_string(bits.size()) + " vs " +
                                    std::to_string(d.group.num_qubits) + " qubits");
    }
    uint64_t k = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("bad bitstring '" + bits + "'");
        k = (k << 1) | (ch == '1');
    }
    return outcome_eigenvalue(d, member, k);
}

}  // namespace wirecut
