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

#include "wirecut/cutting.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wirecut/errors.h"

namespace wirecut {

namespace {

class DisjointSets {
  public:
    explicit DisjointSets(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    size_t find(size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

  private:
    std::vector<size_t> parent_;
};

std::vector<int> gates_per_wire(const Circuit &c) {
    std::vector<int> counts(c.num_qubits(), 0);
    for (const auto &g : c.gates()) {
        for (int i = 0; i < g.arity(); i++) counts[g.qubits[i]]++;
    }
    return counts;
}

uint64_t ipow(uint64_t base, int exp) {
    uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

CutSpec parse_cut_spec(std::string_view text) {
    CutSpec spec;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream fields(raw);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (tokens[0] != "cut" || tokens.size() != 3) {
            throw ParseError(line_no, "expected 'cut <qubit> <position>'");
        }
        Cut cut;
        for (int i = 0; i < 2; i++) {
            char *end = nullptr;
            long v = std::strtol(tokens[i + 1].c_str(), &end, 10);
            if (end == tokens[i + 1].c_str() || *end != '\0' || v < 0) {
                throw ParseError(line_no, "malformed integer '" + tokens[i + 1] + "'");
            }
            (i == 0 ? cut.qubit : cut.position) = static_cast<int>(v);
        }
        spec.cuts.push_back(cut);
    }
    return spec;
}

CutSpec load_cut_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open cut file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_cut_spec(buffer.str());
    } catch (const ParseError &e) {
        throw ParseError(e.line(), e.detail(), path);
    }
}

std::string to_text(const CutSpec &spec) {
    std::ostringstream out;
    for (const auto &c : spec.cuts) out << "cut " << c.qubit << ' ' << c.position << "\n";
    return out.str();
}

void validate_cut_spec(const Circuit &circuit, const CutSpec &spec) {
    auto counts = gates_per_wire(circuit);
    std::set<Cut> seen;
    for (const auto &cut : spec.cuts) {
        if (cut.qubit < 0 || cut.qubit >= circuit.num_qubits()) {
            throw std::invalid_argument("cut on nonexistent qubit " + std::to_string(cut.qubit));
        }
        if (cut.position < 1 || cut.position >= counts[cut.qubit]) {
            throw std::invalid_argument("cut (" + std::to_string(cut.qubit) + ", " +
                                        std::to_string(cut.position) +
                                        ") does not sever an interior segment; wire has " +
                                        std::to_string(counts[cut.qubit]) + " gates");
        }
        if (!seen.insert(cut).second) {
            throw std::invalid_argument("duplicate cut (" + std::to_string(cut.qubit) + ", " +
                                        std::to_string(cut.position) + ")");
        }
    }
}

int Fragment::converted_inputs() const {
    return static_cast<int>(std::count_if(qubits.begin(), qubits.end(),
                                          [](const FragmentQubit &q) { return q.converted; }));
}

std::vector<int> Fragment::label_cuts() const {
    std::vector<int> out;
    for (int q : quantum_outputs) out.push_back(qubits[q].output_cut);
    for (int q : quantum_inputs) out.push_back(qubits[q].input_cut);
    return out;
}

std::vector<int> Fragment::output_wires() const {
    std::vector<int> out;
    for (int q : classical_outputs) out.push_back(qubits[q].wire);
    return out;
}

void Fragment::index_roles() {
    quantum_inputs.clear();
    quantum_outputs.clear();
    classical_inputs.clear();
    classical_outputs.clear();
    for (int q = 0; q < width(); q++) {
        (qubits[q].input == Role::Quantum ? quantum_inputs : classical_inputs).push_back(q);
        (qubits[q].output == Role::Quantum ? quantum_outputs : classical_outputs).push_back(q);
    }
}

std::vector<Fragment> apply_cuts(const Circuit &circuit, const CutSpec &spec) {
    validate_cut_spec(circuit, spec);
    const int n = circuit.num_qubits();

    // Cut positions per wire, sorted, with their cut ids.
    std::vector<std::vector<std::pair<int, int>>> wire_cuts(n);
    for (size_t id = 0; id < spec.cuts.size(); id++) {
        wire_cuts[spec.cuts[id].qubit].emplace_back(spec.cuts[id].position, static_cast<int>(id));
    }
    for (auto &w : wire_cuts) std::sort(w.begin(), w.end());

    // Segment numbering: wire-major, then segment index.
    std::vector<int> segment_base(n + 1, 0);
    for (int w = 0; w < n; w++) segment_base[w + 1] = segment_base[w] + 1 + (int)wire_cuts[w].size();
    const int num_segments = segment_base[n];

    // Which segment each gate touches on each of its wires.
    std::vector<int> seen_on_wire(n, 0);
    std::vector<int> next_cut(n, 0);
    std::vector<std::array<int, 2>> gate_segments;
    DisjointSets sets(num_segments);
    for (const auto &g : circuit.gates()) {
        std::array<int, 2> segs{-1, -1};
        for (int i = 0; i < g.arity(); i++) {
            int w = g.qubits[i];
            while (next_cut[w] < (int)wire_cuts[w].size() &&
                   wire_cuts[w][next_cut[w]].first <= seen_on_wire[w]) {
                next_cut[w]++;
            }
            segs[i] = segment_base[w] + next_cut[w];
            seen_on_wire[w]++;
        }
        if (g.arity() == 2) sets.unite(segs[0], segs[1]);
        gate_segments.push_back(segs);
    }

    // Components in order of their smallest segment.
    std::map<size_t, int> component_of_root;
    std::vector<int> component(num_segments);
    for (int s = 0; s < num_segments; s++) {
        auto [it, inserted] = component_of_root.emplace(sets.find(s), (int)component_of_root.size());
        component[s] = it->second;
    }
    const int num_fragments = static_cast<int>(component_of_root.size());

    std::vector<Fragment> fragments(num_fragments);
    std::vector<int> local_index(num_segments);
    for (int w = 0; w < n; w++) {
        const int last = static_cast<int>(wire_cuts[w].size());
        for (int s = 0; s <= last; s++) {
            int seg = segment_base[w] + s;
            auto &f = fragments[component[seg]];
            FragmentQubit q;
            q.wire = w;
            q.segment = s;
            if (s > 0) {
                q.input = Role::Quantum;
                q.input_cut = wire_cuts[w][s - 1].second;
            }
            if (s < last) {
                q.output = Role::Quantum;
                q.output_cut = wire_cuts[w][s].second;
            }
            local_index[seg] = f.width();
            f.qubits.push_back(q);
        }
    }
    for (int j = 0; j < num_fragments; j++) {
        fragments[j].id = j;
        fragments[j].circuit = Circuit(fragments[j].width());
    }
    for (size_t gi = 0; gi < circuit.size(); gi++) {
        Gate g = circuit.gates()[gi];
        auto &f = fragments[component[gate_segments[gi][0]]];
        for (int i = 0; i < g.arity(); i++) g.qubits[i] = local_index[gate_segments[gi][i]];
        f.circuit.append(g);
    }
    for (auto &f : fragments) f.index_roles();

    // Producer -> consumer edges must form a DAG (a self-loop counts as a cycle).
    std::vector<int> producer(spec.size()), consumer(spec.size());
    for (const auto &f : fragments) {
        for (const auto &q : f.qubits) {
            if (q.output == Role::Quantum) producer[q.output_cut] = f.id;
            if (q.input == Role::Quantum) consumer[q.input_cut] = f.id;
        }
    }
    std::vector<std::vector<int>> edges(num_fragments);
    std::vector<int> indegree(num_fragments, 0);
    for (size_t c = 0; c < spec.size(); c++) {
        if (producer[c] == consumer[c]) {
            throw CutPlanError("cut " + std::to_string(c) + " on qubit " +
                               std::to_string(spec.cuts[c].qubit) +
                               " does not separate its fragment (self-dependency)");
        }
        edges[producer[c]].push_back(consumer[c]);
        indegree[consumer[c]]++;
    }
    std::vector<int> ready;
    for (int j = 0; j < num_fragments; j++) {
        if (indegree[j] == 0) ready.push_back(j);
    }
    int visited = 0;
    while (!ready.empty()) {
        int j = ready.back();
        ready.pop_back();
        visited++;
        for (int k : edges[j]) {
            if (--indegree[k] == 0) ready.push_back(k);
        }
    }
    if (visited != num_fragments) {
        throw CutPlanError("cut plan has a cyclic fragment dependency");
    }
    return fragments;
}

std::string check_fragment(const Fragment &f) {
    const int n = f.width();
    if (f.circuit.num_qubits() != n) return "circuit width differs from qubit list";
    if (n != f.n_qo() + f.n_co()) return "n != n_qo + n_co";
    if (n != f.n_qi() + f.n_ci()) return "n != n_qi + n_ci";
    for (const auto &q : f.qubits) {
        if ((q.input == Role::Quantum) != (q.input_cut >= 0)) return "input role without cut id";
        if ((q.output == Role::Quantum) != (q.output_cut >= 0)) return "output role without cut id";
    }
    return "";
}

std::string_view method_name(Method m) { return m == Method::CutQC ? "cutqc" : "grouped"; }

Method method_from_name(std::string_view name) {
    if (name == "cutqc") return Method::CutQC;
    if (name == "grouped") return Method::Grouped;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

uint64_t subcircuit_count(const Fragment &f, Method method) {
    if (f.n_q() == 0) return 1;
    if (method == Method::CutQC) return ipow(4, f.n_qi()) * ipow(3, f.n_qo());
    return ipow(2, f.n_q()) + 1;
}

int grouped_width(const Fragment &f) { return f.width() + f.n_qi(); }

CutSpec greedy_find_cuts(const Circuit &circuit, int max_width) {
    if (max_width < 1) {
        throw std::invalid_argument("greedy_find_cuts: max_width must be positive");
    }
    struct Score {
        int width;
        uint64_t subcircuits;
        auto operator<=>(const Score &) const = default;
    };
    auto evaluate = [&](const CutSpec &spec) -> std::optional<Score> {
        try {
            auto fragments = apply_cuts(circuit, spec);
            Score s{0, 0};
            for (const auto &f : fragments) {
                s.width = std::max(s.width, grouped_width(f));
                s.subcircuits += subcircuit_count(f, Method::Grouped);
            }
            return s;
        } catch (const CutPlanError &) {
            return std::nullopt;
        }
    };

    // Candidate cuts in topological order: one per gap between consecutive two-qubit gates on a
    // wire. Other positions give the same fragments up to where single-qubit gates land.
    std::vector<int> entangling(circuit.num_qubits(), 0);
    for (const auto &g : circuit.gates()) {
        if (g.arity() == 2) {
            for (int i = 0; i < 2; i++) entangling[g.qubits[i]]++;
        }
    }
    std::vector<int> seen(circuit.num_qubits(), 0);
    std::vector<int> seen_entangling(circuit.num_qubits(), 0);
    std::vector<Cut> candidates;
    for (const auto &g : circuit.gates()) {
        for (int i = 0; i < g.arity(); i++) {
            int w = g.qubits[i];
            ++seen[w];
            if (g.arity() == 2 && ++seen_entangling[w] < entangling[w]) {
                candidates.push_back(Cut{w, seen[w]});
            }
        }
    }

    // Iterative deepening over the number of cuts; the first size with a feasible set wins and
    // ties go to the fewest grouped subcircuits.
    constexpr size_t kMaxEvaluations = size_t{1} << 18;
    auto current = evaluate(CutSpec{});
    if (current && current->width <= max_width) return CutSpec{};
    int best_width = current ? current->width : circuit.num_qubits();
    size_t evaluations = 0;
    for (size_t size = 1; size <= candidates.size(); size++) {
        std::optional<std::pair<Score, CutSpec>> best;
        std::vector<size_t> pick;
        std::function<void(size_t)> recurse = [&](size_t from) {
            if (evaluations >= kMaxEvaluations) return;
            if (pick.size() == size) {
                CutSpec trial;
                for (size_t k : pick) trial.cuts.push_back(candidates[k]);
                evaluations++;
                auto s = evaluate(trial);
                if (!s) return;
                best_width = std::min(best_width, s->width);
                if (s->width <= max_width &&
                    (!best || s->subcircuits < best->first.subcircuits)) {
                    best.emplace(*s, std::move(trial));
                }
                return;
            }
            for (size_t k = from; k + (size - pick.size()) <= candidates.size(); k++) {
                pick.push_back(k);
                recurse(k + 1);
                pick.pop_back();
            }
        };
        recurse(0);
        if (best) return std::move(best->second);
        if (evaluations >= kMaxEvaluations) break;
    }
    throw InfeasibleError("no cut plan found with every fragment width <= " + std::to_string(max_width) +
                          " (best width " + std::to_string(best_width) + ")");
}

}  // namespace wirecut
