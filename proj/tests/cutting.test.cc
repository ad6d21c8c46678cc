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

#include <random>
#include <set>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "wirecut/errors.h"

using namespace wirecut;

namespace {

const Circuit kGhz3 = parse_circuit("qubits 3\nh 0\ncx 0 1\ncx 1 2");

}  // namespace

TEST(cutting, parse_cut_spec) {
    auto spec = parse_cut_spec("# two cuts\ncut 1 1\n\ncut 0 2  # trailing\n");
    ASSERT_EQ(spec.size(), 2u);
    ASSERT_EQ(spec.cuts[0], (Cut{1, 1}));
    ASSERT_EQ(spec.cuts[1], (Cut{0, 2}));
    ASSERT_EQ(parse_cut_spec(to_text(spec)), spec);
    ASSERT_TRUE(parse_cut_spec("").empty());
    ASSERT_THROW(parse_cut_spec("cut 1"), ParseError);
    ASSERT_THROW(parse_cut_spec("cut a 1"), ParseError);
    ASSERT_THROW(parse_cut_spec("cut -1 1"), ParseError);
    ASSERT_THROW(parse_cut_spec("wire 0 1"), ParseError);
    try {
        parse_cut_spec("cut 0 1\ncut 0 x\n");
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_EQ(e.line(), 2);
    }
    ASSERT_THROW(load_cut_spec("/nonexistent.cut"), std::runtime_error);
}

TEST(cutting, validate_cut_spec) {
    ASSERT_NO_THROW(validate_cut_spec(kGhz3, parse_cut_spec("cut 1 1")));
    ASSERT_THROW(validate_cut_spec(kGhz3, parse_cut_spec("cut 1 0")), std::invalid_argument);
    ASSERT_THROW(validate_cut_spec(kGhz3, parse_cut_spec("cut 1 2")), std::invalid_argument);
    ASSERT_THROW(validate_cut_spec(kGhz3, parse_cut_spec("cut 0 2")), std::invalid_argument);
    ASSERT_THROW(validate_cut_spec(kGhz3, parse_cut_spec("cut 3 1")), std::invalid_argument);
    Circuit chain = parse_circuit("qubits 1\nh 0\nh 0\nh 0");
    ASSERT_THROW(validate_cut_spec(chain, parse_cut_spec("cut 0 1\ncut 0 1")), std::invalid_argument);
    ASSERT_THROW(apply_cuts(kGhz3, parse_cut_spec("cut 2 1")), std::invalid_argument);
}

TEST(cutting, one_cut_between_two_blocks) {
    auto fragments = apply_cuts(kGhz3, parse_cut_spec("cut 1 1"));
    ASSERT_EQ(fragments.size(), 2u);
    const auto &f1 = fragments[0], &f2 = fragments[1];
    ASSERT_EQ(f1.width(), 2);
    ASSERT_EQ(f1.n_qo(), 1);
    ASSERT_EQ(f1.n_co(), 1);
    ASSERT_EQ(f1.n_qi(), 0);
    ASSERT_EQ(f2.width(), 2);
    ASSERT_EQ(f2.n_qi(), 1);
    ASSERT_EQ(f2.n_co(), 2);
    ASSERT_EQ(f2.n_qo(), 0);
    ASSERT_EQ(f1.output_wires(), (std::vector<int>{0}));
    ASSERT_EQ(f2.output_wires(), (std::vector<int>{1, 2}));
    ASSERT_EQ(f1.label_cuts(), (std::vector<int>{0}));
    ASSERT_EQ(f2.label_cuts(), (std::vector<int>{0}));
    ASSERT_EQ(f1.circuit.size(), 2u);
    ASSERT_EQ(f2.circuit.size(), 1u);
}

TEST(cutting, no_cuts_single_fragment) {
    auto fragments = apply_cuts(kGhz3, CutSpec{});
    ASSERT_EQ(fragments.size(), 1u);
    ASSERT_EQ(fragments[0].n_qi(), 0);
    ASSERT_EQ(fragments[0].n_qo(), 0);
    ASSERT_EQ(fragments[0].n_ci(), 3);
    ASSERT_EQ(fragments[0].n_co(), 3);
    ASSERT_EQ(fragments[0].circuit, kGhz3);
}

TEST(cutting, idle_wire_is_its_own_fragment) {
    auto fragments = apply_cuts(parse_circuit("qubits 3\nh 0\ncx 0 2"), CutSpec{});
    ASSERT_EQ(fragments.size(), 2u);
    ASSERT_EQ(fragments[0].output_wires(), (std::vector<int>{0, 2}));
    ASSERT_EQ(fragments[1].output_wires(), (std::vector<int>{1}));
    ASSERT_TRUE(fragments[1].circuit.empty());
}

TEST(cutting, segment_between_two_cuts) {
    Circuit chain = parse_circuit("qubits 1\nry 0.3 0\nrz 1.1 0\nry 2.0 0");
    auto fragments = apply_cuts(chain, parse_cut_spec("cut 0 1\ncut 0 2"));
    ASSERT_EQ(fragments.size(), 3u);
    const auto &middle = fragments[1];
    ASSERT_EQ(middle.width(), 1);
    ASSERT_EQ(middle.n_qi(), 1);
    ASSERT_EQ(middle.n_qo(), 1);
    ASSERT_EQ(middle.n_co(), 0);
    ASSERT_EQ(middle.label_cuts(), (std::vector<int>{1, 0}));
    ASSERT_EQ(check_fragment(middle), "");
}

TEST(cutting, cyclic_plans_are_rejected) {
    // The single wire 1 keeps both halves of wire 0 in one fragment.
    ASSERT_THROW(apply_cuts(parse_circuit("qubits 2\ncx 0 1\ncx 0 1"), parse_cut_spec("cut 0 1")),
                 CutPlanError);
    // Two fragments feeding each other.
    ASSERT_THROW(apply_cuts(parse_circuit("qubits 3\ncx 0 1\ncx 1 2\ncx 2 0"),
                            parse_cut_spec("cut 1 1\ncut 2 1")),
                 CutPlanError);
}

TEST(cutting, fragment_invariants_on_random_plans) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; trial++) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto bc = fixtures::random_cut_circuit(n, 6, rng);
        auto fragments = apply_cuts(bc.circuit, bc.cuts);
        const int k = static_cast<int>(bc.cuts.size());
        int total_qo = 0, total_qi = 0;
        std::vector<int> produced(k, 0), consumed(k, 0), measured(n, 0);
        size_t gates = 0;
        for (const auto &f : fragments) {
            ASSERT_EQ(check_fragment(f), "");
            ASSERT_EQ(f.width(), f.n_qo() + f.n_co());
            ASSERT_EQ(f.width(), f.n_qi() + f.n_ci());
            total_qo += f.n_qo();
            total_qi += f.n_qi();
            for (int c : f.label_cuts()) ASSERT_TRUE(c >= 0 && c < k);
            for (const auto &q : f.qubits) {
                if (q.output == Role::Quantum) produced[q.output_cut]++;
                if (q.input == Role::Quantum) consumed[q.input_cut]++;
            }
            for (int w : f.output_wires()) measured[w]++;
            gates += f.circuit.size();
        }
        ASSERT_EQ(total_qo, k);
        ASSERT_EQ(total_qi, k);
        ASSERT_EQ(gates, bc.circuit.size());
        for (int c = 0; c < k; c++) {
            ASSERT_EQ(produced[c], 1);
            ASSERT_EQ(consumed[c], 1);
        }
        for (int w = 0; w < n; w++) ASSERT_EQ(measured[w], 1);
    }
}

TEST(cutting, subcircuit_counts) {
    std::mt19937_64 rng(42);
    struct Case {
        int qi, qo;
        uint64_t cutqc, grouped;
    };
    for (Case c : {Case{1, 1, 12, 5}, Case{0, 0, 1, 1}, Case{2, 0, 16, 5}, Case{0, 1, 3, 3}, Case{1, 0, 4, 3},
                   Case{2, 1, 48, 9}}) {
        auto f = fixtures::make_fragment(c.qi, c.qo, 1, rng);
        ASSERT_EQ(subcircuit_count(f, Method::CutQC), c.cutqc) << c.qi << "," << c.qo;
        ASSERT_EQ(subcircuit_count(f, Method::Grouped), c.grouped) << c.qi << "," << c.qo;
    }
}

TEST(cutting, method_names) {
    ASSERT_EQ(method_from_name("cutqc"), Method::CutQC);
    ASSERT_EQ(method_from_name("grouped"), Method::Grouped);
    ASSERT_EQ(method_name(Method::Grouped), "grouped");
    ASSERT_THROW(method_from_name("mip"), std::invalid_argument);
}

TEST(cutting, greedy_brickwork) {
    Circuit brick = random_layered(6, 4, 5);
    CutSpec spec = greedy_find_cuts(brick, 4);
    ASSERT_FALSE(spec.empty());
    for (const auto &f : apply_cuts(brick, spec)) ASSERT_LE(grouped_width(f), 4);
    ASSERT_EQ(greedy_find_cuts(brick, 4), spec);
}

TEST(cutting, greedy_examples) {
    ASSERT_TRUE(greedy_find_cuts(kGhz3, 3).empty());
    ASSERT_THROW(greedy_find_cuts(kGhz3, 1), InfeasibleError);
    ASSERT_THROW(greedy_find_cuts(kGhz3, 0), std::invalid_argument);
    CutSpec ghz_spec = greedy_find_cuts(parse_circuit("qubits 4\nh 0\ncx 0 1\ncx 1 2\ncx 2 3"), 3);
    for (const auto &f : apply_cuts(parse_circuit("qubits 4\nh 0\ncx 0 1\ncx 1 2\ncx 2 3"), ghz_spec)) {
        ASSERT_LE(grouped_width(f), 3);
    }
}
