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

#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "wirecut/bench.h"
#include "wirecut/cutting.h"
#include "wirecut/engine.h"
#include "wirecut/errors.h"
#include "wirecut/grouping.h"
#include "wirecut/report.h"

namespace {

using namespace wirecut;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

class InvariantFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string circuit;
    std::string cuts;
    std::string method = "auto";
    uint64_t shots = 0;
    uint64_t seed = 0;
    bool exact = false;
    int max_width = 0;
    std::string out;
    int threads = 1;
    int qubits = 0;
    std::string config;
};

void emit(const std::string &out, const std::string &text) {
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

CutSpec resolve_cuts(const Circuit &circuit, const Options &o) {
    if (o.cuts.empty() || o.cuts == "none") return {};
    if (o.cuts == "auto") {
        if (o.max_width < 1) throw std::invalid_argument("--cuts auto requires --max-width");
        return greedy_find_cuts(circuit, o.max_width);
    }
    return load_cut_spec(o.cuts);
}

void check_fragments(const std::vector<Fragment> &fragments) {
    for (const auto &f : fragments) {
        if (auto why = check_fragment(f); !why.empty()) {
            throw InvariantFailure("fragment " + std::to_string(f.id) + ": " + why);
        }
    }
}

int cmd_run(const Options &o) {
    if (o.exact && o.shots) throw std::invalid_argument("--exact and --shots are exclusive");
    Circuit circuit = load_circuit(o.circuit);
    CutSpec spec = resolve_cuts(circuit, o);
    PipelineOptions options;
    options.policy = policy_from_name(o.method);
    options.budget = o.shots ? Budget::Shots(o.shots) : Budget::Exact();
    options.seed = o.seed;
    options.threads = o.threads;
    PipelineResult r = run_pipeline(circuit, spec, options);
    check_fragments(r.fragments);

    RunReport report;
    report.config = {{"circuit", o.circuit},
                     {"cuts", to_text(spec)},
                     {"method", o.method},
                     {"shots", o.shots},
                     {"seed", o.seed},
                     {"exact", !o.shots}};
    for (size_t j = 0; j < r.fragments.size(); j++) {
        report.fragments.push_back(make_fragment_record(r.fragments[j], r.methods[j], o.shots));
    }
    report.points.push_back({o.method, o.shots, 0, r.fidelity, r.tv});
    report.medians = compute_medians(report.points);
    for (size_t x = 0; x < r.reconstructed.size(); x++) {
        if (r.reconstructed[x] != 0.0) {
            report.distribution[bitstring(x, circuit.num_qubits())] = r.reconstructed[x];
        }
    }
    if (o.shots) {
        PipelineOptions exact = options;
        exact.budget = Budget::Exact();
        report.exact_verified = run_pipeline(circuit, spec, exact).tv < 1e-9;
    } else {
        report.exact_verified = r.tv < 1e-9;
    }
    emit(o.out, dump_report(report));
    if (auto why = check_report(report); !why.empty()) throw InvariantFailure(why);
    if (!report.exact_verified) {
        throw InvariantFailure("exact reconstruction differs from the uncut distribution");
    }
    return kExitOk;
}

int cmd_count(const Options &o) {
    Circuit circuit = load_circuit(o.circuit);
    CutSpec spec = resolve_cuts(circuit, o);
    auto fragments = apply_cuts(circuit, spec);
    check_fragments(fragments);

    std::ostringstream csv, table;
    csv << "fragment,n_qi,n_qo,n_ci,n_co,cutqc,grouped,auto\n";
    char line[160];
    std::snprintf(line, sizeof(line), "%-9s %5s %5s %5s %5s %8s %8s %8s\n", "fragment", "n_qi", "n_qo",
                  "n_ci", "n_co", "cutqc", "grouped", "auto");
    table << line;
    uint64_t totals[3] = {0, 0, 0};
    for (const auto &f : fragments) {
        uint64_t counts[3] = {subcircuit_count(f, Method::CutQC), subcircuit_count(f, Method::Grouped),
                              subcircuit_count(f, select_method(f))};
        for (int i = 0; i < 3; i++) totals[i] += counts[i];
        csv << f.id << ',' << f.n_qi() << ',' << f.n_qo() << ',' << f.n_ci() << ',' << f.n_co() << ','
            << counts[0] << ',' << counts[1] << ',' << counts[2] << "\n";
        std::snprintf(line, sizeof(line), "%-9d %5d %5d %5d %5d %8llu %8llu %8llu\n", f.id, f.n_qi(),
                      f.n_qo(), f.n_ci(), f.n_co(), (unsigned long long)counts[0],
                      (unsigned long long)counts[1], (unsigned long long)counts[2]);
        table << line;
    }
    csv << "total,,,,," << totals[0] << ',' << totals[1] << ',' << totals[2] << "\n";
    std::snprintf(line, sizeof(line), "%-9s %5s %5s %5s %5s %8llu %8llu %8llu\n", "total", "", "", "", "",
                  (unsigned long long)totals[0], (unsigned long long)totals[1],
                  (unsigned long long)totals[2]);
    table << line;
    std::cout << table.str();
    if (!o.out.empty()) write_text_file(o.out, csv.str());
    return kExitOk;
}

int cmd_bench(const Options &o, bool seed_given) {
    BenchConfig config = load_bench_config(o.config);
    if (seed_given) config.seed = o.seed;
    if (!o.out.empty()) config.output = o.out;
    RunReport report = run_bench(config, o.threads);
    if (config.output.empty()) {
        std::cout << dump_report(report);
    } else {
        write_text_file(config.output + ".csv", points_to_csv(report.points));
        write_text_file(config.output + ".json", dump_report(report));
        for (const auto &m : report.medians) {
            std::printf("%-8s shots=%-8llu median fidelity=%.6f median tv=%.6f\n", m.method.c_str(),
                        (unsigned long long)m.shots, m.fidelity, m.tv);
        }
    }
    if (auto why = check_report(report); !why.empty()) throw InvariantFailure(why);
    if (!report.exact_verified) {
        throw InvariantFailure("exact reconstruction differs from the uncut distribution");
    }
    return kExitOk;
}

int cmd_groups(const Options &o) {
    if (o.qubits < 1 || o.qubits > kMaxGroupingQubits) {
        throw std::invalid_argument("--qubits must be in [1, " + std::to_string(kMaxGroupingQubits) + "]");
    }
    const auto &groups = cached_mub_partition(o.qubits);
    std::ostringstream out;
    for (const auto &g : groups) {
        out << "group " << g.id << ":";
        for (const auto &p : g.members) out << ' ' << p.str();
        out << "\n";
    }
    emit(o.out, out.str());
    if (!validate_partition(groups).ok()) throw InvariantFailure("partition failed validation");
    return kExitOk;
}

int cmd_cut(const Options &o) {
    if (o.max_width < 1) throw std::invalid_argument("--max-width must be at least 1");
    Circuit circuit = load_circuit(o.circuit);
    CutSpec spec = greedy_find_cuts(circuit, o.max_width);
    auto fragments = apply_cuts(circuit, spec);
    check_fragments(fragments);
    std::string text = "# " + std::to_string(fragments.size()) + " fragments, max grouped width ";
    int width = 0;
    for (const auto &f : fragments) width = std::max(width, grouped_width(f));
    text += std::to_string(width) + "\n" + to_text(spec);
    emit(o.out, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Wire cutting with grouped Pauli measurements"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--circuit", o.circuit, "Circuit file")->required();
        cmd->add_option("--cuts", o.cuts, "Cut-spec file, or 'auto' for the greedy finder");
        cmd->add_option("--max-width", o.max_width, "Width bound for --cuts auto");
        cmd->add_option("--out", o.out, "Output path (default: stdout)");
    };

    auto *run = app.add_subcommand("run", "Cut, execute and reconstruct a circuit");
    add_common(run);
    run->add_option("--method", o.method, "cutqc, grouped or auto")->check(CLI::IsMember({"cutqc", "grouped", "auto"}));
    auto *shots = run->add_option("--shots", o.shots, "Shots per fragment")->check(CLI::PositiveNumber);
    run->add_option("--seed", o.seed, "Master seed");
    run->add_flag("--exact", o.exact, "Use exact probabilities (default without --shots)")->excludes(shots);
    run->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto *count = app.add_subcommand("count", "Subcircuit counts per fragment");
    add_common(count);

    auto *bench = app.add_subcommand("bench", "Fidelity against shots for a configured family");
    bench->add_option("config", o.config, "Bench configuration (JSON)")->required();
    auto *seed = bench->add_option("--seed", o.seed, "Override the master seed");
    bench->add_option("--out", o.out, "Output prefix for .csv and .json");
    bench->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto *groups = app.add_subcommand("groups", "Print the commuting-group partition");
    groups->add_option("--qubits", o.qubits, "Number of qubits")->required();
    groups->add_option("--out", o.out, "Output path (default: stdout)");

    auto *cut = app.add_subcommand("cut", "Greedy cut search under a width bound");
    cut->add_option("--circuit", o.circuit, "Circuit file")->required();
    cut->add_option("--max-width", o.max_width, "Largest grouped fragment width")->required();
    cut->add_option("--out", o.out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run) return cmd_run(o);
        if (*count) return cmd_count(o);
        if (*bench) return cmd_bench(o, seed->count() > 0);
        if (*groups) return cmd_groups(o);
        if (*cut) return cmd_cut(o);
    } catch (const InvariantFailure &e) {
        std::cerr << "wirecut: invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception &e) {
        std::cerr << "wirecut: error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
