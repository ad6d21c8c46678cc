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

#include "wirecut/bench.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "wirecut/rng.h"

namespace wirecut {

using nlohmann::json;

namespace {

std::string resolve_path(const std::string &path, const std::string &base_dir) {
    if (path.empty() || base_dir.empty() || std::filesystem::path(path).is_absolute()) return path;
    return (std::filesystem::path(base_dir) / path).lexically_normal().string();
}

bool is_cut_keyword(const std::string &cuts) {
    return cuts == "none" || cuts == "auto" || cuts == "natural";
}

template <typename T>
T field(const json &j, const char *name, T fallback) {
    if (!j.contains(name)) return fallback;
    try {
        return j.at(name).get<T>();
    } catch (const json::exception &) {
        throw std::invalid_argument(std::string("bench config: field '") + name + "' has the wrong type");
    }
}

}  // namespace

BenchConfig bench_config_from_json(const json &j, const std::string &base_dir) {
    if (!j.is_object()) throw std::invalid_argument("bench config: expected a JSON object");
    static const char *known[] = {"circuit", "generator", "cuts", "max_width", "methods", "shots",
                                  "repetitions", "seed", "exact", "output"};
    for (const auto &[key, value] : j.items()) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            throw std::invalid_argument("bench config: unknown field '" + key + "'");
        }
    }
    BenchConfig c;
    c.circuit_file = resolve_path(field<std::string>(j, "circuit", ""), base_dir);
    if (j.contains("generator")) {
        const json &g = j.at("generator");
        if (!g.is_object()) throw std::invalid_argument("bench config: 'generator' must be an object");
        GeneratorSpec spec;
        spec.kind = field<std::string>(g, "kind", "");
        spec.qubits = field<int>(g, "qubits", 0);
        spec.depth = field<int>(g, "depth", 1);
        spec.seed = field<uint64_t>(g, "seed", 0);
        for (const auto &b : field<std::vector<std::vector<int>>>(g, "blocks", {})) {
            if (b.size() != 2) throw std::invalid_argument("bench config: a block is [first, width]");
            spec.blocks.push_back({b[0], b[1]});
        }
        c.generator = spec;
    }
    c.cuts = field<std::string>(j, "cuts", "none");
    if (!is_cut_keyword(c.cuts)) c.cuts = resolve_path(c.cuts, base_dir);
    c.max_width = field<int>(j, "max_width", 0);
    if (j.contains("methods")) {
        c.methods.clear();
        for (const auto &m : field<std::vector<std::string>>(j, "methods", {})) {
            c.methods.push_back(policy_from_name(m));
        }
    }
    c.shots = field<std::vector<uint64_t>>(j, "shots", {});
    c.repetitions = field<int>(j, "repetitions", 1);
    c.seed = field<uint64_t>(j, "seed", 0);
    c.exact = field<bool>(j, "exact", false);
    c.output = resolve_path(field<std::string>(j, "output", ""), base_dir);
    validate_bench_config(c);
    return c;
}

BenchConfig load_bench_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return bench_config_from_json(j, std::filesystem::path(path).parent_path().string());
}

json to_json(const BenchConfig &c) {
    json j;
    if (!c.circuit_file.empty()) j["circuit"] = c.circuit_file;
    if (c.generator) {
        json blocks = json::array();
        for (const auto &b : c.generator->blocks) blocks.push_back({b.first, b.width});
        j["generator"] = {{"kind", c.generator->kind},
                          {"qubits", c.generator->qubits},
                          {"depth", c.generator->depth},
                          {"seed", c.generator->seed}};
        if (!c.generator->blocks.empty()) j["generator"]["blocks"] = blocks;
    }
    j["cuts"] = c.cuts;
    if (c.cuts == "auto") j["max_width"] = c.max_width;
    j["methods"] = json::array();
    for (auto m : c.methods) j["methods"].push_back(std::string(policy_name(m)));
    j["shots"] = c.shots;
    j["repetitions"] = c.repetitions;
    j["seed"] = c.seed;
    j["exact"] = c.exact;
    if (!c.output.empty()) j["output"] = c.output;
    return j;
}

void validate_bench_config(const BenchConfig &c) {
    if (c.circuit_file.empty() == !c.generator) {
        throw std::invalid_argument("bench config: give exactly one of 'circuit' and 'generator'");
    }
    if (c.generator) {
        const auto &g = *c.generator;
        if (g.kind != "random" && g.kind != "blocks" && g.kind != "ghz" && g.kind != "qft") {
            throw std::invalid_argument("bench config: unknown generator '" + g.kind + "'");
        }
        if (g.qubits < 1) throw std::invalid_argument("bench config: generator needs qubits >= 1");
        if (g.kind == "blocks" && g.blocks.empty()) {
            throw std::invalid_argument("bench config: blocks generator needs 'blocks'");
        }
    }
    if (c.cuts == "natural" && (!c.generator || c.generator->kind != "blocks")) {
        throw std::invalid_argument("bench config: 'natural' cuts need the blocks generator");
    }
    if (c.cuts == "auto" && c.max_width < 1) {
        throw std::invalid_argument("bench config: 'auto' cuts need max_width >= 1");
    }
    if (c.methods.empty()) throw std::invalid_argument("bench config: no methods");
    if (c.shots.empty() && !c.exact) {
        throw std::invalid_argument("bench config: empty shot ladder and exact disabled");
    }
    for (size_t i = 0; i < c.shots.size(); i++) {
        if (c.shots[i] == 0 || (c.shots[i] & (c.shots[i] - 1)) != 0) {
            throw std::invalid_argument("bench config: shots must be powers of two");
        }
        if (i > 0 && c.shots[i] <= c.shots[i - 1]) {
            throw std::invalid_argument("bench config: shot ladder must be strictly increasing");
        }
    }
    if (c.repetitions < 1) throw std::invalid_argument("bench config: repetitions must be >= 1");
}

std::pair<Circuit, CutSpec> bench_instance(const BenchConfig &c, int rep) {
    Circuit circuit;
    CutSpec natural;
    if (c.generator) {
        const auto &g = *c.generator;
        const uint64_t seed = g.seed + static_cast<uint64_t>(rep);
        if (g.kind == "random") {
            circuit = random_layered(g.qubits, g.depth, seed);
        } else if (g.kind == "blocks") {
            auto bc = random_blocks(g.qubits, g.blocks, g.depth, seed);
            circuit = std::move(bc.circuit);
            natural = std::move(bc.cuts);
        } else if (g.kind == "ghz") {
            circuit = ghz(g.qubits);
        } else {
            circuit = qft(g.qubits, seed);
        }
    } else {
        circuit = load_circuit(c.circuit_file);
    }
    CutSpec spec;
    if (c.cuts == "natural") {
        spec = natural;
    } else if (c.cuts == "auto") {
        spec = greedy_find_cuts(circuit, c.max_width);
    } else if (c.cuts != "none") {
        spec = load_cut_spec(c.cuts);
    }
    return {std::move(circuit), std::move(spec)};
}

RunReport run_bench(const BenchConfig &c, int threads) {
    validate_bench_config(c);
    RunReport report;
    report.config = to_json(c);

    std::vector<std::pair<Circuit, CutSpec>> instances;
    std::vector<std::vector<Fragment>> fragments;
    for (int rep = 0; rep < c.repetitions; rep++) {
        instances.push_back(bench_instance(c, rep));
        fragments.push_back(apply_cuts(instances.back().first, instances.back().second));
    }

    struct Job {
        size_t method;
        uint64_t shots;  // 0 for exact
        int rep;
    };
    std::vector<Job> jobs;
    for (size_t m = 0; m < c.methods.size(); m++) {
        if (c.exact) {
            for (int rep = 0; rep < c.repetitions; rep++) jobs.push_back({m, 0, rep});
        }
        for (uint64_t shots : c.shots) {
            for (int rep = 0; rep < c.repetitions; rep++) jobs.push_back({m, shots, rep});
        }
    }

    report.points.resize(jobs.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            try {
                const Job &job = jobs[i];
                PipelineOptions options;
                options.policy = c.methods[job.method];
                options.budget = job.shots ? Budget::Shots(job.shots) : Budget::Exact();
                options.seed = derive_seed(c.seed, {job.method, job.shots, static_cast<uint64_t>(job.rep)});
                const auto &[circuit, spec] = instances[job.rep];
                auto r = run_pipeline(circuit, spec, options);
                report.points[i] = {std::string(policy_name(options.policy)), job.shots, job.rep,
                                    r.fidelity, r.tv};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const size_t workers = std::min<size_t>(jobs.size(), static_cast<size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; w++) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Fragment records describe repetition 0 under every method.
    for (auto policy : c.methods) {
        for (const auto &f : fragments[0]) {
            uint64_t budget = c.shots.empty() ? 0 : c.shots.back();
            report.fragments.push_back(make_fragment_record(f, resolve_method(f, policy), budget));
        }
    }
    report.medians = compute_medians(report.points);

    report.exact_verified = true;
    for (int rep = 0; rep < c.repetitions && report.exact_verified; rep++) {
        PipelineOptions options;
        options.policy = MethodPolicy::Auto;
        auto r = run_pipeline(instances[rep].first, instances[rep].second, options);
        report.exact_verified = r.tv < 1e-9;
    }
    return report;
}

}  // namespace wirecut
