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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wirecut/circuit.h"
#include "wirecut/cutting.h"
#include "wirecut/engine.h"
#include "wirecut/generators.h"
#include "wirecut/report.h"

namespace wirecut {

/// Built-in circuit source. Repetition r uses seed + r, so a bench sweeps a family.
struct GeneratorSpec {
    std::string kind;  // random | blocks | ghz | qft
    int qubits = 0;
    int depth = 1;
    uint64_t seed = 0;
    std::vector<Block> blocks;  // blocks only

    bool operator==(const GeneratorSpec &) const = default;
};

struct BenchConfig {
    std::string circuit_file;
    std::optional<GeneratorSpec> generator;
    /// A cut-file path, or one of: "none", "auto" (greedy, needs max_width), "natural"
    /// (the block boundaries of a blocks generator).
    std::string cuts = "none";
    int max_width = 0;
    std::vector<MethodPolicy> methods{MethodPolicy::CutQC, MethodPolicy::Grouped};
    std::vector<uint64_t> shots;  // per fragment, strictly increasing powers of two
    int repetitions = 1;
    uint64_t seed = 0;
    bool exact = false;  // add one exact-mode point per method and repetition
    std::string output;  // path prefix for <output>.csv and <output>.json

    bool operator==(const BenchConfig &) const = default;
};

/// Throws std::invalid_argument on a bad field. Relative paths resolve against `base_dir`.
BenchConfig bench_config_from_json(const nlohmann::json &j, const std::string &base_dir = "");
BenchConfig load_bench_config(const std::string &path);
nlohmann::json to_json(const BenchConfig &config);
void validate_bench_config(const BenchConfig &config);

/// Circuit and cut plan used for repetition `rep`.
std::pair<Circuit, CutSpec> bench_instance(const BenchConfig &config, int rep);

/// Sampled reconstructions for every (method, shots, repetition); point i draws from
/// derive_seed(seed, {method, shots, rep}). Grid points run on up to `threads` workers
/// and the report does not depend on that number.
RunReport run_bench(const BenchConfig &config, int threads = 1);

}  // namespace wirecut
