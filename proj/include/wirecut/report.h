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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wirecut/cutting.h"

namespace wirecut {

struct FragmentRecord {
    int id = 0;
    int n_qi = 0;
    int n_qo = 0;
    int n_ci = 0;
    int n_co = 0;
    std::string method;
    uint64_t subcircuits = 0;
    uint64_t shots = 0;  // per-fragment budget; 0 in exact mode
    int transform_gates = 0;

    bool operator==(const FragmentRecord &) const = default;
};

FragmentRecord make_fragment_record(const Fragment &f, Method method, uint64_t shots);

/// One reconstruction: shots = 0 marks exact mode.
struct PointRecord {
    std::string method;
    uint64_t shots = 0;
    int rep = 0;
    double fidelity = 0;
    double tv = 0;

    bool operator==(const PointRecord &) const = default;
};

struct MedianRecord {
    std::string method;
    uint64_t shots = 0;
    double fidelity = 0;
    double tv = 0;

    bool operator==(const MedianRecord &) const = default;
};

struct RunReport {
    nlohmann::json config;
    std::vector<FragmentRecord> fragments;
    std::vector<PointRecord> points;
    std::vector<MedianRecord> medians;
    bool exact_verified = false;
    std::map<std::string, double> distribution;  // reconstructed entries (run only)

    bool operator==(const RunReport &) const = default;
};

double median(std::vector<double> values);

/// Medians per (method, shots) in order of first appearance.
std::vector<MedianRecord> compute_medians(std::span<const PointRecord> points);

/// Returns the first fragment record violating n_qi + n_ci = n_qo + n_co or the
/// subcircuit count formula, or an empty string.
std::string check_report(const RunReport &report);

nlohmann::json to_json(const RunReport &report);
RunReport report_from_json(const nlohmann::json &j);
std::string dump_report(const RunReport &report);

/// Columns method,shots,rep,fidelity,tv; reals printed with round-trip precision.
std::string points_to_csv(std::span<const PointRecord> points);
std::vector<PointRecord> points_from_csv(std::string_view text);

/// Writes `text` to `path`, throwing std::runtime_error on failure.
void write_text_file(const std::string &path, const std::string &text);

}  // namespace wirecut
