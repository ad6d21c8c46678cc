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

#include "wirecut/report.h"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wirecut/grouping.h"

namespace wirecut {

using nlohmann::json;

FragmentRecord make_fragment_record(const Fragment &f, Method method, uint64_t shots) {
    FragmentRecord r;
    r.id = f.id;
    r.n_qi = f.n_qi();
    r.n_qo = f.n_qo();
    r.n_ci = f.n_ci();
    r.n_co = f.n_co();
    r.method = std::string(method_name(method));
    r.subcircuits = subcircuit_count(f, method);
    r.shots = shots;
    if (method == Method::Grouped && f.n_q() > 0) {
        for (const auto &d : cached_diagonalizers(f.n_q())) {
            r.transform_gates += static_cast<int>(d.transform.size());
        }
    }
    return r;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty set");
    std::sort(values.begin(), values.end());
    size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<MedianRecord> compute_medians(std::span<const PointRecord> points) {
    std::vector<std::pair<std::string, uint64_t>> keys;
    for (const auto &p : points) {
        std::pair key{p.method, p.shots};
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    std::vector<MedianRecord> out;
    for (const auto &[method, shots] : keys) {
        std::vector<double> fid, tv;
        for (const auto &p : points) {
            if (p.method == method && p.shots == shots) {
                fid.push_back(p.fidelity);
                tv.push_back(p.tv);
            }
        }
        out.push_back({method, shots, median(fid), median(tv)});
    }
    return out;
}

std::string check_report(const RunReport &report) {
    for (const auto &f : report.fragments) {
        const std::string where = "fragment " + std::to_string(f.id) + ": ";
        if (f.n_qi + f.n_ci != f.n_qo + f.n_co) {
            return where + "n_qi + n_ci != n_qo + n_co";
        }
        uint64_t expected = 1;
        if (f.n_qi + f.n_qo > 0) {
            expected = f.method == "cutqc"
                           ? (uint64_t{1} << (2 * f.n_qi)) * static_cast<uint64_t>(std::pow(3, f.n_qo))
                           : (uint64_t{1} << (f.n_qi + f.n_qo)) + 1;
        }
        if (f.subcircuits != expected) {
            return where + "subcircuit count " + std::to_string(f.subcircuits) + " != " +
                   std::to_string(expected);
        }
    }
    return "";
}

json to_json(const RunReport &report) {
    json j;
    j["config"] = report.config;
    j["exact_verified"] = report.exact_verified;
    j["fragments"] = json::array();
    for (const auto &f : report.fragments) {
        j["fragments"].push_back({{"id", f.id},
                                  {"n_qi", f.n_qi},
                                  {"n_qo", f.n_qo},
                                  {"n_ci", f.n_ci},
                                  {"n_co", f.n_co},
                                  {"method", f.method},
                                  {"subcircuits", f.subcircuits},
                                  {"shots", f.shots},
                                  {"transform_gates", f.transform_gates}});
    }
    j["points"] = json::array();
    for (const auto &p : report.points) {
        j["points"].push_back({{"method", p.method},
                               {"shots", p.shots},
                               {"rep", p.rep},
                               {"fidelity", p.fidelity},
                               {"tv", p.tv}});
    }
    j["medians"] = json::array();
    for (const auto &m : report.medians) {
        j["medians"].push_back(
            {{"method", m.method}, {"shots", m.shots}, {"fidelity", m.fidelity}, {"tv", m.tv}});
    }
    if (!report.distribution.empty()) j["distribution"] = report.distribution;
    return j;
}

RunReport report_from_json(const json &j) {
    RunReport r;
    r.config = j.at("config");
    r.exact_verified = j.at("exact_verified").get<bool>();
    for (const auto &f : j.at("fragments")) {
        r.fragments.push_back({f.at("id").get<int>(), f.at("n_qi").get<int>(), f.at("n_qo").get<int>(),
                               f.at("n_ci").get<int>(), f.at("n_co").get<int>(),
                               f.at("method").get<std::string>(), f.at("subcircuits").get<uint64_t>(),
                               f.at("shots").get<uint64_t>(), f.at("transform_gates").get<int>()});
    }
    for (const auto &p : j.at("points")) {
        r.points.push_back({p.at("method").get<std::string>(), p.at("shots").get<uint64_t>(),
                            p.at("rep").get<int>(), p.at("fidelity").get<double>(),
                            p.at("tv").get<double>()});
    }
    for (const auto &m : j.at("medians")) {
        r.medians.push_back({m.at("method").get<std::string>(), m.at("shots").get<uint64_t>(),
                             m.at("fidelity").get<double>(), m.at("tv").get<double>()});
    }
    if (j.contains("distribution")) {
        r.distribution = j.at("distribution").get<std::map<std::string, double>>();
    }
    return r;
}

std::string dump_report(const RunReport &report) { return to_json(report).dump(2) + "\n"; }

std::string points_to_csv(std::span<const PointRecord> points) {
    std::string out = "method,shots,rep,fidelity,tv\n";
    char buf[128];
    for (const auto &p : points) {
        std::snprintf(buf, sizeof(buf), ",%" PRIu64 ",%d,%.17g,%.17g\n", p.shots, p.rep, p.fidelity,
                      p.tv);
        out += p.method;
        out += buf;
    }
    return out;
}

std::vector<PointRecord> points_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "method,shots,rep,fidelity,tv") {
        throw std::invalid_argument("points CSV: missing or unexpected header");
    }
    std::vector<PointRecord> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
        if (cells.size() != 5) {
            throw std::invalid_argument("points CSV line " + std::to_string(line_no) +
                                        ": expected 5 columns");
        }
        try {
            out.push_back({cells[0], std::stoull(cells[1]), std::stoi(cells[2]), std::stod(cells[3]),
                           std::stod(cells[4])});
        } catch (const std::logic_error &) {
            throw std::invalid_argument("points CSV line " + std::to_string(line_no) +
                                        ": malformed number");
        }
    }
    return out;
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

}  // namespace wirecut
