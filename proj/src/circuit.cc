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

#include "wirecut/circuit.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wirecut/errors.h"

namespace wirecut {

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
};

constexpr GateInfo kGateTable[] = {
    {GateKind::H, "h"},   {GateKind::X, "x"},     {GateKind::Y, "y"},   {GateKind::Z, "z"},
    {GateKind::S, "s"},   {GateKind::Sdg, "sdg"}, {GateKind::T, "t"},   {GateKind::Tdg, "tdg"},
    {GateKind::RX, "rx"}, {GateKind::RY, "ry"},   {GateKind::RZ, "rz"}, {GateKind::CX, "cx"},
    {GateKind::CZ, "cz"}, {GateKind::Swap, "swap"},
};

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

bool parse_int(const std::string &token, long &out) {
    char *end = nullptr;
    errno = 0;
    out = std::strtol(token.c_str(), &end, 10);
    return errno == 0 && end != token.c_str() && *end == '\0';
}

bool parse_double(const std::string &token, double &out) {
    char *end = nullptr;
    errno = 0;
    out = std::strtod(token.c_str(), &end);
    return errno == 0 && end != token.c_str() && *end == '\0' && std::isfinite(out);
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &info : kGateTable) {
        if (info.kind == kind) {
            return info.name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &info : kGateTable) {
        if (info.name == name) {
            return info.kind;
        }
    }
    return std::nullopt;
}

bool is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CX || kind == GateKind::CZ || kind == GateKind::Swap;
}

bool is_clifford(GateKind kind) {
    return !is_rotation(kind) && kind != GateKind::T && kind != GateKind::Tdg;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0) {
        throw std::invalid_argument("negative qubit count");
    }
}

Circuit &Circuit::append(const Gate &gate) {
    for (int i = 0; i < gate.arity(); i++) {
        if (gate.qubits[i] < 0 || gate.qubits[i] >= num_qubits_) {
            throw std::invalid_argument("gate " + std::string(gate_name(gate.kind)) + " on qubit " +
                                        std::to_string(gate.qubits[i]) + " outside a " +
                                        std::to_string(num_qubits_) + "-qubit circuit");
        }
    }
    if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw std::invalid_argument("two-qubit gate with repeated qubit " +
                                    std::to_string(gate.qubits[0]));
    }
    if (!std::isfinite(gate.angle)) {
        throw std::invalid_argument("non-finite gate angle");
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(GateKind kind, int q) {
    if (is_two_qubit(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " needs two qubits");
    }
    return append(Gate{kind, {q, -1}, 0.0});
}

Circuit &Circuit::append(GateKind kind, int q0, int q1) {
    if (!is_two_qubit(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " takes one qubit");
    }
    return append(Gate{kind, {q0, q1}, 0.0});
}

Circuit &Circuit::append_rotation(GateKind kind, double angle, int q) {
    if (!is_rotation(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " is not a rotation");
    }
    return append(Gate{kind, {q, -1}, angle});
}

Circuit &Circuit::append_mapped(const Circuit &other, const std::vector<int> &qubit_map) {
    if (static_cast<int>(qubit_map.size()) != other.num_qubits()) {
        throw std::invalid_argument("qubit map size does not match circuit width");
    }
    for (Gate g : other.gates()) {
        for (int i = 0; i < g.arity(); i++) {
            g.qubits[i] = qubit_map[g.qubits[i]];
        }
        append(g);
    }
    return *this;
}

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0] == "qubits") {
            long n = 0;
            if (circuit) {
                throw ParseError(line_no, "duplicate 'qubits' header");
            }
            if (tokens.size() != 2 || !parse_int(tokens[1], n) || n < 1) {
                throw ParseError(line_no, "expected 'qubits <n>' with n >= 1");
            }
            circuit.emplace(static_cast<int>(n));
            continue;
        }
        if (!circuit) {
            throw ParseError(line_no, "gate before 'qubits' header");
        }
        auto kind = gate_kind_from_name(tokens[0]);
        if (!kind) {
            throw ParseError(line_no, "unknown gate '" + tokens[0] + "'");
        }
        size_t expected = 1 + (is_rotation(*kind) ? 1 : 0) + (is_two_qubit(*kind) ? 2 : 1);
        if (tokens.size() != expected) {
            throw ParseError(line_no, "gate '" + tokens[0] + "' expects " +
                                          std::to_string(expected - 1) + " operands");
        }
        Gate gate{*kind};
        size_t next = 1;
        if (is_rotation(*kind)) {
            if (!parse_double(tokens[next], gate.angle)) {
                throw ParseError(line_no, "malformed angle '" + tokens[next] + "'");
            }
            next++;
        }
        for (int i = 0; next < tokens.size(); i++, next++) {
            long q = 0;
            if (!parse_int(tokens[next], q)) {
                throw ParseError(line_no, "malformed qubit index '" + tokens[next] + "'");
            }
            if (q < 0 || q >= circuit->num_qubits()) {
                throw ParseError(line_no, "qubit " + tokens[next] + " out of range");
            }
            gate.qubits[i] = static_cast<int>(q);
        }
        try {
            circuit->append(gate);
        } catch (const std::invalid_argument &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!circuit) {
        throw ParseError(line_no, "missing 'qubits' header");
    }
    return *circuit;
}

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open circuit file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_circuit(buffer.str());
    } catch (const ParseError &e) {
        throw ParseError(e.line(), e.detail(), path);
    }
}

std::string to_text(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << "\n";
    for (const auto &g : circuit.gates()) {
        out << gate_name(g.kind);
        if (is_rotation(g.kind)) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
            out << ' ' << buf;
        }
        out << ' ' << g.qubits[0];
        if (g.arity() == 2) {
            out << ' ' << g.qubits[1];
        }
        out << "\n";
    }
    return out.str();
}

Circuit widen(const Circuit &circuit, int extra) {
    if (extra < 0) {
        throw std::invalid_argument("widen: negative ancilla count");
    }
    Circuit out(circuit.num_qubits() + extra);
    for (const auto &g : circuit.gates()) {
        out.append(g);
    }
    return out;
}

}  // namespace wirecut
