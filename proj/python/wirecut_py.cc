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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "wirecut/bench.h"
#include "wirecut/circuit.h"
#include "wirecut/cutting.h"
#include "wirecut/engine.h"
#include "wirecut/errors.h"
#include "wirecut/generators.h"
#include "wirecut/grouping.h"
#include "wirecut/pauli.h"
#include "wirecut/report.h"

namespace py = pybind11;
using namespace wirecut;

namespace {

std::vector<std::string> member_strings(const CommutingGroup &g) {
    std::vector<std::string> out;
    for (const auto &p : g.members) out.push_back(p.letters());
    return out;
}

py::dict fragment_summary(const Fragment &f) {
    py::dict d;
    d["id"] = f.id;
    d["width"] = f.width();
    d["n_qi"] = f.n_qi();
    d["n_qo"] = f.n_qo();
    d["n_ci"] = f.n_ci();
    d["n_co"] = f.n_co();
    return d;
}

}  // namespace

PYBIND11_MODULE(_wirecut, m) {
    m.doc() = "Wire cutting with grouped Pauli measurements";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CutPlanError>(m, "CutPlanError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init(&PauliString::parse), py::arg("text"))
        .def_property_readonly("num_qubits", &PauliString::num_qubits)
        .def_property_readonly("phase_exponent", &PauliString::phase_exponent)
        .def_property_readonly("letters", &PauliString::letters)
        .def("weight", &PauliString::weight)
        .def("index", &PauliString::index)
        .def("commutes", [](const PauliString &a, const PauliString &b) { return commutes(a, b); })
        .def("__mul__", [](const PauliString &a, const PauliString &b) { return a * b; })
        .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; })
        .def("__hash__", [](const PauliString &p) { return py::hash(py::str(p.str())); })
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; });

    py::class_<Circuit>(m, "Circuit")
        .def_static("parse", &parse_circuit, py::arg("text"))
        .def_static("load", &load_circuit, py::arg("path"))
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def("__len__", &Circuit::size)
        .def("to_text", [](const Circuit &c) { return to_text(c); })
        .def("__eq__", [](const Circuit &a, const Circuit &b) { return a == b; });

    m.def("ghz", &ghz, py::arg("num_qubits"));
    m.def("qft", &qft, py::arg("num_qubits"), py::arg("seed") = 0);
    m.def("random_layered", &random_layered, py::arg("num_qubits"), py::arg("depth"), py::arg("seed"));
    m.def(
        "random_blocks",
        [](int num_qubits, int depth, uint64_t seed, const std::vector<std::pair<int, int>> &blocks) {
            std::vector<Block> bs;
            for (auto [first, width] : blocks) bs.push_back(Block{first, width});
            auto out = random_blocks(num_qubits, bs, depth, seed);
            return py::make_tuple(out.circuit, out.cuts);
        },
        py::arg("num_qubits"), py::arg("depth"), py::arg("seed"), py::arg("blocks"));

    py::class_<CutSpec>(m, "CutSpec")
        .def(py::init([](const std::vector<std::pair<int, int>> &cuts) {
                 CutSpec s;
                 for (auto [q, p] : cuts) s.cuts.push_back(Cut{q, p});
                 return s;
             }),
             py::arg("cuts") = std::vector<std::pair<int, int>>{})
        .def_static("parse", &parse_cut_spec, py::arg("text"))
        .def_static("load", &load_cut_spec, py::arg("path"))
        .def_property_readonly("cuts",
                               [](const CutSpec &s) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto &c : s.cuts) out.emplace_back(c.qubit, c.position);
                                   return out;
                               })
        .def("__len__", [](const CutSpec &s) { return s.cuts.size(); })
        .def("to_text", [](const CutSpec &s) { return to_text(s); });

    py::class_<Fragment>(m, "Fragment")
        .def_readonly("id", &Fragment::id)
        .def_readonly("circuit", &Fragment::circuit)
        .def_property_readonly("width", &Fragment::width)
        .def_property_readonly("n_qi", &Fragment::n_qi)
        .def_property_readonly("n_qo", &Fragment::n_qo)
        .def_property_readonly("n_ci", &Fragment::n_ci)
        .def_property_readonly("n_co", &Fragment::n_co)
        .def("summary", &fragment_summary)
        .def("subcircuit_count", [](const Fragment &f, const std::string &method) {
            return subcircuit_count(f, method_from_name(method));
        }, py::arg("method"))
        .def_property_readonly("grouped_width", [](const Fragment &f) { return grouped_width(f); });

    m.def("apply_cuts", &apply_cuts, py::arg("circuit"), py::arg("cuts"));
    m.def("greedy_find_cuts", &greedy_find_cuts, py::arg("circuit"), py::arg("max_width"));

    m.def(
        "mub_partition",
        [](int n) {
            std::vector<std::vector<std::string>> out;
            for (const auto &g : cached_mub_partition(n)) out.push_back(member_strings(g));
            return out;
        },
        py::arg("num_qubits"), "Commuting groups of the non-identity Paulis, as letter strings.");
    m.def(
        "diagonalizer",
        [](int n, int group) {
            const auto &all = cached_diagonalizers(n);
            if (group < 0 || group >= static_cast<int>(all.size())) {
                throw py::index_error("group index out of range");
            }
            const auto &d = all[group];
            std::vector<std::string> images;
            for (const auto &im : d.images) {
                std::string text = im.sign > 0 ? "+" : "-";
                for (int q = 0; q < n; q++) text += (im.z_mask >> (n - 1 - q)) & 1 ? 'Z' : 'I';
                images.push_back(text);
            }
            return py::make_tuple(d.transform, images);
        },
        py::arg("num_qubits"), py::arg("group"),
        "The Clifford transform of one group and the Z-type image of each member.");

    m.def(
        "run",
        [](const Circuit &circuit, const CutSpec &cuts, const std::string &method,
           std::optional<uint64_t> shots, uint64_t seed, int threads) {
            PipelineOptions o;
            o.policy = policy_from_name(method);
            o.budget = shots ? Budget::Shots(*shots) : Budget::Exact();
            o.seed = seed;
            o.threads = threads;
            PipelineResult r;
            {
                py::gil_scoped_release release;
                r = run_pipeline(circuit, cuts, o);
            }
            py::dict out;
            py::list methods;
            for (auto mth : r.methods) methods.append(std::string(method_name(mth)));
            out["fragments"] = r.fragments;
            out["methods"] = methods;
            out["distribution"] = r.reconstructed;
            out["reference"] = std::vector<double>(r.reference.values().begin(), r.reference.values().end());
            out["fidelity"] = r.fidelity;
            out["tv"] = r.tv;
            return out;
        },
        py::arg("circuit"), py::arg("cuts"), py::arg("method") = "auto", py::arg("shots") = py::none(),
        py::arg("seed") = 0, py::arg("threads") = 1,
        "Cuts and executes `circuit`; returns the reconstructed and reference distributions.");

    m.def(
        "bench",
        [](const std::string &config_json, const std::string &base_dir, int threads) {
            BenchConfig config = bench_config_from_json(nlohmann::json::parse(config_json), base_dir);
            RunReport report;
            {
                py::gil_scoped_release release;
                report = run_bench(config, threads);
            }
            return dump_report(report);
        },
        py::arg("config_json"), py::arg("base_dir") = "", py::arg("threads") = 1,
        "Runs a benchmark from a JSON config and returns the JSON report text.");
}
