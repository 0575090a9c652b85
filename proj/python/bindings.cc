// Copyright 2026 The owc Authors
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "owc/compile.h"
#include "owc/graph_file.h"
#include "owc/sim.h"

namespace py = pybind11;
using namespace owc;

namespace {

/// Angles come in as "1/4pi"-style strings or as radians.
Angle to_angle(const py::handle &h) {
    if (py::isinstance<py::str>(h)) {
        return Angle::parse(h.cast<std::string>());
    }
    return Angle::radians(h.cast<double>());
}

std::string_view status_name(CompileStatus s) {
    switch (s) {
        case CompileStatus::Ok:
            return "ok";
        case CompileStatus::NoStructure:
            return "no-structure";
        case CompileStatus::VerificationFailed:
            return "verification-failed";
        case CompileStatus::SearchExhausted:
            return "search-exhausted";
        case CompileStatus::Stuck:
            return "stuck";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_owc, m) {
    m.doc() = "Measurement patterns to compact circuits";

    py::class_<OpenGraph>(m, "Graph")
        .def(py::init([](std::vector<Vertex> vertices, std::vector<Edge> edges, VertexSet inputs, VertexSet outputs,
                         const py::dict &angles) {
                 std::map<Vertex, Angle> parsed;
                 for (auto [k, v] : angles) {
                     parsed[k.cast<Vertex>()] = to_angle(v);
                 }
                 OpenGraph g(std::move(vertices), std::move(edges), std::move(inputs), std::move(outputs), parsed);
                 if (auto report = validate(g); !report.ok()) {
                     throw std::invalid_argument(report.violations.front());
                 }
                 return g;
             }),
             py::arg("vertices"), py::arg("edges"), py::arg("inputs"), py::arg("outputs"), py::arg("angles"))
        .def_property_readonly("vertices", &OpenGraph::vertices)
        .def_property_readonly("edges", &OpenGraph::edges)
        .def_property_readonly("inputs", &OpenGraph::inputs)
        .def_property_readonly("outputs", &OpenGraph::outputs)
        .def_property_readonly("measured", &OpenGraph::measured)
        .def_property_readonly("angles",
                               [](const OpenGraph &g) {
                                   std::map<Vertex, std::string> out;
                                   for (const auto &[v, a] : g.angles()) {
                                       out[v] = a.str();
                                   }
                                   return out;
                               })
        .def("__eq__", &OpenGraph::operator==);

    py::class_<CorrectionStructure>(m, "Structure")
        .def_property_readonly("kind",
                               [](const CorrectionStructure &s) {
                                   return s.kind == StructureKind::Flow ? "flow" : "gflow";
                               })
        .def_readonly("correcting_sets", &CorrectionStructure::correcting_sets)
        .def_readonly("layers", &CorrectionStructure::layers)
        .def("__str__", &CorrectionStructure::str);

    py::class_<GraphFile>(m, "GraphFile")
        .def_readonly("graph", &GraphFile::graph)
        .def_readonly("correcting_sets", &GraphFile::correcting_sets)
        .def("__str__", &emit_graph_file);

    m.def("parse_graph", &parse_graph_file, py::arg("text"), "Parses graph-file text; ValueError carries line/column.");
    m.def("find_flow", &find_flow, py::arg("graph"));
    m.def("find_gflow", &find_gflow, py::arg("graph"));
    m.def(
        "validate_gflow",
        [](const OpenGraph &g, const std::map<Vertex, VertexSet> &sets) {
            auto check = validate_gflow(g, sets);
            return py::make_tuple(check.structure, check.violations);
        },
        py::arg("graph"), py::arg("correcting_sets"), "Returns (structure or None, violations).");

    py::class_<CompileResult>(m, "CompileResult")
        .def_property_readonly("status", [](const CompileResult &r) { return std::string(status_name(r.status)); })
        .def_property_readonly("exit_code", [](const CompileResult &r) { return exit_code(r.status); })
        .def_property_readonly("ok", &CompileResult::ok)
        .def_readonly("message", &CompileResult::message)
        .def_readonly("structure", &CompileResult::structure)
        .def_property_readonly("extended",
                               [](const CompileResult &r) {
                                   return r.structure ? py::object(py::str(emit_text(r.extended))) : py::none();
                               })
        .def_property_readonly("compact",
                               [](const CompileResult &r) {
                                   return r.ok() ? py::object(py::str(emit_text(r.compact))) : py::none();
                               })
        .def_property_readonly("trace", [](const CompileResult &r) { return r.trace.str(); })
        .def_property_readonly("rules",
                               [](const CompileResult &r) {
                                   std::vector<std::string> out;
                                   for (const auto &s : r.trace.steps) {
                                       out.emplace_back(rule_name(s.rule));
                                   }
                                   return out;
                               })
        .def_readonly("verified", &CompileResult::verified)
        .def_readonly("deviation", &CompileResult::deviation);

    m.def(
        "compile",
        [](const OpenGraph &g, std::optional<std::map<Vertex, VertexSet>> sets, bool verify, double tol,
           size_t max_wires, size_t search_budget, uint64_t seed) {
            CompileOptions o{verify, tol, max_wires, search_budget, seed};
            py::gil_scoped_release release;
            return compile(g, sets, o);
        },
        py::arg("graph"), py::arg("correcting_sets") = py::none(), py::kw_only(), py::arg("verify") = true,
        py::arg("tol") = 1e-9, py::arg("max_wires") = 14, py::arg("search_budget") = 10000, py::arg("seed") = 1);

    m.def(
        "isometry",
        [](const std::string &circuit, size_t max_wires) {
            return circuit_isometry(parse_text(circuit), max_wires).matrix;
        },
        py::arg("circuit"), py::arg("max_wires") = 14,
        "Isometry of circuit text: columns by input origin, rows by output wire id.");
    m.def(
        "max_deviation",
        [](const std::string &a, const std::string &b, size_t max_wires) {
            return max_deviation(circuit_isometry(parse_text(a), max_wires), circuit_isometry(parse_text(b), max_wires));
        },
        py::arg("a"), py::arg("b"), py::arg("max_wires") = 14, "Deviation of two circuit texts up to global phase.");

    py::register_exception<SimulationError>(m, "SimulationError", PyExc_RuntimeError);
}
