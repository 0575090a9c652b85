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

// owc: graph file -> compact circuit.
//
//   owc flow example1.graph
//   owc compile example1.graph -o example1.circ --trace example1.trace
//   owc verify extended.circ example1.circ

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "owc/compile.h"
#include "owc/extend.h"
#include "owc/graph_file.h"
#include "owc/sim.h"

using namespace owc;

namespace {

constexpr int kParseFailure = 2;
constexpr int kNoStructure = 3;
constexpr int kMismatch = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path + ": cannot read");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw std::runtime_error(path + ": cannot write");
    }
}

GraphFile load_graph(const std::string &path) {
    auto text = read_file(path);
    try {
        return parse_graph_file(text);
    } catch (const GraphFileError &e) {
        throw InputError(path + ": " + e.what());
    }
}

Circuit load_circuit(const std::string &path) {
    auto text = read_file(path);
    try {
        return parse_text(text);
    } catch (const std::invalid_argument &e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string sci(double x) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

int cmd_flow(const std::string &path) {
    auto file = load_graph(path);
    const auto &g = file.graph;
    auto flow = find_flow(g);
    auto gflow = find_gflow(g);
    std::cout << "flow: " << (flow ? "yes" : "no") << "\n";
    if (flow) {
        std::cout << flow->str();
    }
    std::cout << "gflow: " << (gflow ? "yes" : "no") << "\n";
    if (gflow) {
        std::cout << gflow->str();
    }
    if (!file.correcting_sets) {
        return flow || gflow ? 0 : kNoStructure;
    }
    // The supplied sets are what compile uses, so they decide the exit code.
    GflowCheck check;
    try {
        check = validate_gflow(g, *file.correcting_sets);
    } catch (const std::invalid_argument &e) {
        check.violations = {e.what()};
    }
    if (!check.ok()) {
        std::cout << "supplied correcting sets: invalid\n";
        for (const auto &v : check.violations) {
            std::cout << "  " << v << "\n";
        }
        return kNoStructure;
    }
    auto as_flow = *check.structure;
    as_flow.kind = StructureKind::Flow;
    bool is_flow = check_structure(g, as_flow).empty();
    std::cout << "supplied correcting sets: " << (is_flow ? "flow" : "gflow (not a flow)") << "\n"
              << check.structure->str();
    return 0;
}

int cmd_compile(const std::string &path, const std::string &output, const std::string &trace_path,
                const std::string &extended_path, const CompileOptions &options) {
    auto file = load_graph(path);
    auto r = compile(file.graph, file.correcting_sets, options);
    if (!r.structure) {
        std::cerr << "error: " << r.message << "\n";
        return exit_code(r.status);
    }
    if (!extended_path.empty()) {
        write_file(extended_path, emit_text(r.extended));
    }
    if (!trace_path.empty()) {
        write_file(trace_path, r.trace.str());
    }
    if (!r.ok()) {
        std::cerr << "error: " << r.message << "\n";
        if (!trace_path.empty()) {
            std::cerr << "partial trace (" << r.trace.steps.size() << " steps) written to " << trace_path << "\n";
        }
        return exit_code(r.status);
    }
    auto text = emit_text(r.compact);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        write_file(output, text);
    }
    std::cerr << (r.structure->kind == StructureKind::Flow ? "flow" : "gflow") << ": " << r.extended.wires.size()
              << " -> " << r.compact.wires.size() << " wires, " << r.extended.gates.size() << " -> "
              << r.compact.gates.size() << " gates, " << r.trace.steps.size() << " steps, "
              << (r.verified ? "verified (max deviation " + sci(r.deviation) + ")" : "not verified") << "\n";
    return 0;
}

int cmd_verify(const std::string &a_path, const std::string &b_path, double tol, size_t max_wires) {
    auto a = load_circuit(a_path);
    auto b = load_circuit(b_path);
    Isometry ia, ib;
    try {
        ia = circuit_isometry(a, max_wires);
        ib = circuit_isometry(b, max_wires);
    } catch (const SimulationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    std::vector<WireId> origins_a, origins_b;
    for (auto w : ia.inputs) {
        origins_a.push_back(a.wire(w).origin);
    }
    for (auto w : ib.inputs) {
        origins_b.push_back(b.wire(w).origin);
    }
    if (origins_a != origins_b || ia.outputs != ib.outputs) {
        std::cerr << "error: shape mismatch (inputs by origin or output wires differ)\n";
        return kMismatch;
    }
    double d = max_deviation(ia, ib);
    std::cout << "max deviation: " << sci(d) << "\n" << (d <= tol ? "pass" : "fail") << "\n";
    return d <= tol ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Compiles measurement patterns into compact circuits."};
    app.require_subcommand(1);

    std::string graph_path, output, trace_path, extended_path, a_path, b_path;
    CompileOptions options;
    bool no_verify = false;

    auto *flow = app.add_subcommand("flow", "Report flow / gflow of a graph file");
    flow->add_option("graph", graph_path, "Graph file")->required();

    auto *comp = app.add_subcommand("compile", "Compile a graph file to a compact circuit");
    comp->add_option("graph", graph_path, "Graph file")->required();
    comp->add_option("-o,--output", output, "Compact circuit (default: stdout)");
    comp->add_option("--trace", trace_path, "Write the rewrite trace here");
    comp->add_option("--emit-extended", extended_path, "Write the extended circuit here");
    comp->add_flag("--no-verify", no_verify, "Skip the oracle check");
    comp->add_option("--tol", options.tolerance, "Verification tolerance")->capture_default_str();
    comp->add_option("--max-wires", options.max_wires, "Oracle wire cap")->capture_default_str();
    comp->add_option("--seed", options.seed, "Seed of the pattern self-test")->capture_default_str();
    comp->add_option("--search-budget", options.search_budget, "Designation attempts of the gflow search")
        ->capture_default_str();

    double tol = 1e-9;
    size_t max_wires = 14;
    auto *ver = app.add_subcommand("verify", "Compare two circuits up to global phase");
    ver->add_option("a", a_path, "Circuit file")->required();
    ver->add_option("b", b_path, "Circuit file")->required();
    ver->add_option("--tol", tol, "Tolerance")->capture_default_str();
    ver->add_option("--max-wires", max_wires, "Oracle wire cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParseFailure;
    }
    options.verify = !no_verify;

    try {
        if (*flow) {
            return cmd_flow(graph_path);
        }
        if (*comp) {
            return cmd_compile(graph_path, output, trace_path, extended_path, options);
        }
        return cmd_verify(a_path, b_path, tol, max_wires);
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
