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

#include "owc/extend.h"

#include <algorithm>
#include <stdexcept>

using namespace owc;

Circuit owc::build_extended(const OpenGraph &graph, const CorrectionStructure &structure) {
    auto report = validate(graph);
    if (!report.ok()) {
        throw std::invalid_argument("Invalid graph: " + report.violations.front() + ".");
    }
    auto bad = check_structure(graph, structure);
    if (!bad.empty()) {
        throw std::invalid_argument("Structure is invalid for the graph: " + bad.front() + ".");
    }

    Circuit c;
    for (auto v : graph.vertices()) {
        c.add_wire(Wire{
            v,
            graph.is_input(v) ? WireInit::Input : WireInit::Plus,
            graph.is_output(v) ? WireTerminal::Output : WireTerminal::Measured,
            v});
    }
    for (auto [a, b] : graph.edges()) {
        c.gates.push_back(Gate::cz(a, b));
    }
    for (const auto &layer : structure.layers) {
        for (auto i : layer) {
            c.gates.push_back(Gate::j(i, -graph.angle(i)));
        }
        for (auto i : layer) {
            const auto &g = structure.correcting_sets.at(i);
            bool independent = true;
            for (auto j : g) {
                for (auto k : graph.neighbors(j)) {
                    independent &= !g.contains(k);
                }
            }
            if (!independent) {
                // A CZ landing on another CX target does not commute with that
                // CX; one controlled-K_j at a time keeps the product exact.
                for (auto j : g) {
                    c.gates.push_back(Gate::cx(i, j));
                    for (auto k : graph.neighbors(j)) {
                        if (k != i) {
                            c.gates.push_back(Gate::cz(i, k));
                        }
                    }
                }
                continue;
            }
            std::vector<Vertex> ks;
            for (auto j : g) {
                c.gates.push_back(Gate::cx(i, j));
                for (auto k : graph.neighbors(j)) {
                    if (k != i) {
                        ks.push_back(k);
                    }
                }
            }
            std::sort(ks.begin(), ks.end());
            for (auto k : ks) {
                c.gates.push_back(Gate::cz(i, k));
            }
        }
    }
    return c;
}
