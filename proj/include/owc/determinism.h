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

#ifndef OWC_DETERMINISM_H
#define OWC_DETERMINISM_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "owc/graph.h"

namespace owc {

enum class StructureKind { Flow, Gflow };

/// Correcting sets g(i) for every measured vertex, plus a measurement order.
///
/// layers[0] is measured first. For a flow every g(i) is the singleton {f(i)}.
struct CorrectionStructure {
    StructureKind kind = StructureKind::Gflow;
    std::map<Vertex, VertexSet> correcting_sets;
    std::vector<VertexSet> layers;

    /// Round index (0-based) of a measured vertex. Throws if unknown.
    size_t layer_of(Vertex v) const;
    /// Measured vertices in layer order, ascending id within a layer.
    std::vector<Vertex> measurement_order() const;
    std::string str() const;

    bool operator==(const CorrectionStructure &other) const = default;
};

struct GflowCheck {
    std::optional<CorrectionStructure> structure;
    std::vector<std::string> violations;

    bool ok() const {
        return structure.has_value();
    }
};

/// Backward layer construction; lowest id wins ties. Layers are the coarsest
/// order consistent with the flow found.
std::optional<CorrectionStructure> find_flow(const OpenGraph &graph);

/// Checks proposed correcting sets and derives the coarsest layering.
/// Throws std::invalid_argument when a set names an unknown or input vertex.
GflowCheck validate_gflow(const OpenGraph &graph, const std::map<Vertex, VertexSet> &sets);

/// Full check of a structure against a graph, including that its own layers
/// (which need not be the coarsest) partition O^c and respect every correction.
/// Returns the list of violations; empty means usable.
std::vector<std::string> check_structure(const OpenGraph &graph, const CorrectionStructure &structure);

/// Backward GF(2) elimination, one round per layer.
std::optional<CorrectionStructure> find_gflow(const OpenGraph &graph);

/// Earliest-possible layering of the precedence relation induced by `sets`
/// (i before every measured j in g(i) and every measured k in Odd(g(i)) \ {i}).
/// Returns nullopt if the relation is cyclic.
std::optional<std::vector<VertexSet>> coarsest_layers(
    const OpenGraph &graph, const std::map<Vertex, VertexSet> &sets);

}  // namespace owc

#endif
