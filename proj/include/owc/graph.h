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

#ifndef OWC_GRAPH_H
#define OWC_GRAPH_H

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "owc/angle.h"
#include "owc/gf2.h"

namespace owc {

using Vertex = int;
using VertexSet = std::set<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Open graph state: a simple graph plus input/output vertex sets and one
/// measurement angle per measured (non-output) vertex.
///
/// Construction never throws on invariant violations; `validate` reports them.
/// Edges are stored normalized (smaller id first), sorted and deduplicated.
/// Neighborhood queries ignore edges that are self-loops or name unknown
/// vertices, so they are only meaningful on graphs that validate.
class OpenGraph {
   public:
    OpenGraph() = default;
    OpenGraph(
        std::vector<Vertex> vertices,
        std::vector<Edge> edges,
        VertexSet inputs,
        VertexSet outputs,
        std::map<Vertex, Angle> angles);

    const std::vector<Vertex> &vertices() const {
        return vertices_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const VertexSet &inputs() const {
        return inputs_;
    }
    const VertexSet &outputs() const {
        return outputs_;
    }
    const std::map<Vertex, Angle> &angles() const {
        return angles_;
    }
    size_t num_vertices() const {
        return vertices_.size();
    }

    bool has_vertex(Vertex v) const;
    /// Dense index in 0..n-1 (ascending id order). Throws for unknown vertices.
    size_t index_of(Vertex v) const;
    Vertex vertex_at(size_t index) const {
        return vertices_[index];
    }
    bool is_input(Vertex v) const {
        return inputs_.contains(v);
    }
    bool is_output(Vertex v) const {
        return outputs_.contains(v);
    }
    bool adjacent(Vertex a, Vertex b) const;
    VertexSet neighbors(Vertex v) const;
    /// Vertices of O^c, ascending.
    VertexSet measured() const;
    Angle angle(Vertex v) const;

    /// Adjacency row of the vertex at a dense index.
    const Gf2Vector &adjacency_row(size_t index) const {
        return adjacency_[index];
    }
    Gf2Vector to_bits(const VertexSet &set) const;
    VertexSet from_bits(const Gf2Vector &bits) const;

    /// Same graph with replaced angles.
    OpenGraph with_angles(std::map<Vertex, Angle> angles) const;

    bool operator==(const OpenGraph &other) const;

   private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    VertexSet inputs_;
    VertexSet outputs_;
    std::map<Vertex, Angle> angles_;
    std::map<Vertex, size_t> index_;
    std::vector<Gf2Vector> adjacency_;
};

/// K_j = X_j prod_{n ~ j} Z_n.
struct Stabilizer {
    Vertex vertex;
    VertexSet x_support;
    VertexSet z_support;

    std::string str() const;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const {
        return violations.empty();
    }
};

ValidationReport validate(const OpenGraph &graph);

/// Throws std::invalid_argument when j is unknown or an input.
Stabilizer stabilizer_of(const OpenGraph &graph, Vertex j);

/// Vertices adjacent to an odd number of members of `set`.
/// Throws std::invalid_argument when the set names an unknown vertex.
VertexSet odd_neighborhood(const OpenGraph &graph, const VertexSet &set);

std::string set_str(const VertexSet &set);

}  // namespace owc

#endif
