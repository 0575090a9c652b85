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

#include "owc/graph.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

using namespace owc;

OpenGraph::OpenGraph(
    std::vector<Vertex> vertices,
    std::vector<Edge> edges,
    VertexSet inputs,
    VertexSet outputs,
    std::map<Vertex, Angle> angles)
    : vertices_(std::move(vertices)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      angles_(std::move(angles)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (size_t k = 0; k < vertices_.size(); k++) {
        index_[vertices_[k]] = k;
    }

    for (auto [a, b] : edges) {
        edges_.push_back(a <= b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.assign(vertices_.size(), Gf2Vector(vertices_.size()));
    for (auto [a, b] : edges_) {
        auto ia = index_.find(a);
        auto ib = index_.find(b);
        if (a == b || ia == index_.end() || ib == index_.end()) {
            continue;
        }
        adjacency_[ia->second].set(ib->second);
        adjacency_[ib->second].set(ia->second);
    }
}

bool OpenGraph::has_vertex(Vertex v) const {
    return index_.contains(v);
}

size_t OpenGraph::index_of(Vertex v) const {
    auto it = index_.find(v);
    if (it == index_.end()) {
        throw std::invalid_argument("Unknown vertex " + std::to_string(v) + ".");
    }
    return it->second;
}

bool OpenGraph::adjacent(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) {
        return false;
    }
    return adjacency_[index_of(a)].get(index_of(b));
}

VertexSet OpenGraph::neighbors(Vertex v) const {
    return from_bits(adjacency_[index_of(v)]);
}

VertexSet OpenGraph::measured() const {
    VertexSet result;
    for (auto v : vertices_) {
        if (!outputs_.contains(v)) {
            result.insert(v);
        }
    }
    return result;
}

Angle OpenGraph::angle(Vertex v) const {
    auto it = angles_.find(v);
    if (it == angles_.end()) {
        throw std::invalid_argument("Vertex " + std::to_string(v) + " has no measurement angle.");
    }
    return it->second;
}

Gf2Vector OpenGraph::to_bits(const VertexSet &set) const {
    Gf2Vector bits(vertices_.size());
    for (auto v : set) {
        bits.set(index_of(v));
    }
    return bits;
}

VertexSet OpenGraph::from_bits(const Gf2Vector &bits) const {
    VertexSet result;
    for (size_t k = 0; k < vertices_.size(); k++) {
        if (bits.get(k)) {
            result.insert(vertices_[k]);
        }
    }
    return result;
}

OpenGraph OpenGraph::with_angles(std::map<Vertex, Angle> angles) const {
    OpenGraph copy = *this;
    copy.angles_ = std::move(angles);
    return copy;
}

bool OpenGraph::operator==(const OpenGraph &other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ && inputs_ == other.inputs_ &&
           outputs_ == other.outputs_ && angles_ == other.angles_;
}

ValidationReport owc::validate(const OpenGraph &graph) {
    ValidationReport report;
    auto &bad = report.violations;
    for (auto [a, b] : graph.edges()) {
        if (a == b) {
            bad.push_back("self-loop on vertex " + std::to_string(a));
            continue;
        }
        for (auto v : {a, b}) {
            if (!graph.has_vertex(v)) {
                bad.push_back(
                    "edge " + std::to_string(a) + "-" + std::to_string(b) + " names unknown vertex " +
                    std::to_string(v));
            }
        }
    }
    for (auto v : graph.inputs()) {
        if (!graph.has_vertex(v)) {
            bad.push_back("input " + std::to_string(v) + " is not a vertex");
        }
    }
    for (auto v : graph.outputs()) {
        if (!graph.has_vertex(v)) {
            bad.push_back("output " + std::to_string(v) + " is not a vertex");
        }
    }
    for (const auto &[v, a] : graph.angles()) {
        if (!graph.has_vertex(v)) {
            bad.push_back("angle given for unknown vertex " + std::to_string(v));
        } else if (graph.is_output(v)) {
            bad.push_back("output vertex " + std::to_string(v) + " carries an angle");
        }
    }
    for (auto v : graph.vertices()) {
        if (!graph.is_output(v) && !graph.angles().contains(v)) {
            bad.push_back("measured vertex " + std::to_string(v) + " has no angle");
        }
    }
    return report;
}

Stabilizer owc::stabilizer_of(const OpenGraph &graph, Vertex j) {
    if (!graph.has_vertex(j)) {
        throw std::invalid_argument("Unknown vertex " + std::to_string(j) + ".");
    }
    if (graph.is_input(j)) {
        throw std::invalid_argument("Input vertex " + std::to_string(j) + " has no stabilizer K_j.");
    }
    return Stabilizer{j, {j}, graph.neighbors(j)};
}

VertexSet owc::odd_neighborhood(const OpenGraph &graph, const VertexSet &set) {
    Gf2Vector acc(graph.num_vertices());
    for (auto v : set) {
        acc ^= graph.adjacency_row(graph.index_of(v));
    }
    return graph.from_bits(acc);
}

std::string owc::set_str(const VertexSet &set) {
    std::stringstream out;
    out << '{';
    bool first = true;
    for (auto v : set) {
        if (!first) {
            out << ',';
        }
        first = false;
        out << v;
    }
    out << '}';
    return out.str();
}

std::string Stabilizer::str() const {
    std::stringstream out;
    out << 'X' << vertex;
    for (auto v : z_support) {
        out << " Z" << v;
    }
    return out.str();
}
