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

// Small graphs shared by the test suites.

#ifndef OWC_TEST_GRAPHS_H
#define OWC_TEST_GRAPHS_H

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "owc/graph.h"

namespace owc::testing {

inline std::map<Vertex, Angle> quarter_angles(const VertexSet &measured) {
    std::map<Vertex, Angle> angles;
    int64_t k = 1;
    for (auto v : measured) {
        angles[v] = Angle::pi_fraction(k++, 4);
    }
    return angles;
}

inline OpenGraph with_default_angles(
    std::vector<Vertex> vs, std::vector<Edge> es, VertexSet in, VertexSet out) {
    OpenGraph bare(vs, es, in, out, {});
    return bare.with_angles(quarter_angles(bare.measured()));
}

/// 1 - 2 - 3, I = {1}, O = {3}.
inline OpenGraph path3() {
    return with_default_angles({1, 2, 3}, {{1, 2}, {2, 3}}, {1}, {3});
}

/// Two-vertex pattern: CZ 1 2, measure 1, correct 2.
inline OpenGraph single_j() {
    return with_default_angles({1, 2}, {{1, 2}}, {1}, {2});
}

/// Five vertices, gflow but no flow. g(1) = {2}, g(3) = {4, 5}.
inline OpenGraph example1() {
    return with_default_angles({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {1, 4}, {3, 4}, {1, 5}}, {1, 3}, {2, 4, 5});
}

inline std::map<Vertex, VertexSet> example1_sets() {
    return {{1, {2}}, {3, {4, 5}}};
}

/// Six vertices, three inputs, three outputs; g(3) has three members.
inline OpenGraph example2() {
    return with_default_angles(
        {1, 2, 3, 4, 5, 6}, {{1, 2}, {1, 6}, {2, 3}, {3, 4}, {3, 6}, {4, 5}, {5, 6}}, {1, 3, 5}, {2, 4, 6});
}

inline std::map<Vertex, VertexSet> example2_sets() {
    return {{1, {2}}, {3, {2, 4, 6}}, {5, {2, 6}}};
}

/// 2 x n cluster strip; vertex (row r, column c) has id r * n + c + 1.
/// Inputs are the first column, outputs the last.
inline OpenGraph strip(int n) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < n; c++) {
            Vertex v = r * n + c + 1;
            vs.push_back(v);
            if (c + 1 < n) {
                es.push_back({v, v + 1});
            }
            if (r == 0) {
                es.push_back({v, v + n});
            }
        }
    }
    return with_default_angles(vs, es, {1, n + 1}, {n, 2 * n});
}

struct SmallGraph {
    int n;
    std::vector<Edge> edges;
};

/// Every connected graph on 1..7 vertices, up to isomorphism (vertices 1..n).
inline std::vector<SmallGraph> connected_graphs_up_to_7() {
    std::ifstream in(std::string(OWC_TEST_DATA_DIR) + "/connected_graphs_7.txt");
    if (!in) {
        throw std::runtime_error("missing connected_graphs_7.txt");
    }
    std::vector<SmallGraph> result;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        SmallGraph g{};
        ss >> g.n;
        std::string tok;
        while (ss >> tok) {
            auto dash = tok.find('-');
            g.edges.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
        }
        result.push_back(std::move(g));
    }
    return result;
}

}  // namespace owc::testing

#endif
