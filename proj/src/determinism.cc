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

#include "owc/determinism.h"

#include <sstream>
#include <stdexcept>

using namespace owc;

size_t CorrectionStructure::layer_of(Vertex v) const {
    for (size_t k = 0; k < layers.size(); k++) {
        if (layers[k].contains(v)) {
            return k;
        }
    }
    throw std::invalid_argument("Vertex " + std::to_string(v) + " is not in any layer.");
}

std::vector<Vertex> CorrectionStructure::measurement_order() const {
    std::vector<Vertex> order;
    for (const auto &layer : layers) {
        order.insert(order.end(), layer.begin(), layer.end());
    }
    return order;
}

std::string CorrectionStructure::str() const {
    std::stringstream out;
    for (const auto &[i, g] : correcting_sets) {
        if (kind == StructureKind::Flow) {
            out << "f(" << i << ") = " << *g.begin() << "\n";
        } else {
            out << "g(" << i << ") = " << set_str(g) << "\n";
        }
    }
    out << "layers:";
    for (const auto &layer : layers) {
        out << ' ' << set_str(layer);
    }
    out << "\n";
    return out.str();
}

std::optional<std::vector<VertexSet>> owc::coarsest_layers(
    const OpenGraph &graph, const std::map<Vertex, VertexSet> &sets) {
    // successors[i] = measured vertices that must come strictly after i.
    std::map<Vertex, VertexSet> successors;
    std::map<Vertex, size_t> indegree;
    for (const auto &[i, g] : sets) {
        indegree[i];
    }
    for (const auto &[i, g] : sets) {
        VertexSet later = g;
        for (auto k : odd_neighborhood(graph, g)) {
            if (k != i) {
                later.insert(k);
            }
        }
        for (auto x : later) {
            if (sets.contains(x) && successors[i].insert(x).second) {
                indegree[x]++;
            }
        }
    }

    std::vector<VertexSet> layers;
    VertexSet frontier;
    for (const auto &[v, d] : indegree) {
        if (d == 0) {
            frontier.insert(v);
        }
    }
    size_t placed = 0;
    while (!frontier.empty()) {
        layers.push_back(frontier);
        placed += frontier.size();
        VertexSet next;
        for (auto v : frontier) {
            for (auto x : successors[v]) {
                if (--indegree[x] == 0) {
                    next.insert(x);
                }
            }
        }
        frontier = std::move(next);
    }
    if (placed != sets.size()) {
        return std::nullopt;
    }
    return layers;
}

std::optional<CorrectionStructure> owc::find_flow(const OpenGraph &graph) {
    VertexSet out = graph.outputs();
    VertexSet correctors;
    for (auto v : graph.outputs()) {
        if (!graph.is_input(v)) {
            correctors.insert(v);
        }
    }
    std::map<Vertex, VertexSet> f;

    while (true) {
        VertexSet newly;
        VertexSet used;
        for (auto v : correctors) {
            Vertex only = 0;
            size_t count = 0;
            for (auto n : graph.neighbors(v)) {
                if (!out.contains(n)) {
                    only = n;
                    count++;
                }
            }
            if (count == 1 && !newly.contains(only)) {
                f[only] = {v};
                newly.insert(only);
                used.insert(v);
            }
        }
        if (newly.empty()) {
            break;
        }
        out.insert(newly.begin(), newly.end());
        for (auto v : used) {
            correctors.erase(v);
        }
        for (auto u : newly) {
            if (!graph.is_input(u)) {
                correctors.insert(u);
            }
        }
    }

    if (out.size() != graph.num_vertices()) {
        return std::nullopt;
    }
    auto layers = coarsest_layers(graph, f);
    if (!layers.has_value()) {
        return std::nullopt;
    }
    return CorrectionStructure{StructureKind::Flow, std::move(f), std::move(*layers)};
}

namespace {

/// Solves A x = b over GF(2) where row r of A is `rows[r]` (|cols| bits).
/// Free variables are set to zero. Returns nullopt if inconsistent.
std::optional<Gf2Vector> solve_gf2(std::vector<Gf2Vector> rows, Gf2Vector rhs, size_t num_cols) {
    size_t n = rows.size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < num_cols && r < n; c++) {
        size_t p = r;
        while (p < n && !rows[p].get(c)) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        bool bp = rhs.get(p);
        bool br = rhs.get(r);
        rhs.set(p, br);
        rhs.set(r, bp);
        for (size_t q = 0; q < n; q++) {
            if (q != r && rows[q].get(c)) {
                rows[q] ^= rows[r];
                if (rhs.get(r)) {
                    rhs.flip(q);
                }
            }
        }
        pivot_col.push_back(c);
        r++;
    }
    for (size_t q = r; q < n; q++) {
        if (rhs.get(q)) {
            return std::nullopt;
        }
    }
    Gf2Vector x(num_cols);
    for (size_t q = 0; q < r; q++) {
        if (rhs.get(q)) {
            x.set(pivot_col[q]);
        }
    }
    return x;
}

}  // namespace

std::optional<CorrectionStructure> owc::find_gflow(const OpenGraph &graph) {
    VertexSet out = graph.outputs();
    std::map<Vertex, VertexSet> g;

    while (out.size() < graph.num_vertices()) {
        std::vector<Vertex> pending;
        for (auto v : graph.vertices()) {
            if (!out.contains(v)) {
                pending.push_back(v);
            }
        }
        std::vector<Vertex> cols;
        for (auto v : out) {
            if (!graph.is_input(v)) {
                cols.push_back(v);
            }
        }
        // Row u: which candidate correctors are adjacent to pending vertex u.
        std::vector<Gf2Vector> rows;
        for (auto u : pending) {
            Gf2Vector row(cols.size());
            for (size_t c = 0; c < cols.size(); c++) {
                if (graph.adjacent(u, cols[c])) {
                    row.set(c);
                }
            }
            rows.push_back(std::move(row));
        }

        VertexSet newly;
        for (size_t r = 0; r < pending.size(); r++) {
            Gf2Vector rhs(pending.size());
            rhs.set(r);
            auto x = solve_gf2(rows, rhs, cols.size());
            if (!x.has_value()) {
                continue;
            }
            VertexSet chosen;
            for (size_t c = 0; c < cols.size(); c++) {
                if (x->get(c)) {
                    chosen.insert(cols[c]);
                }
            }
            g[pending[r]] = std::move(chosen);
            newly.insert(pending[r]);
        }
        if (newly.empty()) {
            return std::nullopt;
        }
        out.insert(newly.begin(), newly.end());
    }

    auto layers = coarsest_layers(graph, g);
    if (!layers.has_value()) {
        return std::nullopt;
    }
    return CorrectionStructure{StructureKind::Gflow, std::move(g), std::move(*layers)};
}

GflowCheck owc::validate_gflow(const OpenGraph &graph, const std::map<Vertex, VertexSet> &sets) {
    for (const auto &[i, g] : sets) {
        if (!graph.has_vertex(i)) {
            throw std::invalid_argument("Correcting set given for unknown vertex " + std::to_string(i) + ".");
        }
        for (auto j : g) {
            if (!graph.has_vertex(j)) {
                throw std::invalid_argument(
                    "g(" + std::to_string(i) + ") names unknown vertex " + std::to_string(j) + ".");
            }
            if (graph.is_input(j)) {
                throw std::invalid_argument(
                    "g(" + std::to_string(i) + ") names input vertex " + std::to_string(j) + ".");
            }
        }
    }

    GflowCheck check;
    auto &bad = check.violations;
    for (auto i : graph.measured()) {
        if (!sets.contains(i)) {
            bad.push_back("measured vertex " + std::to_string(i) + " has no correcting set");
        }
    }
    for (const auto &[i, g] : sets) {
        auto si = std::to_string(i);
        if (graph.is_output(i)) {
            bad.push_back("output vertex " + si + " has a correcting set");
            continue;
        }
        if (g.empty()) {
            bad.push_back("g(" + si + ") is empty");
            continue;
        }
        if (g.contains(i)) {
            bad.push_back("time-respect: " + si + " is in its own correcting set");
        }
        if (!odd_neighborhood(graph, g).contains(i)) {
            bad.push_back("anachronical: " + si + " is not in Odd(g(" + si + ")) = " +
                          set_str(odd_neighborhood(graph, g)));
        }
    }
    if (!bad.empty()) {
        return check;
    }

    auto layers = coarsest_layers(graph, sets);
    if (!layers.has_value()) {
        bad.push_back("time-respect: correction precedence is cyclic");
        return check;
    }
    check.structure = CorrectionStructure{StructureKind::Gflow, sets, std::move(*layers)};
    return check;
}

std::vector<std::string> owc::check_structure(const OpenGraph &graph, const CorrectionStructure &structure) {
    std::vector<std::string> bad;
    GflowCheck check;
    try {
        check = validate_gflow(graph, structure.correcting_sets);
    } catch (const std::invalid_argument &e) {
        return {e.what()};
    }
    bad = check.violations;
    if (!bad.empty()) {
        return bad;
    }
    std::map<Vertex, size_t> layer;
    for (size_t r = 0; r < structure.layers.size(); r++) {
        for (auto v : structure.layers[r]) {
            if (!structure.correcting_sets.contains(v) || !layer.emplace(v, r).second) {
                bad.push_back("layers are not a partition of the measured vertices");
                return bad;
            }
        }
    }
    if (layer.size() != structure.correcting_sets.size()) {
        bad.push_back("layers are not a partition of the measured vertices");
        return bad;
    }
    for (const auto &[i, g] : structure.correcting_sets) {
        VertexSet later = g;
        for (auto k : odd_neighborhood(graph, g)) {
            if (k != i) {
                later.insert(k);
            }
        }
        for (auto x : later) {
            if (layer.contains(x) && layer[x] <= layer[i]) {
                bad.push_back("time-respect: " + std::to_string(x) + " must be measured after " + std::to_string(i));
            }
        }
        if (structure.kind == StructureKind::Flow && (g.size() != 1 || !graph.adjacent(i, *g.begin()))) {
            bad.push_back("flow: f(" + std::to_string(i) + ") must be a single neighbor");
        }
    }
    return bad;
}
