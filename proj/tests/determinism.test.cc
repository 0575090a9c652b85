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

#include <functional>

#include "gtest/gtest.h"
#include "test_graphs.h"

using namespace owc;
using namespace owc::testing;

namespace {

// Independent reference: i -> x edges of the "must be measured before" relation,
// acyclicity by repeated removal of sources.
bool precedence_acyclic(const OpenGraph &g, const std::map<Vertex, VertexSet> &sets) {
    std::map<Vertex, VertexSet> after;
    for (const auto &[i, s] : sets) {
        std::map<Vertex, int> hits;
        for (auto j : s) {
            for (auto n : g.neighbors(j)) {
                hits[n] ^= 1;
            }
            if (sets.contains(j)) {
                after[i].insert(j);
            }
        }
        for (auto [k, odd] : hits) {
            if (odd && k != i && sets.contains(k)) {
                after[i].insert(k);
            }
        }
    }
    VertexSet left;
    for (const auto &[i, s] : sets) {
        left.insert(i);
    }
    while (!left.empty()) {
        Vertex source = -1;
        for (auto v : left) {
            bool has_pred = false;
            for (auto u : left) {
                if (after[u].contains(v)) {
                    has_pred = true;
                }
            }
            if (!has_pred) {
                source = v;
                break;
            }
        }
        if (source == -1) {
            return false;
        }
        left.erase(source);
    }
    return true;
}

/// Tries every injective f: O^c -> I^c with f(i) ~ i (a flow is always
/// injective: f(i) = f(j) would force i and j before each other).
bool brute_force_has_flow(const OpenGraph &g) {
    size_t n = g.num_vertices();
    std::vector<uint32_t> adj(n, 0);
    for (auto [a, b] : g.edges()) {
        adj[g.index_of(a)] |= 1u << g.index_of(b);
        adj[g.index_of(b)] |= 1u << g.index_of(a);
    }
    std::vector<size_t> measured;
    for (auto v : g.measured()) {
        measured.push_back(g.index_of(v));
    }
    std::vector<size_t> f(n);
    std::function<bool(size_t, uint32_t)> rec = [&](size_t k, uint32_t used) {
        if (k == measured.size()) {
            // before[x] = vertices that must precede x.
            std::vector<uint32_t> before(n, 0);
            uint32_t pending = 0;
            for (auto i : measured) {
                pending |= 1u << i;
            }
            for (auto i : measured) {
                uint32_t later = (adj[f[i]] & ~(1u << i)) | (1u << f[i]);
                for (size_t x = 0; x < n; x++) {
                    if ((later >> x) & 1) {
                        before[x] |= 1u << i;
                    }
                }
            }
            while (pending) {
                uint32_t ready = 0;
                for (size_t x = 0; x < n; x++) {
                    if (((pending >> x) & 1) && !(before[x] & pending)) {
                        ready |= 1u << x;
                    }
                }
                if (!ready) {
                    return false;
                }
                pending &= ~ready;
            }
            return true;
        }
        size_t i = measured[k];
        for (size_t v = 0; v < n; v++) {
            if (((adj[i] >> v) & 1) && !((used >> v) & 1) && !g.is_input(g.vertex_at(v))) {
                f[i] = v;
                if (rec(k + 1, used | (1u << v))) {
                    return true;
                }
            }
        }
        return false;
    };
    return rec(0, 0);
}

void expect_sound(const OpenGraph &g, const CorrectionStructure &s) {
    auto check = validate_gflow(g, s.correcting_sets);
    ASSERT_TRUE(check.ok());
    ASSERT_EQ(check.structure->layers, s.layers);
    VertexSet covered;
    for (const auto &layer : s.layers) {
        covered.insert(layer.begin(), layer.end());
    }
    ASSERT_EQ(covered, g.measured());
    for (const auto &[i, gi] : s.correcting_sets) {
        ASSERT_TRUE(odd_neighborhood(g, gi).contains(i));
        VertexSet later = gi;
        for (auto k : odd_neighborhood(g, gi)) {
            if (k != i) {
                later.insert(k);
            }
        }
        for (auto x : later) {
            ASSERT_TRUE(g.is_output(x) || s.layer_of(x) > s.layer_of(i));
        }
        if (s.kind == StructureKind::Flow) {
            ASSERT_EQ(gi.size(), 1);
            ASSERT_TRUE(g.adjacent(i, *gi.begin()));
        }
    }
}

}  // namespace

TEST(find_flow, path) {
    auto s = find_flow(path3());
    ASSERT_TRUE(s.has_value());
    ASSERT_EQ(s->kind, StructureKind::Flow);
    std::map<Vertex, VertexSet> expected{{1, {2}}, {2, {3}}};
    ASSERT_EQ(s->correcting_sets, expected);
    ASSERT_EQ(s->layers, (std::vector<VertexSet>{{1}, {2}}));
    ASSERT_TRUE(brute_force_has_flow(path3()));
}

// The edge set forced by K_2, K_4, K_5 admits the flow f(1) = 5, f(3) = 2 even
// though the correcting sets used for it elsewhere are not a flow.
TEST(find_flow, example1_has_a_flow) {
    auto s = find_flow(example1());
    ASSERT_TRUE(s.has_value());
    ASSERT_TRUE(brute_force_has_flow(example1()));
    std::map<Vertex, VertexSet> expected{{1, {5}}, {3, {2}}};
    ASSERT_EQ(s->correcting_sets, expected);
    ASSERT_EQ(s->layers, (std::vector<VertexSet>{{3}, {1}}));
    expect_sound(example1(), *s);
}

TEST(find_flow, example2_has_none) {
    ASSERT_FALSE(find_flow(example2()).has_value());
    ASSERT_FALSE(brute_force_has_flow(example2()));
}

TEST(find_flow, strips) {
    for (int n = 2; n <= 4; n++) {
        auto g = strip(n);
        auto s = find_flow(g);
        ASSERT_TRUE(s.has_value()) << n;
        expect_sound(g, *s);
        ASSERT_EQ(s->layers.size(), n - 1);
    }
}

TEST(validate_gflow, example1) {
    auto check = validate_gflow(example1(), example1_sets());
    ASSERT_TRUE(check.ok());
    ASSERT_EQ(check.structure->kind, StructureKind::Gflow);
    // 3 is in Odd({2}) and still unmeasured, so 1 has to go first.
    ASSERT_EQ(check.structure->layers, (std::vector<VertexSet>{{1}, {3}}));
}

TEST(validate_gflow, example2) {
    auto check = validate_gflow(example2(), example2_sets());
    ASSERT_TRUE(check.ok()) << check.violations.front();
    ASSERT_EQ(check.structure->layers, (std::vector<VertexSet>{{1, 5}, {3}}));
}

TEST(validate_gflow, time_respect_violation) {
    auto sets = example1_sets();
    sets[3] = {4};
    auto check = validate_gflow(example1(), sets);
    ASSERT_FALSE(check.ok());
    ASSERT_EQ(check.violations.size(), 1);
    ASSERT_NE(check.violations[0].find("time-respect"), std::string::npos);
    ASSERT_FALSE(precedence_acyclic(example1(), sets));
}

TEST(validate_gflow, other_violations) {
    auto g = example1();
    auto check = validate_gflow(g, {{1, {2}}});
    ASSERT_FALSE(check.ok());
    ASSERT_NE(check.violations[0].find("no correcting set"), std::string::npos);

    check = validate_gflow(g, {{1, {2}}, {3, {5}}});
    ASSERT_FALSE(check.ok());
    ASSERT_NE(check.violations[0].find("anachronical"), std::string::npos);

    check = validate_gflow(g, {{1, {2}}, {3, {}}});
    ASSERT_FALSE(check.ok());

    ASSERT_THROW(validate_gflow(g, {{1, {2}}, {3, {1}}}), std::invalid_argument);
    ASSERT_THROW(validate_gflow(g, {{1, {2}}, {3, {9}}}), std::invalid_argument);
}

TEST(find_gflow, examples) {
    for (const auto &g : {example1(), example2(), path3(), strip(3)}) {
        auto s = find_gflow(g);
        ASSERT_TRUE(s.has_value());
        ASSERT_EQ(s->kind, StructureKind::Gflow);
        expect_sound(g, *s);
    }
    auto s = find_gflow(path3());
    std::map<Vertex, VertexSet> expected{{1, {2}}, {2, {3}}};
    ASSERT_EQ(s->correcting_sets, expected);
}

TEST(find_gflow, nothing_measured) {
    OpenGraph k3({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}, {1, 2, 3}, {1, 2, 3}, {});
    auto s = find_gflow(k3);
    ASSERT_TRUE(s.has_value());
    ASSERT_TRUE(s->correcting_sets.empty());
    ASSERT_TRUE(s->layers.empty());
    ASSERT_TRUE(find_flow(k3).has_value());
}

TEST(find_gflow, none_when_too_few_outputs) {
    // Three measured vertices, one output: a line with two inputs cannot be deterministic.
    auto g = with_default_angles({1, 2, 3}, {{1, 2}, {2, 3}}, {1, 3}, {2});
    ASSERT_FALSE(find_gflow(g).has_value());
    ASSERT_FALSE(find_flow(g).has_value());
}

// Every connected graph up to 7 vertices with single-vertex I and O (any pair,
// including I = O), plus two-vertex I and O up to 6 vertices.
TEST(find_flow, agrees_with_brute_force_exhaustively) {
    size_t cases = 0;
    size_t with_flow = 0;
    for (const auto &sg : connected_graphs_up_to_7()) {
        std::vector<Vertex> vs;
        for (int v = 1; v <= sg.n; v++) {
            vs.push_back(v);
        }
        std::vector<VertexSet> io_sets;
        for (int a = 1; a <= sg.n; a++) {
            io_sets.push_back({a});
        }
        if (sg.n <= 6) {
            for (int a = 1; a <= sg.n; a++) {
                for (int b = a + 1; b <= sg.n; b++) {
                    io_sets.push_back({a, b});
                }
            }
        }
        for (const auto &in : io_sets) {
            for (const auto &out : io_sets) {
                if (in.size() != out.size()) {
                    continue;
                }
                auto g = with_default_angles(vs, sg.edges, in, out);
                auto flow = find_flow(g);
                bool expected = brute_force_has_flow(g);
                ASSERT_EQ(flow.has_value(), expected) << "n=" << sg.n << " I=" << set_str(in) << " O=" << set_str(out);
                auto gflow = find_gflow(g);
                if (flow.has_value()) {
                    expect_sound(g, *flow);
                    with_flow++;
                    ASSERT_TRUE(gflow.has_value());
                }
                if (gflow.has_value()) {
                    expect_sound(g, *gflow);
                }
                cases++;
            }
        }
    }
    ASSERT_GT(with_flow, 400);
    std::cout << cases << " cases, " << with_flow << " with flow\n";
}
