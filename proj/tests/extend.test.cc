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

#include "gtest/gtest.h"
#include "test_graphs.h"

using namespace owc;
using namespace owc::testing;

namespace {

std::vector<std::string> lines(const Circuit &c) {
    std::vector<std::string> out;
    for (const auto &g : c.gates) {
        out.push_back(g.str());
    }
    return out;
}

}  // namespace

TEST(build_extended, single_measurement) {
    auto g = single_j();
    auto c = build_extended(g, *find_flow(g));
    ASSERT_EQ(lines(c), (std::vector<std::string>{"CZ 1 2", "J(7/4pi) 1", "CX 1 2"}));
    ASSERT_EQ(emit_text(c).substr(0, 44), "wire 1 input measured\nwire 2 plus output\nCZ ");
}

TEST(build_extended, example1_gate_for_gate) {
    auto g = example1();
    auto s = *validate_gflow(g, example1_sets()).structure;
    auto c = build_extended(g, s);
    // theta_1 = pi/4 and theta_3 = pi/2 from the default angles.
    ASSERT_EQ(
        lines(c), (std::vector<std::string>{
                      "CZ 1 2", "CZ 1 4", "CZ 1 5", "CZ 2 3", "CZ 3 4",  // entangling
                      "J(7/4pi) 1", "CX 1 2", "CZ 1 3",                  // K_2
                      "J(3/2pi) 3", "CX 3 4", "CX 3 5", "CZ 1 3", "CZ 1 3"  // K_4, K_5
                  }));
    ASSERT_EQ(c.wires.size(), 5);
    ASSERT_EQ(c.wire(1).init, WireInit::Input);
    ASSERT_EQ(c.wire(2).init, WireInit::Plus);
    ASSERT_EQ(c.wire(2).terminal, WireTerminal::Output);
    ASSERT_EQ(c.wire(3).terminal, WireTerminal::Measured);
}

TEST(build_extended, nothing_measured) {
    OpenGraph g({1, 2, 3}, {{1, 2}, {2, 3}}, {1}, {1, 2, 3}, {});
    auto c = build_extended(g, *find_flow(g));
    ASSERT_EQ(lines(c), (std::vector<std::string>{"CZ 1 2", "CZ 2 3"}));
}

TEST(build_extended, rejects_invalid_structure) {
    auto g = example1();
    CorrectionStructure bad{StructureKind::Gflow, {{1, {2}}, {3, {4}}}, {{1}, {3}}};
    ASSERT_THROW(build_extended(g, bad), std::invalid_argument);
    // Valid sets but a layering that measures 3 too early.
    CorrectionStructure early{StructureKind::Gflow, example1_sets(), {{1, 3}}};
    ASSERT_THROW(build_extended(g, early), std::invalid_argument);
}

TEST(build_extended, counts_and_order_on_small_graphs) {
    size_t checked = 0;
    for (const auto &sg : connected_graphs_up_to_7()) {
        if (sg.n > 6) {
            continue;
        }
        std::vector<Vertex> vs;
        for (int v = 1; v <= sg.n; v++) {
            vs.push_back(v);
        }
        for (int in = 1; in <= sg.n; in++) {
            for (int out = 1; out <= sg.n; out++) {
                auto g = with_default_angles(vs, sg.edges, {in}, {out, (out % sg.n) + 1});
                auto s = find_gflow(g);
                if (!s.has_value()) {
                    continue;
                }
                auto c = build_extended(g, *s);
                ASSERT_TRUE(validate(c).empty());
                size_t expected = g.edges().size();
                for (const auto &[i, gi] : s->correcting_sets) {
                    expected += 1 + gi.size();
                    for (auto j : gi) {
                        expected += g.neighbors(j).size() - (g.adjacent(i, j) ? 1 : 0);
                    }
                }
                ASSERT_EQ(c.gates.size(), expected);
                // Exactly one J per measured wire, none on outputs.
                for (const auto &w : c.wires) {
                    size_t js = 0;
                    for (const auto &gate : c.gates) {
                        js += gate.kind == GateKind::J && gate.a == w.id;
                    }
                    ASSERT_EQ(js, w.terminal == WireTerminal::Measured ? 1 : 0);
                }
                // CX targets, and CZ partners that survive pairwise cancellation, are
                // measured strictly later than the controlling round (or are outputs).
                auto view = slice(c, *s);
                for (size_t r = 0; r < view.rounds.size(); r++) {
                    const auto &layer = s->layers[r];
                    std::map<std::pair<WireId, WireId>, int> cz_parity;
                    for (auto k : view.rounds[r].correct) {
                        const auto &gate = c.gates[k];
                        if (gate.kind == GateKind::CX) {
                            ASSERT_TRUE(layer.contains(gate.a));
                            ASSERT_TRUE(g.is_output(gate.b) || s->layer_of(gate.b) > r);
                        } else {
                            cz_parity[{gate.a, gate.b}] ^= 1;
                        }
                    }
                    for (auto [pair, odd] : cz_parity) {
                        if (!odd) {
                            continue;
                        }
                        auto [a, b] = pair;
                        ASSERT_NE(layer.contains(a), layer.contains(b));
                        WireId other = layer.contains(a) ? b : a;
                        ASSERT_TRUE(g.is_output(other) || s->layer_of(other) > r);
                    }
                }
                checked++;
            }
        }
    }
    ASSERT_GT(checked, 500);
}

// 3 and 4 are adjacent and both correct 1: CZ 1-4 (from K_3) must precede
// CX 1 4, or the block picks up a sign and wire 1 is left in |->.
TEST(build_extended, adjacent_correctors_are_emitted_per_stabilizer) {
    OpenGraph g({1, 2, 3, 4}, {{1, 4}, {2, 3}, {2, 4}, {3, 4}}, {1}, {3, 4},
                {{1, Angle::pi_fraction(1, 4)}, {2, Angle::pi_fraction(1, 2)}});
    auto s = validate_gflow(g, {{1, {3, 4}}, {2, {3}}});
    ASSERT_TRUE(s.ok());
    auto c = build_extended(g, *s.structure);
    ASSERT_EQ(lines(c), (std::vector<std::string>{
                            "CZ 1 4", "CZ 2 3", "CZ 2 4", "CZ 3 4",  // entangling
                            "J(7/4pi) 1", "J(3/2pi) 2",              //
                            "CX 1 3", "CZ 1 2", "CZ 1 4",            // K_3
                            "CX 1 4", "CZ 1 2", "CZ 1 3",            // K_4
                            "CX 2 3", "CZ 2 4"                       // K_3
                        }));
}
