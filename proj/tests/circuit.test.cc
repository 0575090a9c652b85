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

#include "owc/circuit.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "owc/extend.h"
#include "test_graphs.h"

using namespace owc;
using namespace owc::testing;

namespace {

Circuit random_circuit(std::mt19937 &rng) {
    Circuit c;
    int n = 1 + (int)(rng() % 6);
    for (int w = 0; w < n; w++) {
        Wire wire{w * 3 + 1, rng() % 2 ? WireInit::Input : WireInit::Plus,
                  rng() % 2 ? WireTerminal::Output : WireTerminal::Measured, 0};
        wire.origin = wire.init == WireInit::Input ? (int)(rng() % 20) : wire.id;
        c.add_wire(wire);
    }
    int m = (int)(rng() % 15);
    for (int k = 0; k < m; k++) {
        WireId a = c.wires[rng() % n].id;
        WireId b = c.wires[rng() % n].id;
        int kind = (int)(rng() % 3);
        if (kind == 0 || a == b) {
            Angle angle = rng() % 2 ? Angle::pi_fraction((int)(rng() % 17) - 8, 1 + (int)(rng() % 8))
                                    : Angle::radians(std::uniform_real_distribution<double>(-10, 10)(rng));
            c.gates.push_back(Gate::j(a, angle));
        } else if (kind == 1) {
            c.gates.push_back(Gate::cz(a, b));
        } else {
            c.gates.push_back(Gate::cx(a, b));
        }
    }
    return c;
}

}  // namespace

TEST(gate, canonical_cz) {
    ASSERT_EQ(Gate::cz(5, 2).str(), "CZ 2 5");
    ASSERT_EQ(Gate::cx(5, 2).str(), "CX 5 2");
    ASSERT_EQ(Gate::j(1, Angle::pi_fraction(1, 2)).str(), "J(1/2pi) 1");
    ASSERT_EQ(Gate::parse("J(1/2pi) 1"), Gate::j(1, Angle::pi_fraction(1, 2)));
    ASSERT_THROW(Gate::parse("CZ 2 1"), std::invalid_argument);
    ASSERT_THROW(Gate::parse("CX 2 2"), std::invalid_argument);
    ASSERT_THROW(Gate::parse("H 1"), std::invalid_argument);
}

TEST(gate, syntactic_commutation) {
    auto cz12 = Gate::cz(1, 2);
    auto cz23 = Gate::cz(2, 3);
    auto cx12 = Gate::cx(1, 2);
    auto cx13 = Gate::cx(1, 3);
    auto cx32 = Gate::cx(3, 2);
    auto cx23 = Gate::cx(2, 3);
    auto j1 = Gate::j(1, Angle());
    ASSERT_TRUE(gates_commute(cz12, cz23));
    ASSERT_TRUE(gates_commute(cx12, cx13));   // shared control
    ASSERT_TRUE(gates_commute(cx12, cx32));   // shared target
    ASSERT_FALSE(gates_commute(cx12, cx23));  // target feeds control
    ASSERT_FALSE(gates_commute(cx23, cx12));
    ASSERT_TRUE(gates_commute(cz12, cx13));   // CZ on the control only
    ASSERT_FALSE(gates_commute(cz23, cx12));  // CZ on the target
    ASSERT_FALSE(gates_commute(j1, cz12));
    ASSERT_TRUE(gates_commute(j1, cz23));
}

TEST(circuit, emit_examples) {
    Circuit c;
    c.add_wire({2, WireInit::Plus, WireTerminal::Output, 2});
    c.add_wire({1, WireInit::Input, WireTerminal::Measured, 1});
    c.gates = {Gate::cz(2, 1), Gate::j(1, Angle::pi_fraction(1, 2)), Gate::cx(1, 2)};
    ASSERT_EQ(emit_text(c), "wire 1 input measured\nwire 2 plus output\nCZ 1 2\nJ(1/2pi) 1\nCX 1 2\n");
    ASSERT_TRUE(validate(c).empty());
    ASSERT_EQ(digest(c).size(), 16);
}

TEST(circuit, origin_round_trips) {
    Circuit c;
    c.add_wire({4, WireInit::Input, WireTerminal::Output, 3});
    auto text = emit_text(c);
    ASSERT_EQ(text, "wire 4 input output origin=3\n");
    ASSERT_EQ(parse_text(text), c);
}

TEST(circuit, parse_round_trip_random) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; trial++) {
        auto c = random_circuit(rng);
        auto text = emit_text(c);
        auto back = parse_text(text);
        ASSERT_EQ(back, c) << text;
        ASSERT_EQ(emit_text(back), text);
        ASSERT_EQ(digest(back), digest(c));
    }
}

TEST(circuit, parse_errors_carry_line_numbers) {
    try {
        parse_text("# comment\nwire 1 input output\nCZ 1 7\n");
        FAIL();
    } catch (const std::invalid_argument &e) {
        ASSERT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    ASSERT_THROW(parse_text("wire 1 nowhere output\n"), std::invalid_argument);
    ASSERT_THROW(parse_text("wire 1 input output\nwire 1 plus output\n"), std::invalid_argument);
}

TEST(circuit, validate_reports_problems) {
    Circuit c;
    c.add_wire({1, WireInit::Input, WireTerminal::Measured, 1});
    c.gates = {Gate::cx(1, 3)};
    auto bad = validate(c);
    ASSERT_EQ(bad.size(), 2);
}

TEST(j_matrix, special_values) {
    auto h = j_matrix(0.0);
    double s = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd expected;
    expected << s, s, s, -s;
    ASSERT_LT((h - expected).cwiseAbs().maxCoeff(), 1e-15);
    expected << s, -s, s, s;
    ASSERT_LT((j_matrix(std::numbers::pi) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(j_matrix, unitary_and_sign_relation) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
    for (int k = 0; k < 16; k++) {
        double t = dist(rng);
        auto j = j_matrix(t);
        ASSERT_LT((j * j.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-14);
        // J(t) J(-t)^dagger = H diag(1, e^{2it}) H.
        Eigen::Matrix2cd d = Eigen::Matrix2cd::Identity();
        d(1, 1) = std::polar(1.0, 2 * t);
        auto h = j_matrix(0.0);
        ASSERT_LT((j * j_matrix(-t).adjoint() - h * d * h).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(slice, path) {
    auto g = path3();
    auto s = *find_flow(g);
    auto c = build_extended(g, s);
    auto view = slice(c, s);
    ASSERT_EQ(view.rounds.size(), 2);
    ASSERT_EQ(view.rounds[0].entangle.size(), 2);
    ASSERT_EQ(view.rounds[0].measure.size(), 1);
    ASSERT_EQ(view.measured_in(c, 0), std::vector<WireId>{1});
    // C_1: CX 1 2 and the CZ 1-3 from K_2.
    ASSERT_EQ(view.rounds[0].correct.size(), 2);
    ASSERT_EQ(c.gates[view.rounds[0].correct[0]].str(), "CX 1 2");
    ASSERT_EQ(c.gates[view.rounds[0].correct[1]].str(), "CZ 1 3");
    ASSERT_TRUE(view.rounds[1].entangle.empty());
    ASSERT_EQ(view.measured_in(c, 1), std::vector<WireId>{2});
    ASSERT_EQ(view.rounds[1].correct.size(), 1);
    ASSERT_EQ(c.gates[view.rounds[1].correct[0]].str(), "CX 2 3");
}

TEST(slice, nothing_measured) {
    OpenGraph g({1, 2}, {{1, 2}}, {1, 2}, {1, 2}, {});
    auto s = *find_gflow(g);
    auto c = build_extended(g, s);
    auto view = slice(c, s);
    ASSERT_EQ(view.rounds.size(), 1);
    ASSERT_EQ(view.rounds[0].entangle.size(), 1);
    ASSERT_TRUE(view.rounds[0].measure.empty());
    ASSERT_TRUE(view.rounds[0].correct.empty());
}

TEST(slice, example1) {
    auto g = example1();
    auto s = *validate_gflow(g, example1_sets()).structure;
    auto c = build_extended(g, s);
    auto view = slice(c, s);
    ASSERT_EQ(view.rounds.size(), 2);
    size_t cx = 0, cz = 0;
    for (const auto &r : view.rounds) {
        for (auto k : r.correct) {
            (c.gates[k].kind == GateKind::CX ? cx : cz)++;
        }
    }
    ASSERT_EQ(cx, 3);
    ASSERT_EQ(cz, 3);
    ASSERT_EQ(view.rounds[0].entangle.size(), 5);
}

TEST(slice, mismatch) {
    auto g = path3();
    auto s = *find_flow(g);
    auto c = build_extended(g, s);
    std::swap(c.gates[2], c.gates[3]);
    ASSERT_THROW(slice(c, s), std::invalid_argument);
}
