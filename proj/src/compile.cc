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

#include "owc/compile.h"

#include <cstdio>
#include <random>

#include "owc/extend.h"
#include "owc/sim.h"

using namespace owc;

int owc::exit_code(CompileStatus status) {
    switch (status) {
        case CompileStatus::Ok:
            return 0;
        case CompileStatus::NoStructure:
            return 3;
        case CompileStatus::VerificationFailed:
            return 4;
        case CompileStatus::SearchExhausted:
        case CompileStatus::Stuck:
            return 5;
    }
    return 1;
}

namespace {

constexpr size_t kStepCheckWires = 12;

std::string fmt(double x) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

/// Empty on success, else why verification failed.
std::string verify(const OpenGraph &graph, const CorrectionStructure &structure, CompileResult &r,
                   const CompileOptions &options) {
    size_t width = r.extended.wires.size();
    if (width > options.max_wires) {
        return "extended circuit has " + std::to_string(width) + " wires, above the oracle cap of " +
               std::to_string(options.max_wires);
    }
    auto reference = circuit_isometry(r.extended, options.max_wires);

    if (width <= kStepCheckWires) {
        Circuit c = r.extended;
        for (size_t k = 0; k < r.trace.steps.size(); k++) {
            apply_step(c, r.trace.steps[k]);
            double d = max_deviation(reference, circuit_isometry(c, options.max_wires));
            if (d > options.tolerance) {
                return "step " + std::to_string(k + 1) + " (" + r.trace.steps[k].str() + ") changes the isometry by " +
                       fmt(d);
            }
        }
    }

    r.deviation = max_deviation(reference, circuit_isometry(r.compact, options.max_wires));
    if (r.deviation > options.tolerance) {
        return "compact circuit deviates from the extended one by " + fmt(r.deviation);
    }

    // The extended circuit against the pattern it came from.
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    Eigen::VectorXcd input(Eigen::Index{1} << graph.inputs().size());
    for (auto &a : input) {
        a = {normal(rng), normal(rng)};
    }
    input /= input.norm();
    Eigen::VectorXcd expected = reference.matrix * input;
    auto measured = graph.measured();
    for (int trial = 0; trial < 4; trial++) {
        std::map<Vertex, bool> outcomes;
        for (auto v : measured) {
            outcomes[v] = rng() & 1;
        }
        auto out = run_pattern(graph, structure, input, outcomes);
        double d = max_deviation(Eigen::MatrixXcd(expected), Eigen::MatrixXcd(out.amplitudes));
        if (d > options.tolerance) {
            return "pattern and extended circuit disagree by " + fmt(d);
        }
    }
    return {};
}

}  // namespace

CompileResult owc::compile(const OpenGraph &graph, const std::optional<std::map<Vertex, VertexSet>> &correcting_sets,
                           const CompileOptions &options) {
    CompileResult r;
    if (correcting_sets) {
        GflowCheck check;
        try {
            check = validate_gflow(graph, *correcting_sets);
        } catch (const std::invalid_argument &e) {
            check.violations = {e.what()};
        }
        if (!check.ok()) {
            r.status = CompileStatus::NoStructure;
            r.message = "supplied correcting sets are not a gflow: " + check.violations.front();
            return r;
        }
        r.structure = check.structure;
    } else if (auto f = find_flow(graph)) {
        r.structure = f;
    } else if (auto g = find_gflow(graph)) {
        r.structure = g;
    } else {
        r.status = CompileStatus::NoStructure;
        r.message = "graph has neither flow nor gflow";
        return r;
    }

    const auto &s = *r.structure;
    r.extended = build_extended(graph, s);
    auto view = slice(r.extended, s);
    auto simplified = s.kind == StructureKind::Flow
                          ? simplify_flow(r.extended, view)
                          : simplify_gflow(r.extended, view, s, {.search_budget = options.search_budget});
    r.trace = simplified.trace;
    if (!simplified.ok()) {
        r.status = simplified.status == SimplifyStatus::SearchExhausted ? CompileStatus::SearchExhausted
                                                                         : CompileStatus::Stuck;
        r.message = simplified.failure;
        return r;
    }
    r.compact = std::move(simplified.circuit);

    if (options.verify) {
        std::string why;
        try {
            why = verify(graph, s, r, options);
        } catch (const std::exception &e) {
            why = e.what();
        }
        if (!why.empty()) {
            r.status = CompileStatus::VerificationFailed;
            r.message = "verification failed: " + why;
            r.compact = {};
            return r;
        }
        r.verified = true;
    }
    return r;
}
