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

#ifndef OWC_COMPILE_H
#define OWC_COMPILE_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "owc/circuit.h"
#include "owc/determinism.h"
#include "owc/graph.h"
#include "owc/rewrite.h"

namespace owc {

struct CompileOptions {
    bool verify = true;
    double tolerance = 1e-9;
    /// Oracle cap; a circuit wider than this cannot be verified and fails.
    size_t max_wires = 14;
    size_t search_budget = 10000;
    /// Input state and outcome strings of the pattern self-test.
    uint64_t seed = 1;
};

enum class CompileStatus { Ok, NoStructure, VerificationFailed, SearchExhausted, Stuck };

/// 0, 3, 4, 5, 5.
int exit_code(CompileStatus status);

struct CompileResult {
    CompileStatus status = CompileStatus::Ok;
    std::string message;
    std::optional<CorrectionStructure> structure;
    Circuit extended;
    /// The partial trace on search failures.
    SimplificationTrace trace;
    /// Only meaningful when ok().
    Circuit compact;
    bool verified = false;
    /// Extended vs compact, after phase alignment.
    double deviation = 0;

    bool ok() const {
        return status == CompileStatus::Ok;
    }
};

/// Supplied correcting sets are validated and used as a gflow; otherwise a
/// flow is preferred to a gflow. With verification on, every step is checked
/// against the oracle on circuits of at most 12 wires, the final circuit
/// against the extended one, and the extended circuit against the pattern.
CompileResult compile(const OpenGraph &graph,
                      const std::optional<std::map<Vertex, VertexSet>> &correcting_sets = std::nullopt,
                      const CompileOptions &options = {});

}  // namespace owc

#endif
