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

#ifndef OWC_SIM_H
#define OWC_SIM_H

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <vector>

#include "owc/circuit.h"
#include "owc/determinism.h"
#include "owc/graph.h"

namespace owc {

/// Dense state; wires[0] is the most significant bit of the amplitude index.
struct StateVector {
    std::vector<WireId> wires;
    Eigen::VectorXcd amplitudes;
};

/// Columns are indexed by input basis states (inputs ordered by origin), rows
/// by output basis states (outputs ordered by wire id). Both big-endian.
struct Isometry {
    std::vector<WireId> inputs;
    std::vector<WireId> outputs;
    Eigen::MatrixXcd matrix;
};

/// Raised for wire-cap violations and impossible projections.
struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Runs every input basis state through the circuit (plus-state wires start in
/// |+>), then projects each measured wire onto <+| and renormalizes.
Isometry circuit_isometry(const Circuit &circuit, size_t max_wires = 14);

/// The 2^n x 2^n operator of a gate list over the given wire order.
Eigen::MatrixXcd gate_operator(const std::vector<Gate> &gates, const std::vector<WireId> &wires);

/// For each measured wire, the smallest fidelity <+|rho|+> of its reduced
/// state just before projection, over all input basis states.
std::map<WireId, double> measured_wire_fidelity(const Circuit &circuit, size_t max_wires = 14);

/// max |a - e^{i phi} b| with phi aligning the largest-magnitude entry of a.
/// Throws std::invalid_argument on shape mismatch.
double max_deviation(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);
double max_deviation(const Isometry &a, const Isometry &b);
bool equivalent(const Isometry &a, const Isometry &b, double tol = 1e-9);

/// Simulates the measurement pattern itself: entangle, measure vertices in
/// layer order with forced outcomes at adapted angles, then apply the
/// accumulated X/Z corrections to the outputs.
///
/// input: state over the input vertices (ascending id, big-endian).
/// outcomes: one bit per measured vertex.
/// Returns the state over the output vertices (ascending id).
StateVector run_pattern(
    const OpenGraph &graph,
    const CorrectionStructure &structure,
    const Eigen::VectorXcd &input,
    const std::map<Vertex, bool> &outcomes);

}  // namespace owc

#endif
