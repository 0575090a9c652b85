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

#ifndef OWC_CIRCUIT_H
#define OWC_CIRCUIT_H

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "owc/angle.h"
#include "owc/determinism.h"
#include "owc/graph.h"

namespace owc {

using WireId = int;

enum class GateKind { J, CZ, CX };

/// One gate. J uses `a` only; CZ keeps a < b; CX is control `a`, target `b`.
struct Gate {
    GateKind kind = GateKind::J;
    WireId a = 0;
    WireId b = 0;
    Angle angle;

    static Gate j(WireId w, Angle angle);
    static Gate cz(WireId a, WireId b);
    static Gate cx(WireId control, WireId target);

    bool is_two_qubit() const {
        return kind != GateKind::J;
    }
    bool touches(WireId w) const {
        return a == w || (is_two_qubit() && b == w);
    }
    /// For a two-qubit gate touching w, the other wire.
    WireId other(WireId w) const {
        return a == w ? b : a;
    }
    /// Same gate with wire `from` renamed to `to`.
    Gate relabeled(WireId from, WireId to) const;

    /// Circuit-text form, e.g. "J(1/2pi) 1", "CZ 1 2", "CX 1 2".
    std::string str() const;
    static Gate parse(std::string_view text);

    bool operator==(const Gate &other) const;
};

/// True when the two gates commute for a reason visible from the gate types
/// alone: disjoint wires, two CZs, a CZ off the target of a CX, or two CXs that
/// share only controls or only targets.
bool gates_commute(const Gate &x, const Gate &y);

enum class WireInit { Input, Plus };
enum class WireTerminal { Output, Measured };

struct Wire {
    WireId id = 0;
    WireInit init = WireInit::Plus;
    WireTerminal terminal = WireTerminal::Output;
    /// Input vertex whose state this wire carries (meaningful for input wires).
    /// Equals `id` until the J-gate identity moves an input onto another wire.
    Vertex origin = 0;

    bool operator==(const Wire &other) const = default;
};

struct Circuit {
    /// Ascending id.
    std::vector<Wire> wires;
    /// Program order.
    std::vector<Gate> gates;

    bool has_wire(WireId id) const;
    const Wire &wire(WireId id) const;
    Wire &wire(WireId id);
    void add_wire(Wire w);
    void remove_wire(WireId id);

    std::vector<WireId> input_wires_by_origin() const;
    std::vector<WireId> output_wires() const;
    std::vector<WireId> measured_wires() const;
    size_t count(GateKind kind) const;

    bool operator==(const Circuit &other) const = default;
};

/// Declared wires, distinct two-qubit operands, canonical CZ order, and at least
/// one J per measured wire.
std::vector<std::string> validate(const Circuit &circuit);

/// (1/sqrt2) [[1, e^{ia}], [1, -e^{ia}]].
Eigen::Matrix2cd j_matrix(double radians);
Eigen::Matrix2cd j_matrix(const Angle &angle);

/// Gate index lists of the rounds E_r, J_r, C_r.
struct TimeSlicedView {
    struct Round {
        std::vector<size_t> entangle;
        std::vector<size_t> measure;
        std::vector<size_t> correct;
    };
    std::vector<Round> rounds;

    /// Measured wires of round r, in gate order.
    std::vector<WireId> measured_in(const Circuit &circuit, size_t r) const;
};

/// Splits an extended circuit into rounds. Throws std::invalid_argument when the
/// gate list does not have the extended layout for `structure`.
TimeSlicedView slice(const Circuit &circuit, const CorrectionStructure &structure);

/// Line-oriented canonical text; see README for the grammar.
std::string emit_text(const Circuit &circuit);
/// Throws std::invalid_argument("line N: ...") on malformed input.
Circuit parse_text(std::string_view text);

/// FNV-1a of emit_text, as 16 hex digits.
std::string digest(const Circuit &circuit);

}  // namespace owc

#endif
