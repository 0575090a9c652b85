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

#ifndef OWC_REWRITE_H
#define OWC_REWRITE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "owc/circuit.h"
#include "owc/determinism.h"

namespace owc {

enum class Rule { JGate, CzCommute, CzToCx, CxCommute, PeepholeCancel };

/// "jgate", "cz-commute", "cz-to-cx", "cx-commute", "peephole-cancel".
std::string_view rule_name(Rule rule);
Rule parse_rule(std::string_view name);

/// A site that does not match the rule, or a failed precondition.
class RewriteError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// One applied rewrite. The consumed gates (ascending indices into the circuit
/// as it was before the step) are brought together at their meeting point and
/// replaced there by `produced`.
struct RewriteStep {
    Rule rule = Rule::PeepholeCancel;
    std::vector<size_t> consumed;
    std::vector<Gate> produced;
    std::optional<WireId> wire_removed;

    /// "cz-commute consumed=1,4,6 produced=CZ_2_5,CX_4_5 [removed-wire=3]".
    std::string str() const;
    static RewriteStep parse(std::string_view line);

    bool operator==(const RewriteStep &other) const = default;
};

/// Where the gates of `site` can be brought together: the latest site index
/// such that every earlier site gate can move forward to it and every later
/// one back to it, commuting with each gate outside the site that it passes.
std::optional<size_t> meeting_point(const Circuit &circuit, std::vector<size_t> site);
bool gatherable(const Circuit &circuit, const std::vector<size_t> &site);
/// Index the replacement of `site` starts at once its gates are removed.
/// Throws RewriteError if the site cannot be brought together.
size_t insert_position(const Circuit &circuit, const std::vector<size_t> &site);

/// No gate outside `site` touches wire w before the site's meeting point, and w
/// starts in |+>.
bool fresh_at(const Circuit &circuit, WireId w, const std::vector<size_t> &site);

/// Mechanical replay of a recorded step, including the wire hand-over of a
/// jgate step. Returns the insert position.
size_t apply_step(Circuit &circuit, const RewriteStep &step);

// Each rule checks its site, applies it and returns the step it performed.
// Three-gate sites shrink to two; the two-gate forms of cz-commute and
// cx-commute expand back to three and exist for completeness only.

/// {CX i j, CZ j k, CZ i k} <-> {CX i j, CZ j k}.
RewriteStep apply_cz_commute(Circuit &circuit, const std::vector<size_t> &site);
/// [CZ j k; CZ i k] <-> [CZ j k; CX i j], with j = `fresh` starting in |+>.
RewriteStep apply_cz_to_cx(Circuit &circuit, const std::vector<size_t> &site, WireId fresh);
/// {CX j k, CX i j, CX i k} <-> {CX i j, CX j k}.
RewriteStep apply_cx_commute(Circuit &circuit, const std::vector<size_t> &site);
/// Two identical CZ or CX gates cancel.
RewriteStep apply_peephole(Circuit &circuit, const std::vector<size_t> &site);
/// [CZ i s; J(a) i; CX i s] -> [J(a) s], removing wire i. Wire s must start in
/// |+> and be untouched before the meeting point; nothing may touch i after it.
/// Earlier gates on i are moved onto s, and s takes over i's initialization.
RewriteStep apply_jgate(Circuit &circuit, WireId i, WireId s);
/// The [CZ, J, CX] indices apply_jgate would consume, if its preconditions hold.
std::optional<std::vector<size_t>> jgate_site(const Circuit &circuit, WireId i, WireId s);

struct SimplificationTrace {
    std::string initial_digest;
    std::string final_digest;
    std::vector<RewriteStep> steps;

    /// "initial-digest <hex>", one line per step, "final-digest <hex>".
    std::string str() const;
    static SimplificationTrace parse(std::string_view text);

    /// Replays the steps on `initial`. Throws RewriteError if either digest
    /// does not match.
    Circuit replay(const Circuit &initial) const;

    bool operator==(const SimplificationTrace &other) const = default;
};

enum class SimplifyStatus { Ok, Stuck, SearchExhausted };

struct SimplifyOptions {
    /// Designation attempts for the gflow driver.
    size_t search_budget = 10000;
};

struct SimplifyResult {
    /// On failure, the circuit the partial trace ends in.
    Circuit circuit;
    SimplificationTrace trace;
    SimplifyStatus status = SimplifyStatus::Ok;
    std::string failure;
    size_t attempts = 0;

    bool ok() const {
        return status == SimplifyStatus::Ok;
    }
};

/// One wire per measured vertex, for circuits built from a flow.
SimplifyResult simplify_flow(const Circuit &circuit, const TimeSlicedView &view);

/// Gflow driver: one CX per measured wire is kept ("designated"), the others
/// are cancelled; designations are searched in lexicographic order.
SimplifyResult simplify_gflow(const Circuit &circuit, const TimeSlicedView &view,
                              const CorrectionStructure &structure, const SimplifyOptions &options = {});

}  // namespace owc

#endif
