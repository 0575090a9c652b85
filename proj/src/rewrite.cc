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

#include "owc/rewrite.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

using namespace owc;

namespace {

constexpr std::pair<Rule, std::string_view> kRuleNames[] = {
    {Rule::JGate, "jgate"},
    {Rule::CzCommute, "cz-commute"},
    {Rule::CzToCx, "cz-to-cx"},
    {Rule::CxCommute, "cx-commute"},
    {Rule::PeepholeCancel, "peephole-cancel"},
};

std::vector<size_t> checked_site(const Circuit &c, std::vector<size_t> site) {
    std::sort(site.begin(), site.end());
    if (std::adjacent_find(site.begin(), site.end()) != site.end()) {
        throw RewriteError("Site lists a gate twice.");
    }
    if (!site.empty() && site.back() >= c.gates.size()) {
        throw RewriteError("Site index " + std::to_string(site.back()) + " is out of range.");
    }
    return site;
}

std::string site_str(const std::vector<size_t> &site) {
    std::string out;
    for (auto k : site) {
        out += (out.empty() ? "" : ",") + std::to_string(k);
    }
    return out;
}

size_t splice(Circuit &c, const std::vector<size_t> &site, const std::vector<Gate> &produced) {
    size_t pos = insert_position(c, site);
    std::vector<Gate> kept;
    kept.reserve(c.gates.size() - site.size() + produced.size());
    size_t s = 0;
    for (size_t k = 0; k < c.gates.size(); k++) {
        if (s < site.size() && site[s] == k) {
            s++;
        } else {
            kept.push_back(c.gates[k]);
        }
    }
    kept.insert(kept.begin() + pos, produced.begin(), produced.end());
    c.gates = std::move(kept);
    return pos;
}

/// Wire i disappears into s: gates before `pos` move over, s takes i's
/// initialization.
void hand_over(Circuit &c, WireId i, WireId s, size_t pos) {
    for (size_t k = 0; k < pos; k++) {
        c.gates[k] = c.gates[k].relabeled(i, s);
    }
    Wire from = c.wire(i);
    Wire &to = c.wire(s);
    to.init = from.init;
    to.origin = from.init == WireInit::Input ? from.origin : s;
    c.remove_wire(i);
}

RewriteStep finish(Circuit &c, Rule rule, std::vector<size_t> site, std::vector<Gate> produced) {
    RewriteStep step{rule, std::move(site), std::move(produced), std::nullopt};
    apply_step(c, step);
    return step;
}

void require_gatherable(const Circuit &c, const std::vector<size_t> &site, std::string_view rule) {
    if (!gatherable(c, site)) {
        throw RewriteError(std::string(rule) + ": gates " + site_str(site) + " cannot be brought together.");
    }
}

}  // namespace

std::string_view owc::rule_name(Rule rule) {
    for (auto [r, name] : kRuleNames) {
        if (r == rule) {
            return name;
        }
    }
    return "?";
}

Rule owc::parse_rule(std::string_view name) {
    for (auto [r, n] : kRuleNames) {
        if (n == name) {
            return r;
        }
    }
    throw RewriteError("Unknown rule '" + std::string(name) + "'.");
}

std::string RewriteStep::str() const {
    std::string out(rule_name(rule));
    out += " consumed=" + site_str(consumed) + " produced=";
    for (size_t k = 0; k < produced.size(); k++) {
        auto g = produced[k].str();
        std::replace(g.begin(), g.end(), ' ', '_');
        out += (k ? "," : "") + g;
    }
    if (wire_removed.has_value()) {
        out += " removed-wire=" + std::to_string(*wire_removed);
    }
    return out;
}

RewriteStep RewriteStep::parse(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string word;
    if (!(in >> word)) {
        throw RewriteError("Empty step.");
    }
    RewriteStep step;
    step.rule = parse_rule(word);
    auto number = [](std::string_view text) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) {
            throw RewriteError("Bad number '" + std::string(text) + "'.");
        }
        return v;
    };
    auto items = [](std::string_view list) {
        std::vector<std::string> out;
        while (!list.empty()) {
            auto comma = list.find(',');
            out.emplace_back(list.substr(0, comma));
            list = comma == std::string_view::npos ? std::string_view() : list.substr(comma + 1);
        }
        return out;
    };
    bool seen_consumed = false, seen_produced = false;
    while (in >> word) {
        std::string_view w = word;
        if (w.starts_with("consumed=")) {
            seen_consumed = true;
            for (const auto &item : items(w.substr(9))) {
                step.consumed.push_back(number(item));
            }
        } else if (w.starts_with("produced=")) {
            seen_produced = true;
            for (auto item : items(w.substr(9))) {
                std::replace(item.begin(), item.end(), '_', ' ');
                try {
                    step.produced.push_back(Gate::parse(item));
                } catch (const std::invalid_argument &e) {
                    throw RewriteError(e.what());
                }
            }
        } else if (w.starts_with("removed-wire=")) {
            step.wire_removed = number(w.substr(13));
        } else {
            throw RewriteError("Unexpected field '" + word + "'.");
        }
    }
    if (!seen_consumed || !seen_produced) {
        throw RewriteError("Step needs consumed= and produced= fields.");
    }
    return step;
}

std::optional<size_t> owc::meeting_point(const Circuit &circuit, std::vector<size_t> site) {
    if (site.empty()) {
        return std::nullopt;
    }
    std::sort(site.begin(), site.end());
    std::set<size_t> in_site(site.begin(), site.end());
    auto passes = [&](size_t from, size_t lo, size_t hi) {
        for (size_t m = lo; m < hi; m++) {
            if (!in_site.contains(m) && !gates_commute(circuit.gates[from], circuit.gates[m])) {
                return false;
            }
        }
        return true;
    };
    for (size_t a = site.size(); a-- > 0;) {
        bool ok = true;
        for (size_t s = 0; s < site.size() && ok; s++) {
            ok = s < a ? passes(site[s], site[s] + 1, site[a]) : passes(site[s], site[a] + 1, site[s]);
        }
        if (ok) {
            return site[a];
        }
    }
    return std::nullopt;
}

bool owc::gatherable(const Circuit &circuit, const std::vector<size_t> &site) {
    return meeting_point(circuit, site).has_value();
}

size_t owc::insert_position(const Circuit &circuit, const std::vector<size_t> &site) {
    auto anchor = meeting_point(circuit, site);
    if (!anchor) {
        throw RewriteError("Gates " + site_str(site) + " cannot be brought together.");
    }
    return *anchor - std::count_if(site.begin(), site.end(), [&](size_t k) {
        return k < *anchor;
    });
}

bool owc::fresh_at(const Circuit &circuit, WireId w, const std::vector<size_t> &site) {
    auto anchor = meeting_point(circuit, site);
    if (!circuit.has_wire(w) || circuit.wire(w).init != WireInit::Plus || !anchor) {
        return false;
    }
    for (size_t m = 0; m < *anchor; m++) {
        if (circuit.gates[m].touches(w) && std::find(site.begin(), site.end(), m) == site.end()) {
            return false;
        }
    }
    return true;
}

size_t owc::apply_step(Circuit &circuit, const RewriteStep &step) {
    auto site = checked_site(circuit, step.consumed);
    if (site.empty()) {
        throw RewriteError("Step consumes no gates.");
    }
    if (step.wire_removed.has_value()) {
        if (step.produced.size() != 1 || step.produced[0].kind != GateKind::J) {
            throw RewriteError("A wire-removing step must produce a single J gate.");
        }
        if (!circuit.has_wire(*step.wire_removed) || !circuit.has_wire(step.produced[0].a)) {
            throw RewriteError("jgate step names an unknown wire.");
        }
    }
    size_t pos = splice(circuit, site, step.produced);
    if (step.wire_removed.has_value()) {
        hand_over(circuit, *step.wire_removed, step.produced[0].a, pos);
    }
    return pos;
}

RewriteStep owc::apply_cz_commute(Circuit &circuit, const std::vector<size_t> &given) {
    auto site = checked_site(circuit, given);
    const auto &g = circuit.gates;
    std::vector<size_t> cxs, czs;
    bool has_j = false;
    for (auto k : site) {
        has_j |= g[k].kind == GateKind::J;
        (g[k].kind == GateKind::CX ? cxs : czs).push_back(k);
    }
    auto mismatch = [&] {
        return RewriteError("cz-commute: gates " + site_str(site) + " do not match {CX i j, CZ j k, CZ i k}.");
    };
    if (cxs.size() != 1 || has_j) {
        throw mismatch();
    }
    WireId i = g[cxs[0]].a, j = g[cxs[0]].b;
    std::optional<size_t> jk, ik;
    for (auto z : czs) {
        if (g[z].touches(j) && !g[z].touches(i)) {
            jk = z;
        } else if (g[z].touches(i) && !g[z].touches(j)) {
            ik = z;
        }
    }
    if (site.size() == 3) {
        if (!jk || !ik || g[*jk].other(j) != g[*ik].other(i)) {
            throw mismatch();
        }
        require_gatherable(circuit, site, "cz-commute");
        WireId k = g[*jk].other(j);
        std::vector<Gate> out = cxs[0] < *jk ? std::vector{Gate::cz(j, k), Gate::cx(i, j)}
                                              : std::vector{Gate::cx(i, j), Gate::cz(j, k)};
        return finish(circuit, Rule::CzCommute, site, out);
    }
    if (site.size() == 2 && jk) {
        require_gatherable(circuit, site, "cz-commute");
        WireId k = g[*jk].other(j);
        std::vector<Gate> out = cxs[0] < *jk ? std::vector{Gate::cz(j, k), Gate::cx(i, j), Gate::cz(i, k)}
                                              : std::vector{Gate::cx(i, j), Gate::cz(j, k), Gate::cz(i, k)};
        return finish(circuit, Rule::CzCommute, site, out);
    }
    throw mismatch();
}

RewriteStep owc::apply_cz_to_cx(Circuit &circuit, const std::vector<size_t> &given, WireId j) {
    auto site = checked_site(circuit, given);
    const auto &g = circuit.gates;
    auto mismatch = [&] {
        return RewriteError("cz-to-cx: gates " + site_str(site) + " do not match [CZ j k; CZ i k] with j = " +
                            std::to_string(j) + ".");
    };
    if (site.size() != 2) {
        throw mismatch();
    }
    const Gate &x = g[site[0]], &y = g[site[1]];
    std::vector<Gate> out;
    if (x.kind == GateKind::CZ && y.kind == GateKind::CZ) {
        if (x.touches(j) == y.touches(j)) {
            throw mismatch();
        }
        const Gate &jk = x.touches(j) ? x : y;
        const Gate &ik = x.touches(j) ? y : x;
        WireId k = jk.other(j);
        if (!ik.touches(k)) {
            throw mismatch();
        }
        WireId i = ik.other(k);
        out = {Gate::cz(j, k), Gate::cx(i, j)};
    } else if (x.kind == GateKind::CZ && y.kind == GateKind::CX && x.touches(j) && y.b == j &&
               !x.touches(y.a)) {
        out = {x, Gate::cz(y.a, x.other(j))};
    } else {
        throw mismatch();
    }
    if (!fresh_at(circuit, j, site)) {
        throw RewriteError("cz-to-cx: wire " + std::to_string(j) + " is not in a fresh |+> state at the site.");
    }
    require_gatherable(circuit, site, "cz-to-cx");
    return finish(circuit, Rule::CzToCx, site, out);
}

RewriteStep owc::apply_cx_commute(Circuit &circuit, const std::vector<size_t> &given) {
    auto site = checked_site(circuit, given);
    const auto &g = circuit.gates;
    for (auto k : site) {
        if (g[k].kind != GateKind::CX) {
            throw RewriteError("cx-commute: site must consist of CX gates.");
        }
    }
    if (site.size() == 3) {
        // x = CX i j, y = CX j k, z = CX i k.
        for (size_t a = 0; a < 3; a++) {
            for (size_t b = 0; b < 3; b++) {
                if (a == b) {
                    continue;
                }
                size_t x = site[a], y = site[b], z = site[3 - a - b];
                WireId i = g[x].a, j = g[x].b, k = g[y].b;
                if (g[y].a != j || i == k || g[z] != Gate::cx(i, k)) {
                    continue;
                }
                require_gatherable(circuit, site, "cx-commute");
                std::vector<Gate> out = y < x ? std::vector{Gate::cx(i, j), Gate::cx(j, k)}
                                              : std::vector{Gate::cx(j, k), Gate::cx(i, j)};
                return finish(circuit, Rule::CxCommute, site, out);
            }
        }
    } else if (site.size() == 2) {
        for (size_t a = 0; a < 2; a++) {
            size_t x = site[a], y = site[1 - a];
            WireId i = g[x].a, j = g[x].b, k = g[y].b;
            if (g[y].a != j || i == k) {
                continue;
            }
            require_gatherable(circuit, site, "cx-commute");
            std::vector<Gate> out = x < y ? std::vector{Gate::cx(j, k), Gate::cx(i, j), Gate::cx(i, k)}
                                          : std::vector{Gate::cx(i, j), Gate::cx(j, k), Gate::cx(i, k)};
            return finish(circuit, Rule::CxCommute, site, out);
        }
    }
    throw RewriteError("cx-commute: gates " + site_str(site) + " do not match {CX j k, CX i j, CX i k}.");
}

RewriteStep owc::apply_peephole(Circuit &circuit, const std::vector<size_t> &given) {
    auto site = checked_site(circuit, given);
    if (site.size() != 2 || circuit.gates[site[0]].kind == GateKind::J ||
        circuit.gates[site[0]] != circuit.gates[site[1]]) {
        throw RewriteError("peephole-cancel: gates " + site_str(site) + " are not an identical CZ or CX pair.");
    }
    require_gatherable(circuit, site, "peephole-cancel");
    return finish(circuit, Rule::PeepholeCancel, site, {});
}

std::optional<std::vector<size_t>> owc::jgate_site(const Circuit &c, WireId i, WireId s) {
    if (i == s || !c.has_wire(i) || !c.has_wire(s) || c.wire(s).init != WireInit::Plus) {
        return std::nullopt;
    }
    std::optional<size_t> jp, zc, q;
    size_t cx_count = 0;
    for (size_t m = 0; m < c.gates.size(); m++) {
        const auto &g = c.gates[m];
        if (g.kind == GateKind::J && g.a == i) {
            jp = m;
        }
    }
    if (!jp) {
        return std::nullopt;
    }
    for (size_t m = 0; m < c.gates.size(); m++) {
        const auto &g = c.gates[m];
        if (g.kind == GateKind::CX && g.a == i && g.b == s) {
            q = m;
            cx_count++;
        } else if (g.kind == GateKind::CZ && g.touches(i) && g.touches(s) && m < *jp) {
            zc = m;
        }
    }
    if (!zc || cx_count != 1 || *q < *jp) {
        return std::nullopt;
    }
    std::vector<size_t> site{*zc, *jp, *q};
    auto anchor = meeting_point(c, site);
    if (!anchor) {
        return std::nullopt;
    }
    for (size_t m = 0; m < c.gates.size(); m++) {
        if (m == *zc || m == *jp || m == *q) {
            continue;
        }
        if ((m > *anchor && c.gates[m].touches(i)) || (m < *anchor && c.gates[m].touches(s))) {
            return std::nullopt;
        }
    }
    return site;
}

RewriteStep owc::apply_jgate(Circuit &circuit, WireId i, WireId s) {
    auto site = jgate_site(circuit, i, s);
    if (!site) {
        throw RewriteError("jgate: wires " + std::to_string(i) + " -> " + std::to_string(s) +
                           " do not have the [CZ; J; CX] shape with nothing else on either wire.");
    }
    RewriteStep step{Rule::JGate, *site, {Gate::j(s, circuit.gates[(*site)[1]].angle)}, i};
    apply_step(circuit, step);
    return step;
}

std::string SimplificationTrace::str() const {
    std::string out = "initial-digest " + initial_digest + "\n";
    for (const auto &s : steps) {
        out += s.str() + "\n";
    }
    out += "final-digest " + final_digest + "\n";
    return out;
}

SimplificationTrace SimplificationTrace::parse(std::string_view text) {
    SimplificationTrace trace;
    size_t line_no = 0;
    bool have_initial = false, have_final = false;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string line(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream in(line);
        std::string first, value, extra;
        if (!(in >> first)) {
            continue;
        }
        try {
            if (first == "initial-digest" || first == "final-digest") {
                if (!(in >> value) || (in >> extra)) {
                    throw RewriteError("expected one digest");
                }
                (first == "initial-digest" ? trace.initial_digest : trace.final_digest) = value;
                (first == "initial-digest" ? have_initial : have_final) = true;
            } else if (have_final) {
                throw RewriteError("step after final-digest");
            } else {
                trace.steps.push_back(RewriteStep::parse(line));
            }
        } catch (const RewriteError &e) {
            throw RewriteError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_initial || !have_final) {
        throw RewriteError("Trace needs initial-digest and final-digest lines.");
    }
    return trace;
}

Circuit SimplificationTrace::replay(const Circuit &initial) const {
    if (digest(initial) != initial_digest) {
        throw RewriteError("Initial circuit digest " + digest(initial) + " does not match the trace (" +
                           initial_digest + ").");
    }
    Circuit c = initial;
    for (size_t k = 0; k < steps.size(); k++) {
        try {
            apply_step(c, steps[k]);
        } catch (const RewriteError &e) {
            throw RewriteError("step " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    if (digest(c) != final_digest) {
        throw RewriteError("Replayed circuit digest " + digest(c) + " does not match the trace (" + final_digest +
                           ").");
    }
    return c;
}

// ---------------------------------------------------------------------------
// Drivers.

namespace {

struct Session {
    Circuit c;
    std::vector<RewriteStep> steps;

    std::vector<size_t> find(const Gate &g, size_t from = 0) const {
        std::vector<size_t> out;
        for (size_t m = from; m < c.gates.size(); m++) {
            if (c.gates[m] == g) {
                out.push_back(m);
            }
        }
        return out;
    }

    std::optional<size_t> last_j(WireId i) const {
        std::optional<size_t> jp;
        for (size_t m = 0; m < c.gates.size(); m++) {
            if (c.gates[m].kind == GateKind::J && c.gates[m].a == i) {
                jp = m;
            }
        }
        return jp;
    }

    /// Corrections still attached to wire i: gates of `kind` after its J.
    std::vector<size_t> after_j(WireId i, GateKind kind) const {
        std::vector<size_t> out;
        auto jp = last_j(i);
        if (!jp) {
            return out;
        }
        for (size_t m = *jp + 1; m < c.gates.size(); m++) {
            const auto &g = c.gates[m];
            if (g.kind == kind && (kind == GateKind::CZ ? g.touches(i) : g.a == i)) {
                out.push_back(m);
            }
        }
        return out;
    }

    std::vector<WireId> targets(WireId i) const {
        std::vector<WireId> out;
        for (auto m : after_j(i, GateKind::CX)) {
            out.push_back(c.gates[m].b);
        }
        return out;
    }

    void record(RewriteStep step) {
        steps.push_back(std::move(step));
    }

    void peephole() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t x = 0; x < c.gates.size() && !changed; x++) {
                if (c.gates[x].kind == GateKind::J) {
                    continue;
                }
                for (size_t y = x + 1; y < c.gates.size(); y++) {
                    if (c.gates[y] == c.gates[x]) {
                        record(apply_peephole(c, {x, y}));
                        changed = true;
                        break;
                    }
                    if (!gates_commute(c.gates[x], c.gates[y])) {
                        break;
                    }
                }
            }
        }
    }

    /// Removes CZ i-k after J_i against CX i->j and CZ j-k, leftmost first.
    void remove_czs(WireId i) {
        bool done = true;
        while (done) {
            done = false;
            for (auto zk : after_j(i, GateKind::CZ)) {
                WireId k = c.gates[zk].other(i);
                for (auto m : after_j(i, GateKind::CX)) {
                    WireId j = c.gates[m].b;
                    if (j == k) {
                        continue;
                    }
                    for (auto zj : find(Gate::cz(j, k))) {
                        if (gatherable(c, {m, zk, zj})) {
                            record(apply_cz_commute(c, {m, zk, zj}));
                            done = true;
                            break;
                        }
                    }
                    if (done) {
                        break;
                    }
                }
                if (done) {
                    break;
                }
            }
        }
    }

    /// Moves CX j->t (at p) forward until it meets CX i->j and CX i->t, then
    /// cancels CX i->t with cx-commute.
    bool transport_and_cancel(size_t p, WireId i, WireId j, WireId t) {
        for (int round = 0; round < 64; round++) {
            auto qs = find(Gate::cx(i, j));
            auto rs = find(Gate::cx(i, t));
            if (qs.empty() || rs.empty()) {
                return false;
            }
            size_t q = qs[0], r = rs[0];
            if (p != q && p != r && gatherable(c, {p, q, r})) {
                record(apply_cx_commute(c, {p, q, r}));
                return true;
            }
            if (p > q) {
                return false;
            }
            std::optional<size_t> blk;
            for (size_t m = p + 1; m < q; m++) {
                if (!gates_commute(c.gates[p], c.gates[m])) {
                    blk = m;
                    break;
                }
            }
            if (!blk) {
                return false;
            }
            const Gate gb = c.gates[*blk];
            std::vector<size_t> partners;
            bool cz_blocker = false;
            if (gb.kind == GateKind::CZ && gb.touches(t) && gb.other(t) != j) {
                partners = find(Gate::cz(j, gb.other(t)));
                cz_blocker = true;
            } else if (gb.kind == GateKind::CX && gb.b == j && gb.a != t) {
                partners = find(Gate::cx(gb.a, t));
            } else if (gb.kind == GateKind::CX && gb.a == t && gb.b != j) {
                partners = find(Gate::cx(j, gb.b));
            }
            bool moved = false;
            for (auto other : partners) {
                if (other == p || other == *blk || !gatherable(c, {p, *blk, other})) {
                    continue;
                }
                std::vector<size_t> site{p, *blk, other};
                size_t pos = insert_position(c, site);
                record(cz_blocker ? apply_cz_commute(c, site) : apply_cx_commute(c, site));
                p = pos + 1;
                moved = true;
                break;
            }
            if (!moved || c.gates[p] != Gate::cx(j, t)) {
                return false;
            }
        }
        return false;
    }
};

struct CxOption {
    WireId j;
    /// Existing CX j->t at p, or a CZ t-k / CZ j-k pair to mint it from.
    bool mint;
    size_t p, a, b;
};

std::vector<CxOption> cx_options(const Session &s, WireId i, WireId special, WireId t) {
    auto tg = s.targets(i);
    std::vector<WireId> js{special};
    for (auto x : std::set<WireId>(tg.begin(), tg.end())) {
        if (x != special && x != t) {
            js.push_back(x);
        }
    }
    std::set<WireId> ks;
    for (const auto &g : s.c.gates) {
        if (g.kind == GateKind::CZ && g.touches(t)) {
            ks.insert(g.other(t));
        }
    }
    std::vector<CxOption> out;
    for (auto j : js) {
        if (std::find(tg.begin(), tg.end(), j) == tg.end()) {
            continue;
        }
        for (auto p : s.find(Gate::cx(j, t))) {
            out.push_back({j, false, p, 0, 0});
        }
        for (auto k : ks) {
            if (k == j) {
                continue;
            }
            for (auto a : s.find(Gate::cz(t, k))) {
                for (auto b : s.find(Gate::cz(j, k))) {
                    out.push_back({j, true, 0, a, b});
                }
            }
        }
    }
    return out;
}

bool apply_option(Session &s, WireId i, WireId t, const CxOption &opt) {
    if (!opt.mint) {
        return s.transport_and_cancel(opt.p, i, opt.j, t);
    }
    std::vector<size_t> site{opt.a, opt.b};
    if (!gatherable(s.c, site) || !fresh_at(s.c, t, site)) {
        return false;
    }
    size_t pos = insert_position(s.c, site);
    s.record(apply_cz_to_cx(s.c, site, t));
    return s.transport_and_cancel(pos + 1, i, opt.j, t);
}

constexpr size_t kNodeCap = 200000;

/// Depth-first over measured wires in order. Each wire first gets a designated
/// CX (candidates ascending, one budgeted attempt each), then its other CXs are
/// cancelled trying every option, and the search backtracks on failure.
struct Search {
    const std::set<std::pair<WireId, WireId>> *edges = nullptr;
    const CorrectionStructure *structure = nullptr;
    std::vector<WireId> order;
    std::map<WireId, WireId> designated;
    std::set<WireId> used;
    size_t budget = 0;
    size_t attempts = 0;
    size_t nodes = 0;
    bool exhausted = false;
    Session best;

    void note(const Session &s) {
        if (s.steps.size() > best.steps.size()) {
            best = s;
        }
    }

    bool solve(Session &s, size_t n) {
        if (n == order.size()) {
            Session done = s;
            for (auto i : order) {
                if (!jgate_site(done.c, i, designated.at(i))) {
                    note(done);
                    return false;
                }
                done.record(apply_jgate(done.c, i, designated.at(i)));
            }
            s = std::move(done);
            return true;
        }
        WireId i = order[n];
        for (auto cand : structure->correcting_sets.at(i)) {
            if (used.contains(cand) || !edges->contains({std::min(i, cand), std::max(i, cand)})) {
                continue;
            }
            if (attempts >= budget) {
                exhausted = true;
                return false;
            }
            attempts++;
            designated[i] = cand;
            used.insert(cand);
            Session saved = s;
            if (cancel(s, n)) {
                return true;
            }
            note(s);
            s = std::move(saved);
            used.erase(cand);
            if (exhausted) {
                return false;
            }
        }
        return false;
    }

    /// Clears wire order[n] of everything but its designated CX.
    bool cancel(Session &s, size_t n) {
        if (++nodes > kNodeCap) {
            exhausted = true;
            return false;
        }
        WireId i = order[n], special = designated.at(i);
        s.peephole();
        s.remove_czs(i);
        s.peephole();
        note(s);
        std::optional<WireId> t;
        for (auto x : s.targets(i)) {
            if (x != special && (!t || x < *t)) {
                t = x;
            }
        }
        if (!t) {
            return s.after_j(i, GateKind::CZ).empty() && solve(s, n + 1);
        }
        for (const auto &opt : cx_options(s, i, special, *t)) {
            Session saved = s;
            if (apply_option(s, i, *t, opt) && cancel(s, n)) {
                return true;
            }
            note(s);
            s = std::move(saved);
            if (exhausted) {
                return false;
            }
        }
        return false;
    }
};

SimplifyResult make_result(const Circuit &initial, Session s, SimplifyStatus status, std::string failure) {
    SimplifyResult r;
    r.trace.initial_digest = digest(initial);
    r.trace.final_digest = digest(s.c);
    r.trace.steps = std::move(s.steps);
    r.circuit = std::move(s.c);
    r.status = status;
    r.failure = std::move(failure);
    return r;
}

}  // namespace

SimplifyResult owc::simplify_flow(const Circuit &circuit, const TimeSlicedView &view) {
    std::vector<std::pair<WireId, WireId>> order;
    for (size_t r = 0; r < view.rounds.size(); r++) {
        for (auto i : view.measured_in(circuit, r)) {
            std::vector<WireId> targets;
            for (auto k : view.rounds[r].correct) {
                const auto &g = circuit.gates.at(k);
                if (g.kind == GateKind::CX && g.a == i) {
                    targets.push_back(g.b);
                }
            }
            if (targets.size() != 1) {
                throw std::invalid_argument("Wire " + std::to_string(i) + " has " + std::to_string(targets.size()) +
                                            " correction CXs; a flow circuit has exactly one.");
            }
            order.emplace_back(i, targets[0]);
        }
    }

    Session s{circuit, {}};
    for (auto [i, f] : order) {
        s.peephole();
        s.remove_czs(i);
        s.peephole();
        if (!s.after_j(i, GateKind::CZ).empty()) {
            return make_result(circuit, std::move(s), SimplifyStatus::Stuck,
                               "a CZ on wire " + std::to_string(i) + " could not be removed");
        }
    }
    for (auto [i, f] : order) {
        if (!jgate_site(s.c, i, f)) {
            return make_result(circuit, std::move(s), SimplifyStatus::Stuck,
                               "jgate " + std::to_string(i) + " -> " + std::to_string(f) + " does not apply");
        }
        s.record(apply_jgate(s.c, i, f));
    }
    auto r = make_result(circuit, std::move(s), SimplifyStatus::Ok, "");
    r.attempts = 1;
    return r;
}

SimplifyResult owc::simplify_gflow(const Circuit &circuit, const TimeSlicedView &view,
                                   const CorrectionStructure &structure, const SimplifyOptions &options) {
    std::set<std::pair<WireId, WireId>> edges;
    if (!view.rounds.empty()) {
        for (auto k : view.rounds[0].entangle) {
            edges.emplace(circuit.gates.at(k).a, circuit.gates.at(k).b);
        }
    }
    Search search;
    search.edges = &edges;
    search.structure = &structure;
    search.order = structure.measurement_order();
    search.budget = options.search_budget;
    search.best = Session{circuit, {}};

    Session s{circuit, {}};
    SimplifyResult r;
    if (search.solve(s, 0)) {
        r = make_result(circuit, std::move(s), SimplifyStatus::Ok, "");
    } else if (search.exhausted) {
        r = make_result(circuit, search.best, SimplifyStatus::SearchExhausted,
                        search.attempts >= options.search_budget
                            ? "search budget of " + std::to_string(options.search_budget) +
                                  " designation attempt(s) exhausted"
                            : "search node limit reached");
    } else {
        r = make_result(circuit, search.best, SimplifyStatus::Stuck, "no designation of kept CXs succeeded");
    }
    r.attempts = search.attempts;
    return r;
}
