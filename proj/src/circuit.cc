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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <stdexcept>

using namespace owc;

namespace {

WireId parse_wire(std::string_view text) {
    WireId value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("bad wire id '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        if (k > start) {
            out.push_back(line.substr(start, k - start));
        }
    }
    return out;
}

}  // namespace

Gate Gate::j(WireId w, Angle angle) {
    return Gate{GateKind::J, w, 0, angle};
}

Gate Gate::cz(WireId a, WireId b) {
    return Gate{GateKind::CZ, std::min(a, b), std::max(a, b), Angle()};
}

Gate Gate::cx(WireId control, WireId target) {
    return Gate{GateKind::CX, control, target, Angle()};
}

Gate Gate::relabeled(WireId from, WireId to) const {
    auto r = [&](WireId w) {
        return w == from ? to : w;
    };
    switch (kind) {
        case GateKind::J:
            return j(r(a), angle);
        case GateKind::CZ:
            return cz(r(a), r(b));
        case GateKind::CX:
            return cx(r(a), r(b));
    }
    return *this;
}

std::string Gate::str() const {
    switch (kind) {
        case GateKind::J:
            return "J(" + angle.str() + ") " + std::to_string(a);
        case GateKind::CZ:
            return "CZ " + std::to_string(a) + " " + std::to_string(b);
        case GateKind::CX:
            return "CX " + std::to_string(a) + " " + std::to_string(b);
    }
    return "";
}

Gate Gate::parse(std::string_view text) {
    auto parts = split_ws(text);
    if (parts.empty()) {
        throw std::invalid_argument("empty gate");
    }
    auto head = parts[0];
    if (head.starts_with("J(") && head.ends_with(")")) {
        if (parts.size() != 2) {
            throw std::invalid_argument("J takes one wire");
        }
        return j(parse_wire(parts[1]), Angle::parse(head.substr(2, head.size() - 3)));
    }
    if (head == "CZ" || head == "CX") {
        if (parts.size() != 3) {
            throw std::invalid_argument(std::string(head) + " takes two wires");
        }
        WireId a = parse_wire(parts[1]);
        WireId b = parse_wire(parts[2]);
        if (a == b) {
            throw std::invalid_argument(std::string(head) + " on a single wire");
        }
        if (head == "CZ") {
            if (a > b) {
                throw std::invalid_argument("CZ wires must be in ascending order");
            }
            return cz(a, b);
        }
        return cx(a, b);
    }
    throw std::invalid_argument("unknown gate '" + std::string(head) + "'");
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || a != other.a) {
        return false;
    }
    if (kind == GateKind::J) {
        return angle == other.angle;
    }
    return b == other.b;
}

bool owc::gates_commute(const Gate &x, const Gate &y) {
    bool shared = x.touches(y.a) || (y.is_two_qubit() && x.touches(y.b));
    if (!shared) {
        return true;
    }
    if (x.kind == GateKind::J || y.kind == GateKind::J) {
        return false;
    }
    if (x.kind == GateKind::CZ && y.kind == GateKind::CZ) {
        return true;
    }
    if (x.kind == GateKind::CX && y.kind == GateKind::CX) {
        return x.a != y.b && y.a != x.b;
    }
    const Gate &z = x.kind == GateKind::CZ ? x : y;
    const Gate &c = x.kind == GateKind::CZ ? y : x;
    return !z.touches(c.b);
}

bool Circuit::has_wire(WireId id) const {
    return std::any_of(wires.begin(), wires.end(), [&](const Wire &w) {
        return w.id == id;
    });
}

const Wire &Circuit::wire(WireId id) const {
    for (const auto &w : wires) {
        if (w.id == id) {
            return w;
        }
    }
    throw std::invalid_argument("Unknown wire " + std::to_string(id) + ".");
}

Wire &Circuit::wire(WireId id) {
    return const_cast<Wire &>(static_cast<const Circuit *>(this)->wire(id));
}

void Circuit::add_wire(Wire w) {
    if (has_wire(w.id)) {
        throw std::invalid_argument("Duplicate wire " + std::to_string(w.id) + ".");
    }
    auto pos = std::lower_bound(wires.begin(), wires.end(), w.id, [](const Wire &x, WireId id) {
        return x.id < id;
    });
    wires.insert(pos, w);
}

void Circuit::remove_wire(WireId id) {
    auto it = std::find_if(wires.begin(), wires.end(), [&](const Wire &w) {
        return w.id == id;
    });
    if (it == wires.end()) {
        throw std::invalid_argument("Unknown wire " + std::to_string(id) + ".");
    }
    wires.erase(it);
}

std::vector<WireId> Circuit::input_wires_by_origin() const {
    std::vector<const Wire *> ins;
    for (const auto &w : wires) {
        if (w.init == WireInit::Input) {
            ins.push_back(&w);
        }
    }
    std::sort(ins.begin(), ins.end(), [](const Wire *x, const Wire *y) {
        return x->origin < y->origin;
    });
    std::vector<WireId> out;
    for (auto w : ins) {
        out.push_back(w->id);
    }
    return out;
}

std::vector<WireId> Circuit::output_wires() const {
    std::vector<WireId> out;
    for (const auto &w : wires) {
        if (w.terminal == WireTerminal::Output) {
            out.push_back(w.id);
        }
    }
    return out;
}

std::vector<WireId> Circuit::measured_wires() const {
    std::vector<WireId> out;
    for (const auto &w : wires) {
        if (w.terminal == WireTerminal::Measured) {
            out.push_back(w.id);
        }
    }
    return out;
}

size_t Circuit::count(GateKind kind) const {
    return std::count_if(gates.begin(), gates.end(), [&](const Gate &g) {
        return g.kind == kind;
    });
}

std::vector<std::string> owc::validate(const Circuit &circuit) {
    std::vector<std::string> bad;
    for (size_t k = 1; k < circuit.wires.size(); k++) {
        if (circuit.wires[k - 1].id >= circuit.wires[k].id) {
            bad.push_back("wires are not in strictly ascending id order");
        }
    }
    std::map<WireId, size_t> j_count;
    for (size_t k = 0; k < circuit.gates.size(); k++) {
        const auto &g = circuit.gates[k];
        auto where = "gate " + std::to_string(k) + " (" + g.str() + ")";
        if (!circuit.has_wire(g.a) || (g.is_two_qubit() && !circuit.has_wire(g.b))) {
            bad.push_back(where + " references an undeclared wire");
        }
        if (g.is_two_qubit() && g.a == g.b) {
            bad.push_back(where + " acts twice on one wire");
        }
        if (g.kind == GateKind::CZ && g.a > g.b) {
            bad.push_back(where + " is not in canonical order");
        }
        if (g.kind == GateKind::J) {
            j_count[g.a]++;
        }
    }
    for (auto w : circuit.measured_wires()) {
        if (j_count[w] == 0) {
            bad.push_back("measured wire " + std::to_string(w) + " carries no J gate");
        }
    }
    return bad;
}

Eigen::Matrix2cd owc::j_matrix(double radians) {
    std::complex<double> e = std::polar(1.0, radians);
    double s = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    m << s, s * e, s, -s * e;
    return m;
}

Eigen::Matrix2cd owc::j_matrix(const Angle &angle) {
    return j_matrix(angle.to_radians());
}

std::vector<WireId> TimeSlicedView::measured_in(const Circuit &circuit, size_t r) const {
    std::vector<WireId> out;
    for (auto k : rounds[r].measure) {
        out.push_back(circuit.gates[k].a);
    }
    return out;
}

TimeSlicedView owc::slice(const Circuit &circuit, const CorrectionStructure &structure) {
    auto fail = [](const std::string &why) {
        throw std::invalid_argument("Circuit does not match the correction structure: " + why + ".");
    };
    const auto &gates = circuit.gates;
    TimeSlicedView view;
    size_t num_rounds = std::max<size_t>(1, structure.layers.size());
    view.rounds.resize(num_rounds);

    size_t k = 0;
    while (k < gates.size() && gates[k].kind == GateKind::CZ) {
        view.rounds[0].entangle.push_back(k++);
    }
    for (size_t r = 0; r < structure.layers.size(); r++) {
        for (auto v : structure.layers[r]) {
            if (k >= gates.size() || gates[k].kind != GateKind::J || gates[k].a != v) {
                fail("expected the J gate of vertex " + std::to_string(v));
            }
            view.rounds[r].measure.push_back(k++);
        }
        while (k < gates.size() && gates[k].kind != GateKind::J) {
            const auto &g = gates[k];
            if (!structure.layers[r].contains(g.a) && !(g.kind == GateKind::CZ && structure.layers[r].contains(g.b))) {
                fail("correction gate " + g.str() + " is not controlled by round " + std::to_string(r + 1));
            }
            view.rounds[r].correct.push_back(k++);
        }
    }
    if (k != gates.size()) {
        fail("unexpected gate " + gates[k].str());
    }
    return view;
}

std::string owc::emit_text(const Circuit &circuit) {
    std::string out;
    for (const auto &w : circuit.wires) {
        out += "wire " + std::to_string(w.id);
        out += w.init == WireInit::Input ? " input" : " plus";
        out += w.terminal == WireTerminal::Output ? " output" : " measured";
        if (w.init == WireInit::Input && w.origin != w.id) {
            out += " origin=" + std::to_string(w.origin);
        }
        out += "\n";
    }
    for (const auto &g : circuit.gates) {
        out += g.str();
        out += "\n";
    }
    return out;
}

Circuit owc::parse_text(std::string_view text) {
    Circuit circuit;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        auto parts = split_ws(line);
        if (parts.empty() || parts[0].starts_with("#")) {
            continue;
        }
        try {
            if (parts[0] == "wire") {
                if (parts.size() < 4 || parts.size() > 5) {
                    throw std::invalid_argument("expected 'wire <id> input|plus output|measured [origin=<v>]'");
                }
                Wire w;
                w.id = parse_wire(parts[1]);
                w.origin = w.id;
                if (parts[2] == "input") {
                    w.init = WireInit::Input;
                } else if (parts[2] == "plus") {
                    w.init = WireInit::Plus;
                } else {
                    throw std::invalid_argument("wire init must be 'input' or 'plus'");
                }
                if (parts[3] == "output") {
                    w.terminal = WireTerminal::Output;
                } else if (parts[3] == "measured") {
                    w.terminal = WireTerminal::Measured;
                } else {
                    throw std::invalid_argument("wire terminal must be 'output' or 'measured'");
                }
                if (parts.size() == 5) {
                    if (!parts[4].starts_with("origin=")) {
                        throw std::invalid_argument("unexpected token '" + std::string(parts[4]) + "'");
                    }
                    w.origin = parse_wire(parts[4].substr(7));
                }
                circuit.add_wire(w);
            } else {
                auto g = Gate::parse(line);
                if (!circuit.has_wire(g.a) || (g.is_two_qubit() && !circuit.has_wire(g.b))) {
                    throw std::invalid_argument("gate references an undeclared wire");
                }
                circuit.gates.push_back(g);
            }
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return circuit;
}

std::string owc::digest(const Circuit &circuit) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : emit_text(circuit)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}
