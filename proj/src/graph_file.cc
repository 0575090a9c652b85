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

#include "owc/graph_file.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <vector>

using namespace owc;

GraphFileError::GraphFileError(size_t line, size_t column, const std::string &message)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    size_t line;
    size_t column;
};

/// Splits on whitespace, except inside braces.
std::vector<Token> tokenize(std::string_view s, size_t line, size_t offset) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && isspace((unsigned char)s[k])) {
            k++;
        }
        if (k == s.size()) {
            break;
        }
        size_t start = k;
        int depth = 0;
        while (k < s.size() && (depth > 0 || !isspace((unsigned char)s[k]))) {
            depth += s[k] == '{' ? 1 : s[k] == '}' ? -1 : 0;
            k++;
        }
        if (depth != 0) {
            throw GraphFileError(line, offset + start + 1, "unbalanced braces");
        }
        out.push_back({s.substr(start, k - start), line, offset + start + 1});
    }
    return out;
}

Vertex vertex(const Token &t, std::string_view text, size_t at = 0) {
    while (!text.empty() && isspace((unsigned char)text.front())) {
        text.remove_prefix(1);
        at++;
    }
    while (!text.empty() && isspace((unsigned char)text.back())) {
        text.remove_suffix(1);
    }
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw GraphFileError(t.line, t.column + at, "expected a vertex id, got '" + std::string(text) + "'");
    }
    return v;
}

constexpr std::string_view kKeys[] = {"vertices", "edges", "inputs", "outputs", "angles", "correcting_sets"};

}  // namespace

GraphFile owc::parse_graph_file(std::string_view text) {
    std::map<std::string, std::vector<Token>> values;
    std::map<std::string, size_t> key_line;
    size_t line_no = 0;
    while (!text.empty() || line_no == 0) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) {
            if (text.empty()) {
                break;
            }
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw GraphFileError(line_no, first + 1, "expected 'key: values'");
        }
        std::string key(line.substr(first, colon - first));
        while (!key.empty() && isspace((unsigned char)key.back())) {
            key.pop_back();
        }
        if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
            throw GraphFileError(line_no, first + 1, "unknown key '" + key + "'");
        }
        if (values.contains(key)) {
            throw GraphFileError(line_no, first + 1, "duplicate key '" + key + "'");
        }
        values[key] = tokenize(line.substr(colon + 1), line_no, colon + 1);
        key_line[key] = line_no;
    }

    // Every vertex mention, for the declared-vertex check at the end.
    std::vector<std::pair<Vertex, Token>> mentions;
    auto mention = [&](const Token &t, std::string_view s, size_t at = 0) {
        Vertex v = vertex(t, s, at);
        mentions.push_back({v, {s, t.line, t.column + at}});
        return v;
    };

    std::vector<Vertex> vertices;
    std::set<Vertex> declared;
    for (const auto &t : values["vertices"]) {
        vertices.push_back(vertex(t, t.text));
        if (!declared.insert(vertices.back()).second) {
            throw GraphFileError(t.line, t.column, "vertex " + std::string(t.text) + " is listed twice");
        }
    }
    std::vector<Edge> edges;
    for (const auto &t : values["edges"]) {
        auto dash = t.text.find('-');
        if (dash == std::string_view::npos) {
            throw GraphFileError(t.line, t.column, "expected an edge 'a-b', got '" + std::string(t.text) + "'");
        }
        Vertex a = mention(t, t.text.substr(0, dash));
        Vertex b = mention(t, t.text.substr(dash + 1), dash + 1);
        if (a == b) {
            throw GraphFileError(t.line, t.column, "self-loop on vertex " + std::to_string(a));
        }
        edges.emplace_back(a, b);
    }
    VertexSet inputs, outputs;
    for (const auto &t : values["inputs"]) {
        inputs.insert(mention(t, t.text));
    }
    for (const auto &t : values["outputs"]) {
        outputs.insert(mention(t, t.text));
    }
    std::map<Vertex, Angle> angles;
    for (const auto &t : values["angles"]) {
        auto eq = t.text.find('=');
        if (eq == std::string_view::npos) {
            throw GraphFileError(t.line, t.column, "expected 'vertex=angle', got '" + std::string(t.text) + "'");
        }
        Vertex v = mention(t, t.text.substr(0, eq));
        if (outputs.contains(v)) {
            throw GraphFileError(t.line, t.column, "output vertex " + std::to_string(v) + " has an angle");
        }
        try {
            angles[v] = Angle::parse(t.text.substr(eq + 1));
        } catch (const std::invalid_argument &e) {
            throw GraphFileError(t.line, t.column + eq + 1, e.what());
        }
    }
    GraphFile file;
    if (values.contains("correcting_sets")) {
        std::map<Vertex, VertexSet> sets;
        for (const auto &t : values["correcting_sets"]) {
            auto eq = t.text.find('=');
            if (eq == std::string_view::npos || t.text.size() < eq + 3 || t.text[eq + 1] != '{' ||
                t.text.back() != '}') {
                throw GraphFileError(t.line, t.column, "expected 'vertex={a,b,...}', got '" + std::string(t.text) + "'");
            }
            Vertex i = mention(t, t.text.substr(0, eq));
            if (outputs.contains(i)) {
                throw GraphFileError(t.line, t.column, "output vertex " + std::to_string(i) + " has a correcting set");
            }
            VertexSet members;
            std::string_view body = t.text.substr(eq + 2, t.text.size() - eq - 3);
            size_t at = eq + 2;
            while (!body.empty()) {
                auto comma = body.find(',');
                members.insert(mention(t, body.substr(0, comma), at));
                if (comma == std::string_view::npos) {
                    break;
                }
                body.remove_prefix(comma + 1);
                at += comma + 1;
            }
            if (!sets.emplace(i, members).second) {
                throw GraphFileError(t.line, t.column, "second correcting set for vertex " + std::to_string(i));
            }
        }
        file.correcting_sets = std::move(sets);
    }
    for (auto key : {"vertices", "edges", "inputs", "outputs", "angles"}) {
        if (!key_line.contains(key)) {
            throw GraphFileError(line_no, 1, std::string("missing key '") + key + "'");
        }
    }
    for (const auto &[v, t] : mentions) {
        if (!declared.contains(v)) {
            throw GraphFileError(t.line, t.column, "vertex " + std::to_string(v) + " is not listed under vertices");
        }
    }
    for (auto v : vertices) {
        if (!outputs.contains(v) && !angles.contains(v)) {
            throw GraphFileError(key_line["angles"], 1, "measured vertex " + std::to_string(v) + " has no angle");
        }
    }
    file.graph = OpenGraph(vertices, edges, inputs, outputs, angles);
    if (auto report = validate(file.graph); !report.ok()) {
        throw GraphFileError(key_line["vertices"], 1, report.violations.front());
    }
    return file;
}

std::string owc::emit_graph_file(const GraphFile &file) {
    const auto &g = file.graph;
    std::string out = "vertices:";
    for (auto v : g.vertices()) {
        out += " " + std::to_string(v);
    }
    out += "\nedges:";
    for (auto [a, b] : g.edges()) {
        out += " " + std::to_string(a) + "-" + std::to_string(b);
    }
    out += "\ninputs:";
    for (auto v : g.inputs()) {
        out += " " + std::to_string(v);
    }
    out += "\noutputs:";
    for (auto v : g.outputs()) {
        out += " " + std::to_string(v);
    }
    out += "\nangles:";
    for (auto v : g.measured()) {
        out += " " + std::to_string(v) + "=" + g.angle(v).str();
    }
    out += "\n";
    if (file.correcting_sets) {
        out += "correcting_sets:";
        for (const auto &[i, s] : *file.correcting_sets) {
            std::string members;
            for (auto j : s) {
                members += (members.empty() ? "" : ",") + std::to_string(j);
            }
            out += " " + std::to_string(i) + "={" + members + "}";
        }
        out += "\n";
    }
    return out;
}
