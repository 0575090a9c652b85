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

#ifndef OWC_GRAPH_FILE_H
#define OWC_GRAPH_FILE_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "owc/graph.h"

namespace owc {

/// A graph description, e.g.
///
///   # two measured vertices
///   vertices: 1 2 3
///   edges: 1-2 2-3
///   inputs: 1
///   outputs: 3
///   angles: 1=1/4pi 2=0.5
///   correcting_sets: 1={2} 2={3}
///
/// correcting_sets is optional; every other key is required (edges and angles
/// may be empty).
struct GraphFile {
    OpenGraph graph;
    std::optional<std::map<Vertex, VertexSet>> correcting_sets;
};

class GraphFileError : public std::invalid_argument {
   public:
    GraphFileError(size_t line, size_t column, const std::string &message);

    size_t line() const {
        return line_;
    }
    size_t column() const {
        return column_;
    }

   private:
    size_t line_;
    size_t column_;
};

/// Throws GraphFileError ("line L, column C: ...") for malformed text and for
/// graphs that fail validation.
GraphFile parse_graph_file(std::string_view text);
std::string emit_graph_file(const GraphFile &file);

}  // namespace owc

#endif
