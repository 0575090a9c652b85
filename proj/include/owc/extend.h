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

#ifndef OWC_EXTEND_H
#define OWC_EXTEND_H

#include "owc/circuit.h"
#include "owc/determinism.h"
#include "owc/graph.h"

namespace owc {

/// One wire per vertex; all entangling CZs first (sorted edges), then per layer
/// the J(-theta) gates followed by each vertex's coherent correction block:
/// CX i->j for j in g(i) ascending, then CZ i-k for every k in N(j) \ {i} over
/// all j, ascending, duplicates kept. When g(i) has an internal edge those
/// gates no longer commute, and the block is emitted one stabilizer at a time
/// (CX i->j followed by its own CZs).
///
/// Throws std::invalid_argument when the graph or structure is invalid.
Circuit build_extended(const OpenGraph &graph, const CorrectionStructure &structure);

}  // namespace owc

#endif
