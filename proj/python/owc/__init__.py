# Copyright 2026 The owc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Compiles measurement patterns into compact circuits."""

from ._owc import (
    CompileResult,
    Graph,
    GraphFile,
    SimulationError,
    Structure,
    compile,
    find_flow,
    find_gflow,
    isometry,
    max_deviation,
    parse_graph,
    validate_gflow,
)

__all__ = [
    "CompileResult",
    "Graph",
    "GraphFile",
    "SimulationError",
    "Structure",
    "compile",
    "find_flow",
    "find_gflow",
    "isometry",
    "max_deviation",
    "parse_graph",
    "validate_gflow",
]
