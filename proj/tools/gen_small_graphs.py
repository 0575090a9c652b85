#!/usr/bin/env python3
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

"""Writes every connected graph on 1..7 vertices (up to isomorphism).

One graph per line: "<n> a-b a-b ...", vertices numbered 1..n.
Source: the networkx graph atlas.
"""

import sys

import networkx as nx


def main():
    out = sys.stdout
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        edges = sorted((min(a, b) + 1, max(a, b) + 1) for a, b in g.edges())
        out.write(" ".join([str(n)] + [f"{a}-{b}" for a, b in edges]) + "\n")


if __name__ == "__main__":
    main()
