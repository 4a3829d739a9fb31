#!/usr/bin/env python3
"""Writes every connected graph on 2..7 vertices (up to isomorphism) in graph6.

The list comes from the networkx graph atlas, which enumerates all graphs with
at most seven vertices.
"""
import sys

import networkx as nx


def main(path):
    with open(path, "wb") as out:
        for g in nx.graph_atlas_g():
            if len(g) >= 2 and nx.is_connected(g):
                out.write(nx.to_graph6_bytes(g, header=False))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_upto7.g6")
