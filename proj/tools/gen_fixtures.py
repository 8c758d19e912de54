#!/usr/bin/env python3
"""Regenerate tests/fixtures/connected_order{N}.g6 from the networkx graph atlas.

The atlas lists every graph on up to 7 vertices (one per isomorphism class);
we keep the connected ones and write one graph6 line each.
"""
import pathlib
import sys

import networkx as nx

out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
out_dir.mkdir(parents=True, exist_ok=True)

by_order = {}
for g in nx.graph_atlas_g():
    n = g.number_of_nodes()
    if n == 0 or not nx.is_connected(g):
        continue
    line = nx.to_graph6_bytes(g, header=False).decode().strip()
    by_order.setdefault(n, []).append(line)

for n, lines in sorted(by_order.items()):
    (out_dir / f"connected_order{n}.g6").write_text("\n".join(lines) + "\n")
    print(n, len(lines))
