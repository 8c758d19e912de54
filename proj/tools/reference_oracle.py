#!/usr/bin/env python3
"""Slow, independent reference values for the test suite.

Brute force only: for each size k every configuration is explored by
breadth-first search over all reachable configurations, no pruning, no
shortcuts, no symmetry. Distances come from networkx. Usage:

    reference_oracle.py GRAPH6 [GRAPH6 ...]     print psi, lambda, Omega_1, Omega_2
    reference_oracle.py --unsolvable GOAL GRAPH6 CONFIG
"""
import argparse
import itertools
import sys
from functools import lru_cache

import networkx as nx


def parse(g6):
    return nx.from_graph6_bytes(g6.encode())


def dominated(g, config):
    covered = {v for v, c in enumerate(config) if c > 0}
    seen = set(covered)
    for v in covered:
        seen.update(g[v])
    return seen


def goal_holds(g, config, goal):
    kind, omega = goal
    n = g.number_of_nodes()
    if kind == "cover":
        return all(c > 0 for c in config)
    dom = dominated(g, config)
    if kind == "dcp":
        return len(dom) == n
    rest = g.subgraph(set(range(n)) - dom)
    return all(len(comp) <= omega for comp in nx.connected_components(rest))


def solvable(g, start, goal):
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for config in frontier:
            if goal_holds(g, config, goal):
                return True
            for u, v in itertools.chain(g.edges(), ((b, a) for a, b in g.edges())):
                if config[u] >= 2:
                    c = list(config)
                    c[u] -= 2
                    c[v] += 1
                    c = tuple(c)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
        frontier = nxt
    return False


def configurations(n, k):
    for combo in itertools.combinations_with_replacement(range(n), k):
        c = [0] * n
        for v in combo:
            c[v] += 1
        yield tuple(c)


def value(g, goal, cap=64):
    n = g.number_of_nodes()
    for k in range(cap + 1):
        if all(solvable(g, c, goal) for c in configurations(n, k)):
            return k
    raise RuntimeError("cap reached")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--unsolvable", nargs=3, metavar=("GOAL", "GRAPH6", "CONFIG"))
    ap.add_argument("graphs", nargs="*")
    args = ap.parse_args()
    if args.unsolvable:
        goal_name, g6, config = args.unsolvable
        goal = ("subversion", int(goal_name[1:])) if goal_name.startswith("s") else (goal_name, 0)
        c = tuple(int(x) for x in config.split(","))
        print("solvable" if solvable(parse(g6), c, goal) else "unsolvable")
        return
    for g6 in args.graphs:
        g = parse(g6)
        n = g.number_of_nodes()
        row = [g6, n, nx.diameter(g), value(g, ("dcp", 0)), value(g, ("cover", 0))]
        row += [value(g, ("subversion", w)) for w in (1, 2)]
        print(*row)
        sys.stdout.flush()


if __name__ == "__main__":
    main()
