#!/usr/bin/env python3
"""Reference values frozen into the C++ tests.

Acyclic chromatic indices come from a plain brute force over all colorings
(itertools.product), independent of the C++ search. graph6 strings come from
networkx. Run with no arguments; prints one line per value.
"""

import itertools

import networkx as nx


def is_acyclic_coloring(graph, edges, colors):
    by_vertex = {}
    for (u, v), c in zip(edges, colors):
        for x in (u, v):
            if c in by_vertex.setdefault(x, set()):
                return False
            by_vertex[x].add(c)
    used = sorted(set(colors))
    for a, b in itertools.combinations(used, 2):
        sub = nx.Graph()
        sub.add_edges_from(e for e, c in zip(edges, colors) if c in (a, b))
        if sub.number_of_edges() and not nx.is_forest(sub):
            return False
    return True


def acyclic_index(graph, limit=8):
    edges = list(graph.edges())
    if not edges:
        return 0
    for k in range(1, limit + 1):
        # First edge fixed to color 0 to trim the symmetric half of the search.
        for rest in itertools.product(range(k), repeat=len(edges) - 1):
            if is_acyclic_coloring(graph, edges, (0,) + rest):
                return k
    return None


def ordered(graph):
    h = nx.Graph()
    h.add_nodes_from(sorted(graph.nodes()))
    h.add_edges_from(graph.edges())
    return h


def graph6(graph):
    return nx.to_graph6_bytes(ordered(graph), header=False).decode().strip()


def main():
    cases = {
        "C4": nx.cycle_graph(4),
        "C5": nx.cycle_graph(5),
        "C6": nx.cycle_graph(6),
        "P4": nx.path_graph(4),
        "K1,3": nx.complete_bipartite_graph(1, 3),
        "K4": nx.complete_graph(4),
        "K3,3": nx.complete_bipartite_graph(3, 3),
    }
    for name, g in cases.items():
        print(f"index {name} = {acyclic_index(g)}")

    encodings = {
        "C5": nx.cycle_graph(5),
        "K4": nx.complete_graph(4),
        "P3": nx.path_graph(3),
        "K3,3": nx.complete_bipartite_graph(3, 3),
        "empty0": nx.empty_graph(0),
        "empty1": nx.empty_graph(1),
        "K7": nx.complete_graph(7),
        "icosahedron": nx.icosahedral_graph(),
        "C63 prefix": nx.cycle_graph(63),
    }
    for name, g in encodings.items():
        text = graph6(g)
        print(f"graph6 {name} = {text[:17] if name.endswith('prefix') else text}")


if __name__ == "__main__":
    main()
