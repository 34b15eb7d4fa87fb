"""Shared graph builders for the test suite."""

import random

from dynaclique.graph import Graph


def p3() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2)])


def triangle() -> Graph:
    return Graph.from_edges([(0, 1), (0, 2), (1, 2)])


def k4_minus(u: int = 0, v: int = 1) -> Graph:
    g = Graph()
    for a in range(4):
        for b in range(a + 1, 4):
            if (a, b) != (u, v):
                g.add_edge(a, b)
    return g


def five_vertex() -> Graph:
    # Two triangles sharing the edge (2, 3) plus a pendant at 0.
    return Graph.from_edges([(0, 2), (0, 3), (2, 3), (1, 2), (1, 3), (0, 4)])


def star(leaves: int = 3) -> Graph:
    return Graph.from_edges([(0, i) for i in range(1, leaves + 1)])


def edgeless(n: int) -> Graph:
    g = Graph()
    for u in range(n):
        g.add_vertex(u)
    return g


def cocktail_party(m: int) -> Graph:
    """Complement of a perfect matching on 2m vertices: vertex 2i is
    non-adjacent to 2i+1 only."""
    g = Graph()
    n = 2 * m
    for a in range(n):
        for b in range(a + 1, n):
            if not (a // 2 == b // 2):
                g.add_edge(a, b)
    return g


def er_graph(n: int, p: float, rng: random.Random) -> Graph:
    g = Graph()
    for u in range(n):
        g.add_vertex(u)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def random_insertion_order(g: Graph, rng: random.Random) -> list[tuple[int, int]]:
    edges = list(g.edges())
    rng.shuffle(edges)
    return edges
