"""Mutable undirected simple graph with sorted adjacency lists.

Neighborhood queries use the closed convention throughout: the
neighborhood of u contains u itself. Adjacency lists are kept sorted by
vertex id so that intersections, unions and subset tests run as merges of
ascending lists. Reads are safe from several threads between mutations;
mutation requires exclusive access.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from typing import Iterable, Iterator, Sequence

from ._kernels import insert_sorted, intersect_sorted, issubset_sorted
from .errors import FormatError, SelfLoopError, UnknownVertexError


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    """Return the endpoint pair ordered ascending; reject self-loops."""
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph over non-negative integer vertex ids.

    Vertices are created implicitly the first time they appear in an edge
    or an explicit :meth:`add_vertex` call.
    """

    __slots__ = ("_adj", "_edge_count")

    def __init__(self) -> None:
        self._adj: dict[int, list[int]] = {}
        self._edge_count = 0

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls()
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {u: list(nbrs) for u, nbrs in self._adj.items()}
        g._edge_count = self._edge_count
        return g

    # -- vertices ---------------------------------------------------------

    def add_vertex(self, u: int) -> bool:
        """Register u; returns False if it was already known."""
        if u in self._adj:
            return False
        self._adj[u] = []
        return True

    def has_vertex(self, u: int) -> bool:
        return u in self._adj

    def vertices(self) -> list[int]:
        """All vertex ids, ascending."""
        return sorted(self._adj)

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    # -- edges ------------------------------------------------------------

    def add_edge(self, u: int, v: int) -> bool:
        """Insert edge uv, registering unknown endpoints.

        Returns True if the edge is new, False (without mutation) if it was
        already present.
        """
        u, v = canonical_edge(u, v)
        au = self._adj.setdefault(u, [])
        av = self._adj.setdefault(v, [])
        i = bisect_left(au, v)
        if i != len(au) and au[i] == v:
            return False
        au.insert(i, v)
        insort(av, u)
        self._edge_count += 1
        return True

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        au = self._adj.get(u)
        av = self._adj.get(v)
        if au is None or av is None:
            return False
        if len(av) < len(au):
            au, v = av, u
        i = bisect_left(au, v)
        return i != len(au) and au[i] == v

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as ascending pairs, in lexicographic order."""
        for u in sorted(self._adj):
            for v in self._adj[u]:
                if v > u:
                    yield (u, v)

    # -- neighborhoods ----------------------------------------------------

    def degree(self, u: int) -> int:
        try:
            return len(self._adj[u])
        except KeyError:
            raise UnknownVertexError(u) from None

    def neighbors(self, u: int) -> list[int]:
        """Open neighborhood of u, ascending. Treat as read-only."""
        try:
            return self._adj[u]
        except KeyError:
            raise UnknownVertexError(u) from None

    def neighbors_closed(self, u: int) -> list[int]:
        """Closed neighborhood of u (u included), ascending, as a new list."""
        try:
            nbrs = self._adj[u]
        except KeyError:
            raise UnknownVertexError(u) from None
        return insert_sorted(nbrs, u)

    def common_neighbors_closed(self, u: int, v: int) -> list[int]:
        """Intersection of the closed neighborhoods of u and v, ascending."""
        return intersect_sorted(self.neighbors_closed(u), self.neighbors_closed(v))


def is_clique(g: Graph, members: Sequence[int]) -> bool:
    """True if the member set induces a complete subgraph of g.

    Singletons count; unknown vertices do not.
    """
    ms = sorted(members)
    for w in ms:
        if not g.has_vertex(w):
            return False
        if not issubset_sorted(ms, g.neighbors_closed(w)):
            return False
    return True


def load_edge_list(path) -> Graph:
    """Read a graph from an edge-list text file.

    One edge per line, ``u v`` or ``u v weight``; lines starting with '#'
    are comments; ids are decimal non-negative integers. Weights are
    accepted and ignored here.
    """
    g = Graph()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) not in (2, 3):
                raise FormatError(f"{path}:{lineno}: expected 'u v' or 'u v weight'")
            try:
                u = int(parts[0])
                v = int(parts[1])
            except ValueError:
                raise FormatError(f"{path}:{lineno}: vertex ids must be integers") from None
            if u < 0 or v < 0:
                raise FormatError(f"{path}:{lineno}: vertex ids must be non-negative")
            if len(parts) == 3:
                try:
                    float(parts[2])
                except ValueError:
                    raise FormatError(f"{path}:{lineno}: weight must be a number") from None
            if u == v:
                raise FormatError(f"{path}:{lineno}: self-loop at vertex {u}")
            g.add_edge(u, v)
    return g
