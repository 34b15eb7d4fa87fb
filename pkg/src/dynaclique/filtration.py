"""Distance-sorted edge streams from point clouds, and the stream driver.

Sorting all pairwise distances of a point cloud yields a growing sequence
of graphs; replaying the stream through the dynamic engine maintains the
exact clique enumeration of every prefix graph and emits one audit record
per step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .batch import IndependenceMode, apply_batch, schedule_batch
from .dynamic import insert_edge_update
from .errors import FormatError
from .graph import Graph, canonical_edge
from .index import KCliqueIndex, MaximalCliqueIndex
from .kclique import k_insert_edge_update
from .reports import InsertionReport, Method

Point = tuple[float, ...]


@dataclass
class EdgeStream:
    """Ordered edge insertions, optionally weighted.

    Weighted entries must be non-decreasing in weight and that cannot be
    mixed with unweighted ones; edges are pairwise distinct either way.
    """

    entries: list[tuple[tuple[int, int], float | None]]

    def __post_init__(self) -> None:
        seen = set()
        prev: float | None = None
        weighted = None
        for edge, weight in self.entries:
            e = canonical_edge(*edge)
            if e in seen:
                raise ValueError(f"duplicate edge {e} in stream")
            seen.add(e)
            has_weight = weight is not None
            if weighted is None:
                weighted = has_weight
            elif weighted != has_weight:
                raise ValueError("stream mixes weighted and unweighted entries")
            if has_weight:
                if prev is not None and weight < prev:
                    raise ValueError("stream weights must be non-decreasing")
                prev = weight

    def __len__(self) -> int:
        return len(self.entries)

    def vertices(self) -> list[int]:
        out = set()
        for (u, v), _ in self.entries:
            out.add(u)
            out.add(v)
        return sorted(out)

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> "EdgeStream":
        return cls([(canonical_edge(*p), None) for p in pairs])


def build_edge_stream(points: Sequence[Point]) -> EdgeStream:
    """All point pairs as edges, sorted by Euclidean distance ascending.

    Ties break by canonical edge order (smaller u, then smaller v), so runs
    are reproducible.
    """
    if len(points) < 2:
        raise ValueError("need at least two points")
    dim = len(points[0])
    for i, p in enumerate(points):
        if len(p) != dim:
            raise ValueError(f"point {i} has dimension {len(p)}, expected {dim}")
    entries = [
        ((u, v), math.dist(points[u], points[v]))
        for u, v in combinations(range(len(points)), 2)
    ]
    entries.sort(key=lambda item: (item[1], item[0]))
    return EdgeStream(entries)


def load_point_cloud(path) -> list[Point]:
    """Read points from a text file: one point per line, whitespace-separated
    coordinates, '#' comment lines."""
    points: list[Point] = []
    dim = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                coords = tuple(float(tok) for tok in line.split())
            except ValueError:
                raise FormatError(f"{path}:{lineno}: coordinates must be numbers") from None
            if dim is None:
                dim = len(coords)
            elif len(coords) != dim:
                raise FormatError(
                    f"{path}:{lineno}: point has dimension {len(coords)}, expected {dim}"
                )
            points.append(coords)
    if not points:
        raise FormatError(f"{path}: no points")
    return points


def load_edge_stream(path) -> EdgeStream:
    """Read an ordered edge stream: 'u v' or 'u v weight' per line."""
    entries: list[tuple[tuple[int, int], float | None]] = []
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
                weight = float(parts[2]) if len(parts) == 3 else None
            except ValueError:
                raise FormatError(f"{path}:{lineno}: malformed entry") from None
            if u < 0 or v < 0:
                raise FormatError(f"{path}:{lineno}: vertex ids must be non-negative")
            if u == v:
                raise FormatError(f"{path}:{lineno}: self-loop at vertex {u}")
            entries.append((canonical_edge(u, v), weight))
    try:
        return EdgeStream(entries)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


@dataclass
class FiltrationRun:
    graph: Graph
    index: MaximalCliqueIndex | KCliqueIndex
    reports: list[InsertionReport]


def run_filtration(
    stream: EdgeStream,
    method: Method = Method.PROPOSED,
    k: int | None = None,
    parallel: IndependenceMode | None = None,
) -> FiltrationRun:
    """Replay a stream from the edgeless graph on its endpoints.

    With ``parallel`` set, maximal runs of equal-weight entries are
    scheduled as batches (unweighted entries stay sequential); the size
    bound ``k`` cannot be combined with batching.
    """
    if parallel is not None and k is not None:
        raise ValueError("batched execution is not defined for the k-bounded engine")
    g = Graph()
    for w in stream.vertices():
        g.add_vertex(w)
    ix: MaximalCliqueIndex | KCliqueIndex
    if k is None:
        ix = MaximalCliqueIndex.bootstrap(g)
    else:
        ix = KCliqueIndex.bootstrap(g, k)
    reports: list[InsertionReport] = []
    if parallel is None:
        for edge, weight in stream.entries:
            if k is None:
                report = insert_edge_update(g, ix, edge, method=method)
            else:
                report = k_insert_edge_update(g, ix, edge)
            report.weight = weight
            reports.append(report)
        return FiltrationRun(graph=g, index=ix, reports=reports)

    for group, weight in _weight_groups(stream):
        if len(group) == 1:
            report = insert_edge_update(g, ix, group[0], method=method)
            report.weight = weight
            reports.append(report)
            continue
        schedule = schedule_batch(g, group, parallel, ix)
        for report in apply_batch(g, ix, schedule, method=method):
            report.weight = weight
            reports.append(report)
    return FiltrationRun(graph=g, index=ix, reports=reports)


def _weight_groups(stream: EdgeStream):
    group: list[tuple[int, int]] = []
    current: float | None = None
    for edge, weight in stream.entries:
        if weight is not None and group and weight == current:
            group.append(edge)
            continue
        if group:
            yield group, current
        group = [edge]
        current = weight
    if group:
        yield group, current
