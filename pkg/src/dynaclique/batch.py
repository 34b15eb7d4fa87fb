"""Independence of pending insertions and round scheduling for batches.

Two edge insertions commute when neither touches the region the other
reads. The conservative condition requires the closed neighborhoods of one
edge's endpoints to avoid both endpoints of the other; it is symmetric and
guarantees the updates read and write disjoint parts of the index. The
aggressive condition only protects each update's chosen generation side;
whether that is sufficient in general is exactly what the divergence
accounting in the test suite probes, so this module treats it as an
experiment, not a guarantee.

Rounds execute with snapshot isolation: every member of a round computes
its delta against the round-start graph and index, as truly concurrent
updates would, and the deltas are then merged in placement order. For
independent edges this is identical to sequential execution; for
non-independent ones the merge is lenient (missing removals and duplicate
additions are skipped) so that any divergence surfaces in the final
enumeration instead of crashing the run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ._kernels import contains_sorted
from .dynamic import choose_side, insert_edge_update
from .graph import Graph, canonical_edge
from .index import MaximalCliqueIndex
from .reports import InsertionReport, Method

Edge = tuple[int, int]


class IndependenceMode(str, Enum):
    CONSERVATIVE = "conservative"
    AGGRESSIVE = "aggressive"


@dataclass
class Schedule:
    """Batch partitioned into rounds of pairwise-independent insertions.

    ``sides`` records the generation endpoint fixed per edge at schedule
    time (aggressive mode only); execution must honor it for the
    independence predicate to mean anything.
    """

    rounds: list[list[Edge]]
    mode: IndependenceMode
    sides: dict[Edge, int] = field(default_factory=dict)

    @property
    def edges(self) -> list[Edge]:
        return [e for rnd in self.rounds for e in rnd]


def _closed(g: Graph, u: int) -> list[int]:
    # Unknown vertices behave as isolated: closed neighborhood {u}.
    if g.has_vertex(u):
        return g.neighbors_closed(u)
    return [u]


def edges_independent(
    g: Graph,
    e1: Edge,
    e2: Edge,
    mode: IndependenceMode,
    side1: int | None = None,
    side2: int | None = None,
    *,
    symmetric: bool = True,
) -> bool:
    """Whether inserting e1 and e2 into g commutes under the given mode.

    Neighborhoods are evaluated in g before either insertion. Conservative:
    the closed neighborhoods of e2's endpoints avoid both endpoints of e1
    (symmetric under closed neighborhoods). Aggressive: the closed
    neighborhood of e2's generation side avoids e1's endpoints and, unless
    ``symmetric=False``, the same with the roles swapped. The one-sided
    variant (``symmetric=False``) matches running e1 strictly before e2 and
    exists for experimentation.
    """
    u1, v1 = canonical_edge(*e1)
    u2, v2 = canonical_edge(*e2)
    if (u1, v1) == (u2, v2):
        raise ValueError("edges must differ")
    mode = IndependenceMode(mode)
    if mode is IndependenceMode.CONSERVATIVE:
        for w in (u2, v2):
            reach = _closed(g, w)
            if contains_sorted(reach, u1) or contains_sorted(reach, v1):
                return False
        return True
    if side2 is None:
        raise ValueError("aggressive independence needs the generation side of e2")
    if side2 not in (u2, v2):
        raise ValueError(f"side {side2} is not an endpoint of {e2}")
    reach2 = _closed(g, side2)
    if contains_sorted(reach2, u1) or contains_sorted(reach2, v1):
        return False
    if not symmetric:
        return True
    if side1 is None:
        raise ValueError("symmetric aggressive independence needs both sides")
    if side1 not in (u1, v1):
        raise ValueError(f"side {side1} is not an endpoint of {e1}")
    reach1 = _closed(g, side1)
    return not (contains_sorted(reach1, u2) or contains_sorted(reach1, v2))


def _pick_side(g: Graph, ix: MaximalCliqueIndex | None, u: int, v: int) -> int:
    if ix is not None and ix.knows_vertex(u) and ix.knows_vertex(v):
        return choose_side(ix, u, v)
    # Fall back to the endpoint with the smaller closed neighborhood.
    cu = len(_closed(g, u))
    cv = len(_closed(g, v))
    if cu < cv:
        return u
    if cv < cu:
        return v
    return min(u, v)


def schedule_batch(
    g: Graph,
    batch: list[Edge],
    mode: IndependenceMode,
    ix: MaximalCliqueIndex | None = None,
) -> Schedule:
    """Greedy first-fit round assignment in batch order.

    Each edge lands in the earliest round where it is independent of all
    current members, with the predicate evaluated against g plus the edges
    of every earlier round. Batch edges must be pairwise distinct and
    absent from g.
    """
    mode = IndependenceMode(mode)
    edges = [canonical_edge(*e) for e in batch]
    if len(set(edges)) != len(edges):
        raise ValueError("batch contains duplicate edges")
    for e in edges:
        if g.has_edge(*e):
            raise ValueError(f"edge {e} is already present")
    sides: dict[Edge, int] = {}
    if mode is IndependenceMode.AGGRESSIVE:
        for u, v in edges:
            sides[(u, v)] = _pick_side(g, ix, u, v)
    rounds: list[list[Edge]] = []
    for e in edges:
        base = g.copy()
        placed = False
        for rnd in rounds:
            fits = all(
                edges_independent(
                    base, other, e, mode,
                    side1=sides.get(other), side2=sides.get(e),
                )
                for other in rnd
            )
            if fits:
                rnd.append(e)
                placed = True
                break
            for u, v in rnd:
                base.add_edge(u, v)
        if not placed:
            rounds.append([e])
    return Schedule(rounds=rounds, mode=mode, sides=sides)


def apply_batch(
    g: Graph,
    ix: MaximalCliqueIndex,
    schedule: Schedule,
    method: Method = Method.PROPOSED,
) -> list[InsertionReport]:
    """Execute a schedule; rounds run in order, members under snapshot isolation.

    Aggressive schedules always execute the one-sided method with the sides
    recorded at schedule time. Returns one report per insertion, in
    execution order, with the round index filled in.
    """
    aggressive = schedule.mode is IndependenceMode.AGGRESSIVE
    reports: list[InsertionReport] = []
    for round_index, rnd in enumerate(schedule.rounds):
        if len(rnd) == 1:
            e = rnd[0]
            report = insert_edge_update(
                g, ix, e,
                method=Method.PROPOSED if aggressive else method,
                side=schedule.sides.get(e),
            )
            report.round_index = round_index
            reports.append(report)
            continue
        g0 = g.copy()
        ix0 = ix.copy()
        staged = []
        for e in rnd:
            ge = g0.copy()
            ixe = ix0.copy()
            report = insert_edge_update(
                ge, ixe, e,
                method=Method.PROPOSED if aggressive else method,
                side=schedule.sides.get(e),
            )
            staged.append(report)
        for report in staged:
            g.add_edge(*report.edge)
            remove_ids = [
                cid for cid in (ix.id_of(c) for c in report.removed) if cid is not None
            ]
            add = [c for c in report.added if ix.id_of(c) is None]
            ix.apply_delta(add, remove_ids)
            report.total_cliques = len(ix)
            report.round_index = round_index
            reports.append(report)
    return reports
