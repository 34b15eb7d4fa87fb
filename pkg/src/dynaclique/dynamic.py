"""Incremental update of the maximal clique enumeration after an edge insertion.

Inserting edge uv changes the enumeration only near the endpoints: every
new maximal clique contains both u and v and lies inside their common
closed neighborhood, and only cliques containing u or v can stop being
maximal. The update therefore never rescans the graph. It builds candidate
cliques from the containment lists of the endpoints, keeps the candidates
that pass a maximality test, and drops the endpoint cliques that the new
edge absorbs.

Candidate generation comes in two flavors (see :class:`Method`):

* one-sided (``proposed``): one candidate per clique containing a single
  chosen endpoint, ``(C & N(other)) | {u, v}`` with N the closed
  neighborhood. Generating from either endpoint yields the same surviving
  set, so the engine picks the endpoint with the shorter list.
* pairwise (``existing``): one candidate per pair of cliques through u and
  through v, ``(C_thru_u & C_thru_v) | {u, v}``. Kept for comparison; the
  candidate count is the product of the two list lengths.

Each update is single-threaded; concurrent updates are only coordinated by
the batch scheduler (see :mod:`dynaclique.batch`).
"""

from __future__ import annotations

from time import perf_counter_ns
from typing import Sequence

from ._kernels import intersect_sorted, issubset_sorted, union_sorted
from .graph import Graph, canonical_edge
from .index import _CliqueStore, MaximalCliqueIndex
from .oracle import Clique
from .reports import InsertionReport, Method


def choose_side(ix: _CliqueStore, u: int, v: int) -> int:
    """Endpoint contained in fewer stored cliques; ties to the smaller id."""
    if u == v:
        raise ValueError("endpoints must differ")
    cu = ix.count_containing(u)
    cv = ix.count_containing(v)
    if cu < cv:
        return u
    if cv < cu:
        return v
    return min(u, v)


def generate_candidates_proposed(
    g: Graph, ix: _CliqueStore, u: int, v: int, side: int
) -> list[Clique]:
    """One candidate per stored clique containing ``side``.

    Each candidate is the clique's intersection with the closed
    neighborhood of the opposite endpoint, plus both endpoints. Because the
    endpoint pair is unioned explicitly, the result is the same whether g
    already contains uv or not.
    """
    if side == u:
        other = v
    elif side == v:
        other = u
    else:
        raise ValueError(f"side {side} is not an endpoint of ({u}, {v})")
    pair = sorted((u, v))
    reach = g.neighbors_closed(other)
    out = []
    for clique_id in ix.cliques_containing(side):
        members = ix.members(clique_id)
        out.append(tuple(union_sorted(intersect_sorted(members, reach), pair)))
    return out


def generate_candidates_existing(
    g: Graph, ix: _CliqueStore, u: int, v: int
) -> list[Clique]:
    """One candidate per pair of stored cliques through u and through v."""
    pair = sorted((u, v))
    thru_u = [ix.members(cid) for cid in ix.cliques_containing(u)]
    thru_v = [ix.members(cid) for cid in ix.cliques_containing(v)]
    out = []
    for mu in thru_u:
        for mv in thru_v:
            out.append(tuple(union_sorted(intersect_sorted(mu, mv), pair)))
    return out


def is_maximal_in(g: Graph, members: Sequence[int]) -> bool:
    """True if no outside vertex is adjacent to every member.

    The caller guarantees ``members`` is a clique of g. The test intersects
    the members' closed neighborhoods starting from the lowest-degree
    member; the running intersection always contains the clique itself, so
    it can stop as soon as it shrinks down to the member count.
    """
    ms = sorted(members)
    start = min(ms, key=lambda w: (g.degree(w), w))
    common = g.neighbors_closed(start)
    if len(common) == len(ms):
        return True
    for w in ms:
        if w == start:
            continue
        common = intersect_sorted(common, g.neighbors_closed(w))
        if len(common) == len(ms):
            return True
    return len(common) == len(ms)


def remove_stale(g_after: Graph, ix: _CliqueStore, u: int, v: int) -> list[int]:
    """Ids of stored cliques that stop being maximal once uv is inserted.

    A pre-insertion maximal clique dies exactly when it contains one
    endpoint and the new edge lets the other endpoint extend it, i.e. it
    lies inside the closed neighborhood of the other endpoint in the
    updated graph. Cliques containing neither endpoint are untouched.
    """
    reach_u = g_after.neighbors_closed(u)
    reach_v = g_after.neighbors_closed(v)
    stale = set()
    for clique_id in ix.cliques_containing(u):
        if issubset_sorted(ix.members(clique_id), reach_v):
            stale.add(clique_id)
    for clique_id in ix.cliques_containing(v):
        if issubset_sorted(ix.members(clique_id), reach_u):
            stale.add(clique_id)
    return sorted(stale)


def _sync_endpoints(g: Graph, ix: _CliqueStore, u: int, v: int) -> None:
    # Brand-new vertices enter the pre-insertion enumeration as singletons,
    # so candidate generation from an isolated endpoint works uniformly.
    for w in (u, v):
        g.add_vertex(w)
        if not ix.knows_vertex(w):
            ix.apply_delta([(w,)], [])


def insert_edge_update(
    g: Graph,
    ix: MaximalCliqueIndex,
    edge: tuple[int, int],
    method: Method = Method.PROPOSED,
    side: int | None = None,
) -> InsertionReport:
    """Insert an edge and bring the index back to the exact enumeration.

    Pipeline: no-op if the edge exists; otherwise add the edge, generate
    candidates per ``method``, dedup them, keep the maximal ones, drop the
    stale endpoint cliques, and apply the delta. ``side`` forces the
    generation endpoint for the one-sided method (default: the endpoint
    with fewer containing cliques).
    """
    u, v = canonical_edge(*edge)
    method = Method(method)
    start = perf_counter_ns()
    _sync_endpoints(g, ix, u, v)
    if g.has_edge(u, v):
        return InsertionReport(
            edge=(u, v),
            method=method,
            side=None,
            candidates_generated=0,
            candidates_after_dedup=0,
            added=[],
            removed=[],
            total_cliques=len(ix),
            elapsed_ns=perf_counter_ns() - start,
        )
    if method is Method.PROPOSED:
        if side is None:
            side = choose_side(ix, u, v)
        elif side not in (u, v):
            raise ValueError(f"side {side} is not an endpoint of ({u}, {v})")
    elif side is not None:
        raise ValueError("side applies to the one-sided method only")

    g.add_edge(u, v)
    if method is Method.PROPOSED:
        candidates = generate_candidates_proposed(g, ix, u, v, side)
    else:
        candidates = generate_candidates_existing(g, ix, u, v)
    generated = len(candidates)
    # Dedup before the maximality test: distinct source cliques often
    # project onto the same candidate, and the test dominates the cost.
    deduped = list(dict.fromkeys(candidates))
    added = sorted(c for c in deduped if is_maximal_in(g, c))
    stale_ids = remove_stale(g, ix, u, v)
    removed = sorted(ix.members(cid) for cid in stale_ids)
    ix.apply_delta(added, stale_ids)
    return InsertionReport(
        edge=(u, v),
        method=method,
        side=side if method is Method.PROPOSED else None,
        candidates_generated=generated,
        candidates_after_dedup=len(deduped),
        added=added,
        removed=removed,
        total_cliques=len(ix),
        elapsed_ns=perf_counter_ns() - start,
    )
