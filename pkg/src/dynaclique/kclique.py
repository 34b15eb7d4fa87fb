"""Size-bounded variant: maintain the maximal k-cliques under edge insertion.

A maximal k-clique is a clique of size exactly k or a maximal clique of
size below k. Candidates come from the same one-sided generator as the
unbounded engine, but their size is capped at k+1: a source clique holds at
most k vertices and gains at most the opposite endpoint. An oversized
candidate (size k+1) needs no maximality test at all; every size-k subset
of it through the new edge becomes a maximal k-clique directly.
"""

from __future__ import annotations

from time import perf_counter_ns

from .dynamic import (
    _sync_endpoints,
    choose_side,
    generate_candidates_proposed,
    is_maximal_in,
    remove_stale,
)
from .graph import Graph, canonical_edge
from .index import KCliqueIndex
from .oracle import Clique
from .reports import InsertionReport, Method


def k_generate_candidates(
    g: Graph, ix: KCliqueIndex, u: int, v: int, side: int
) -> list[Clique]:
    """One candidate per stored clique containing ``side``, size <= k+1."""
    return generate_candidates_proposed(g, ix, u, v, side)


def k_expand_oversized(c: Clique, k: int, u: int, v: int) -> list[Clique]:
    """Size-k subsets of an oversized candidate that contain both endpoints.

    Subsets missing u or v were already size-k cliques before the
    insertion, so only the k-1 subsets obtained by dropping one other
    vertex are emitted, in canonical order.
    """
    if len(c) != k + 1:
        raise ValueError(f"expected a candidate of size {k + 1}, got {len(c)}")
    if u not in c or v not in c:
        raise ValueError(f"candidate {c} must contain both endpoints ({u}, {v})")
    return sorted(tuple(x for x in c if x != w) for w in c if w != u and w != v)


def k_insert_edge_update(
    g: Graph, ix: KCliqueIndex, edge: tuple[int, int], side: int | None = None
) -> InsertionReport:
    """Insert an edge and restore the exact maximal k-clique enumeration.

    Candidates of size k are accepted outright (a size-k clique is maximal-k
    by definition), candidates below k go through the maximality test, and
    oversized candidates are expanded into their size-k subsets with no
    test. Stored entries of size k are never removed; entries below k are
    dropped when the new edge absorbs them, exactly as in the unbounded
    engine.
    """
    u, v = canonical_edge(*edge)
    k = ix.k
    start = perf_counter_ns()
    _sync_endpoints(g, ix, u, v)
    if g.has_edge(u, v):
        return InsertionReport(
            edge=(u, v),
            method=Method.PROPOSED,
            side=None,
            candidates_generated=0,
            candidates_after_dedup=0,
            added=[],
            removed=[],
            total_cliques=len(ix),
            elapsed_ns=perf_counter_ns() - start,
            k=k,
        )
    if side is None:
        side = choose_side(ix, u, v)
    elif side not in (u, v):
        raise ValueError(f"side {side} is not an endpoint of ({u}, {v})")

    g.add_edge(u, v)
    candidates = k_generate_candidates(g, ix, u, v, side)
    generated = len(candidates)
    deduped = list(dict.fromkeys(candidates))
    accepted: list[Clique] = []
    for c in deduped:
        if len(c) == k + 1:
            accepted.extend(k_expand_oversized(c, k, u, v))
        elif len(c) == k:
            accepted.append(c)
        elif is_maximal_in(g, c):
            accepted.append(c)
    # Dedup survivors against each other and (as a safety net) the store.
    added = sorted(
        {c for c in accepted if ix.id_of(c) is None}
    )
    stale_ids = [
        cid for cid in remove_stale(g, ix, u, v) if len(ix.members(cid)) < k
    ]
    removed = sorted(ix.members(cid) for cid in stale_ids)
    ix.apply_delta(added, stale_ids)
    return InsertionReport(
        edge=(u, v),
        method=Method.PROPOSED,
        side=side,
        candidates_generated=generated,
        candidates_after_dedup=len(deduped),
        added=added,
        removed=removed,
        total_cliques=len(ix),
        elapsed_ns=perf_counter_ns() - start,
        k=k,
    )
