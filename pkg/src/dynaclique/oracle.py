"""From-scratch clique enumerators used for bootstrap and as ground truth.

Both functions are pure with respect to the graph and safe to call
concurrently.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

Clique = tuple[int, ...]


def enumerate_maximal_cliques(g: Graph) -> list[Clique]:
    """All maximal cliques of g, singletons included, in canonical order.

    Recursive branch-and-bound enumeration: each level picks a pivot (the
    highest-degree vertex among the remaining candidates, ties to the
    smaller id) and only branches on candidates outside the pivot's
    neighborhood, which prunes branches that cannot yield new maximal
    cliques.
    """
    adj = {u: set(g.neighbors(u)) for u in g.vertices()}
    if not adj:
        return []
    out: list[Clique] = []

    def expand(grown: list[int], cand: set[int], seen: set[int]) -> None:
        if not cand:
            if not seen:
                out.append(tuple(sorted(grown)))
            return
        pivot = max(cand, key=lambda w: (len(adj[w]), -w))
        for v in sorted(cand - adj[pivot]):
            nbrs = adj[v]
            grown.append(v)
            expand(grown, cand & nbrs, seen & nbrs)
            grown.pop()
            cand.remove(v)
            seen.add(v)

    expand([], set(adj), set())
    return sorted(out)


def enumerate_maximal_k_cliques(g: Graph, k: int) -> list[Clique]:
    """All cliques of size exactly k plus maximal cliques of size below k.

    Canonical order. k must be at least 1.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    result: set[Clique] = set()
    for c in enumerate_maximal_cliques(g):
        if len(c) < k:
            result.add(c)
        else:
            result.update(combinations(c, k))
    return sorted(result)
