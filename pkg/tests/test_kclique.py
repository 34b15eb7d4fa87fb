import random

import pytest

from dynaclique.dynamic import insert_edge_update
from dynaclique.index import KCliqueIndex, MaximalCliqueIndex, format_enumeration
from dynaclique.kclique import (
    k_expand_oversized,
    k_generate_candidates,
    k_insert_edge_update,
)

from helpers import edgeless, er_graph, k4_minus, p3, random_insertion_order
from naive_oracle import naive_maximal_k_cliques


def kbootstrap(g, k):
    return KCliqueIndex.bootstrap(g, k)


def test_candidates_p3_k2_hit_size_bound():
    g = p3()
    ix = kbootstrap(g, 2)
    assert k_generate_candidates(g, ix, 0, 2, side=0) == [(0, 1, 2)]


def test_candidates_k4_minus_edge_k3():
    g = k4_minus(0, 1)
    ix = kbootstrap(g, 3)
    assert k_generate_candidates(g, ix, 0, 1, side=0) == [(0, 1, 2, 3)]


def test_candidates_large_k_match_unbounded():
    g = p3()
    ix = kbootstrap(g, 5)
    assert k_generate_candidates(g, ix, 0, 2, side=0) == [(0, 1, 2)]


def test_expand_oversized_p3_case():
    assert k_expand_oversized((0, 1, 2), 2, 0, 2) == [(0, 2)]


def test_expand_oversized_k4_case():
    assert k_expand_oversized((0, 1, 2, 3), 3, 0, 1) == [(0, 1, 2), (0, 1, 3)]


def test_expand_oversized_five_members():
    assert k_expand_oversized((0, 1, 2, 3, 4), 4, 0, 1) == [
        (0, 1, 2, 3),
        (0, 1, 2, 4),
        (0, 1, 3, 4),
    ]


def test_expand_oversized_validates_input():
    with pytest.raises(ValueError):
        k_expand_oversized((0, 1, 2), 3, 0, 1)
    with pytest.raises(ValueError):
        k_expand_oversized((0, 1, 2), 2, 0, 5)


def test_insert_p3_k2():
    g = p3()
    ix = kbootstrap(g, 2)
    report = k_insert_edge_update(g, ix, (0, 2))
    assert report.added == [(0, 2)]
    assert report.removed == []
    assert ix.cliques() == [(0, 1), (0, 2), (1, 2)]
    assert ix.check_consistency(g) is None


def test_insert_k4_completion_k3():
    g = k4_minus(0, 1)
    ix = kbootstrap(g, 3)
    report = k_insert_edge_update(g, ix, (0, 1))
    assert report.added == [(0, 1, 2), (0, 1, 3)]
    assert report.removed == []
    assert ix.cliques() == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_insert_isolated_pair_below_k():
    g = edgeless(2)
    ix = kbootstrap(g, 3)
    report = k_insert_edge_update(g, ix, (0, 1))
    assert report.added == [(0, 1)]
    assert report.removed == [(0,), (1,)]


def test_insert_k1_keeps_all_singletons():
    g = edgeless(3)
    ix = kbootstrap(g, 1)
    report = k_insert_edge_update(g, ix, (0, 1))
    assert report.added == [] and report.removed == []
    assert ix.cliques() == [(0,), (1,), (2,)]


def test_insert_duplicate_edge_is_noop():
    g = p3()
    ix = kbootstrap(g, 2)
    report = k_insert_edge_update(g, ix, (0, 1))
    assert report.added == [] and report.candidates_generated == 0


def test_report_carries_k():
    g = p3()
    ix = kbootstrap(g, 2)
    assert k_insert_edge_update(g, ix, (0, 2)).k == 2


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("seed", range(10))
def test_matches_truncated_oracle_on_random_sequences(k, seed):
    rng = random.Random(7000 + seed)
    g_target = er_graph(8, rng.choice([0.25, 0.4, 0.55]), rng)
    order = random_insertion_order(g_target, rng)
    g = edgeless(8)
    ix = KCliqueIndex.bootstrap(g, k)
    for edge in order:
        report = k_insert_edge_update(g, ix, edge)
        assert ix.enumeration_text() == format_enumeration(
            naive_maximal_k_cliques(g, k)
        )
        assert all(len(c) <= k for c in ix.cliques())
        assert report.candidates_generated >= report.candidates_after_dedup
    assert ix.check_consistency(g) is None


@pytest.mark.parametrize("seed", range(8))
def test_agrees_with_unbounded_engine_for_large_k(seed):
    rng = random.Random(8000 + seed)
    g_target = er_graph(7, 0.5, rng)
    order = random_insertion_order(g_target, rng)
    g1, g2 = edgeless(7), edgeless(7)
    kix = KCliqueIndex.bootstrap(g1, 7)
    ix = MaximalCliqueIndex.bootstrap(g2)
    for edge in order:
        kr = k_insert_edge_update(g1, kix, edge)
        r = insert_edge_update(g2, ix, edge)
        assert kr.added == r.added
        assert kr.removed == r.removed
        assert kix.cliques() == ix.cliques()
