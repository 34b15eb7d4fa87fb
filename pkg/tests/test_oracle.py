import random
from math import comb

import pytest

from dynaclique.graph import Graph
from dynaclique.oracle import enumerate_maximal_cliques, enumerate_maximal_k_cliques

from helpers import cocktail_party, edgeless, er_graph, p3, triangle
from naive_oracle import naive_maximal_cliques, naive_maximal_k_cliques


def test_triangle():
    assert enumerate_maximal_cliques(triangle()) == [(0, 1, 2)]


def test_p3():
    # Frozen from the naive subset oracle.
    assert enumerate_maximal_cliques(p3()) == [(0, 1), (1, 2)]


def test_cocktail_party_extremal_family():
    cliques = enumerate_maximal_cliques(cocktail_party(3))
    assert len(cliques) == 8
    assert all(len(c) == 3 for c in cliques)
    assert cliques == naive_maximal_cliques(cocktail_party(3))


def test_singletons_for_isolated_vertices():
    assert enumerate_maximal_cliques(edgeless(3)) == [(0,), (1,), (2,)]


def test_empty_graph():
    assert enumerate_maximal_cliques(Graph()) == []


@pytest.mark.parametrize("seed", range(30))
def test_matches_naive_oracle_on_random_graphs(seed):
    rng = random.Random(seed)
    g = er_graph(rng.randint(1, 9), rng.choice([0.2, 0.4, 0.6, 0.8]), rng)
    assert enumerate_maximal_cliques(g) == naive_maximal_cliques(g)


@pytest.mark.parametrize("seed", range(12))
def test_output_is_pairwise_non_nested(seed):
    rng = random.Random(100 + seed)
    g = er_graph(8, 0.5, rng)
    cliques = [set(c) for c in enumerate_maximal_cliques(g)]
    for i, a in enumerate(cliques):
        for b in cliques[i + 1 :]:
            assert not (a <= b or b <= a)


def test_k_cliques_triangle_k2():
    assert enumerate_maximal_k_cliques(triangle(), 2) == [(0, 1), (0, 2), (1, 2)]


def test_k_cliques_p3_k3():
    assert enumerate_maximal_k_cliques(p3(), 3) == [(0, 1), (1, 2)]


def test_k_cliques_edgeless():
    for k in (1, 2, 5):
        assert enumerate_maximal_k_cliques(edgeless(2), k) == [(0,), (1,)]


def test_k_below_one_rejected():
    with pytest.raises(ValueError):
        enumerate_maximal_k_cliques(triangle(), 0)


@pytest.mark.parametrize("seed", range(15))
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_k_cliques_match_naive_oracle(seed, k):
    rng = random.Random(1000 + seed)
    g = er_graph(8, 0.5, rng)
    assert enumerate_maximal_k_cliques(g, k) == naive_maximal_k_cliques(g, k)


@pytest.mark.parametrize("seed", range(8))
def test_k_clique_count_bound(seed):
    rng = random.Random(2000 + seed)
    g = er_graph(9, 0.6, rng)
    n = g.vertex_count
    for k in (2, 3, 4):
        bound = sum(comb(n, i) for i in range(1, k + 1))
        assert len(enumerate_maximal_k_cliques(g, k)) <= bound


@pytest.mark.parametrize("seed", range(8))
def test_enumerators_agree_for_large_k(seed):
    rng = random.Random(3000 + seed)
    g = er_graph(7, 0.5, rng)
    assert enumerate_maximal_k_cliques(g, g.vertex_count) == enumerate_maximal_cliques(g)
