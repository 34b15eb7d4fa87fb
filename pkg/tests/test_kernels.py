import importlib

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dynaclique import _kernels
from dynaclique._kernels import pure

try:
    from dynaclique._kernels import _speedups
except ImportError:
    _speedups = None

BACKENDS = [pure] if _speedups is None else [pure, _speedups]

sorted_lists = st.lists(st.integers(min_value=0, max_value=200), max_size=40).map(
    lambda xs: sorted(set(xs))
)
# Large enough spreads to exercise the binary-probe path.
sparse_lists = st.lists(st.integers(min_value=0, max_value=10_000), max_size=400).map(
    lambda xs: sorted(set(xs))
)


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def backend(request):
    return request.param


@given(a=sorted_lists, b=sorted_lists)
def test_intersect_matches_sets(a, b):
    for impl in BACKENDS:
        assert impl.intersect_sorted(a, b) == sorted(set(a) & set(b))


@given(a=sorted_lists, b=sorted_lists)
def test_union_matches_sets(a, b):
    for impl in BACKENDS:
        assert impl.union_sorted(a, b) == sorted(set(a) | set(b))


@given(a=sorted_lists, b=sorted_lists)
def test_issubset_matches_sets(a, b):
    for impl in BACKENDS:
        assert impl.issubset_sorted(a, b) == (set(a) <= set(b))


@given(a=sparse_lists, b=sparse_lists)
def test_probe_path_matches_sets(a, b):
    for impl in BACKENDS:
        assert impl.intersect_sorted(a, b) == sorted(set(a) & set(b))
        assert impl.issubset_sorted(a, b) == (set(a) <= set(b))


@given(a=sorted_lists, x=st.integers(min_value=0, max_value=200))
def test_insert_and_contains(a, x):
    for impl in BACKENDS:
        assert impl.contains_sorted(a, x) == (x in a)
        inserted = impl.insert_sorted(a, x)
        assert inserted == sorted(set(a) | {x})
        assert inserted is not a


def test_intersect_works_on_tuples(backend):
    assert backend.intersect_sorted((0, 2, 3), [1, 2, 3]) == [2, 3]
    assert backend.issubset_sorted((2, 3), (0, 2, 3))


def test_empty_inputs(backend):
    assert backend.intersect_sorted([], [1, 2]) == []
    assert backend.union_sorted([], []) == []
    assert backend.issubset_sorted([], [])
    assert not backend.contains_sorted([], 5)
    assert backend.insert_sorted([], 5) == [5]


def test_selection_honors_env(monkeypatch):
    monkeypatch.setenv("DYNACLIQUE_PURE_KERNELS", "1")
    mod = importlib.reload(_kernels)
    try:
        assert mod.BACKEND == "pure"
        assert mod.intersect_sorted is pure.intersect_sorted
    finally:
        monkeypatch.delenv("DYNACLIQUE_PURE_KERNELS")
        importlib.reload(_kernels)


@pytest.mark.skipif(_speedups is None, reason="compiled kernels not built")
def test_compiled_backend_selected_by_default():
    assert _kernels.BACKEND == "compiled"
