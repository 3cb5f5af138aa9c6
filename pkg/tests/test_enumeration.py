import itertools

import pytest
from hypothesis import given, settings

from atlasgraph.canon import are_isomorphic, canonical_form
from atlasgraph.classify import classify
from atlasgraph.enumeration import (
    build_catalog,
    count_connected_graphs,
    enumerate_connected_graphs,
    enumerate_labelings,
)
from atlasgraph.errors import TooLarge
from atlasgraph.graph_core import is_connected, new_labeled_graph
from oracles import burnside_labelings, labeled_graphs


def naive_connected(n):
    """Every connected graph on range(n), from all edge bitmasks."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        g = new_labeled_graph([1] * n, [(u, v, 1) for k, (u, v) in enumerate(pairs) if mask >> k & 1])
        if is_connected(g):
            yield g


@pytest.mark.parametrize("p, k", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_small_counts(p, k):
    assert count_connected_graphs(p) == k


def test_p3_representatives():
    reps = enumerate_connected_graphs(3)
    path = new_labeled_graph([1] * 3, [(0, 1, 1), (1, 2, 1)])
    triangle = new_labeled_graph([1] * 3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert len(reps) == 2
    assert sum(are_isomorphic(r, path) for r in reps) == 1
    assert sum(are_isomorphic(r, triangle) for r in reps) == 1
    brute = []
    for g in naive_connected(3):
        if not any(are_isomorphic(g, h) for h in brute):
            brute.append(g)
    assert len(brute) == 2


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
def test_closure(p):
    reps = enumerate_connected_graphs(p)
    forms = [canonical_form(r) for r in reps]
    assert len(set(forms)) == len(forms)
    for g in naive_connected(p):
        assert forms.count(canonical_form(g)) == 1


def test_uniform_dim_and_labels():
    for g in enumerate_connected_graphs(4, dim=3):
        assert g.uniform_dim == 3
        assert set(g.dims) == {3}
        assert set(g.labels) == {1}
        assert is_connected(g)


def test_bounds():
    with pytest.raises(TooLarge):
        count_connected_graphs(9)
    with pytest.raises(ValueError):
        count_connected_graphs(0)
    assert count_connected_graphs(3, max_order=3) == 2


def test_labeling_examples():
    dipole = new_labeled_graph([1, 1], [(0, 1, 1)])
    assert [g.labels for g in enumerate_labelings(dipole, 2, 3)] == [(2,), (3,)]
    p3 = new_labeled_graph([1] * 3, [(0, 1, 1), (1, 2, 1)])
    assert [g.labels for g in enumerate_labelings(p3, 2, 3)] == [(2, 2), (2, 3), (3, 3)]
    k3 = new_labeled_graph([1] * 3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert len(enumerate_labelings(k3, 2, 2)) == 1
    with pytest.raises(ValueError):
        enumerate_labelings(k3, 3, 2)


@settings(max_examples=60, deadline=None)
@given(labeled_graphs(max_n=5, max_label=1))
def test_labelings_are_orbit_representatives(g):
    reps = enumerate_labelings(g, 1, 2)
    assert len(reps) == burnside_labelings(g, 1, 2)
    for a, b in itertools.combinations(reps, 2):
        assert not are_isomorphic(a, b)


def test_catalog_examples():
    cat = build_catalog(2, 3, dim=2)
    assert [e.canonical.decode().labels for e in cat] == [(2,), (3,)]
    torus = cat[1]
    assert torus.labeled_rank == 2 and torus.report.minimal_atlas_valid
    one = build_catalog(1, 5)
    assert len(one) == 1 and one[0].labeled_rank == 0 and one[0].report.minimal_atlas_valid
    assert len(build_catalog(3, 2)) == 2


def test_catalog_invariants():
    cat = build_catalog(4, 3)
    forms = [e.canonical for e in cat]
    assert forms == sorted(forms)
    assert len(set(forms)) == len(forms)
    for e in cat:
        g = e.canonical.decode()
        assert classify(g) == e.report
        assert e.report.minimal_atlas_valid
        if e.report.is_tree:
            assert e.labeled_rank >= g.size


def test_catalog_independent_of_jobs():
    assert [e.record() for e in build_catalog(4, 2, jobs=2)] == [e.record() for e in build_catalog(4, 2)]
