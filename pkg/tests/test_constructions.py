import random

import pytest
from hypothesis import given, settings, strategies as st

from maxdrd.constructions import (ConstructionError, FamilyFSpec, complete_plus_pendant,
                                  double_star, family_f_build, family_f_recognize, lift_drdf,
                                  make_shape, prufer_edges, reduce_gstar, sharpness_graph,
                                  spine_trees)
from maxdrd.corpus import prufer_tree
from maxdrd.graph import build_graph, is_tree
from maxdrd.labeling import Labeling, ParamKind, is_valid
from maxdrd.solver import solve_exact
from maxdrd.tree_dp import tree_value
from conftest import graphs, spider

DR, DRM = ParamKind.DRDF, ParamKind.MDRDF


def test_shapes():
    assert make_shape("path", n=5).edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert make_shape("cycle", n=3).m == 3
    assert make_shape("star", n=4).degree(0) == 3
    assert make_shape("complete", n=5).m == 10
    ds = double_star(2, 3)
    assert ds.n == 7 and ds.degree(0) == 3 and ds.degree(1) == 4
    with pytest.raises(ConstructionError, match="missing parameter"):
        make_shape("double_star", r=1)
    with pytest.raises(ConstructionError):
        make_shape("cycle", n=2)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_family_f_all_spines(k):
    for spec in spine_trees(k):
        t = family_f_build(spec)
        assert t.n == 4 * k and is_tree(t)
        assert family_f_recognize(t)
        assert tree_value(t, DRM) == tree_value(t, DR) == 5 * k


def test_spine_count_is_cayley():
    assert [len(spine_trees(k)) for k in range(1, 6)] == [1, 1, 3, 16, 125]


def test_family_f_rejects_bad_spines():
    with pytest.raises(ConstructionError, match="not a tree"):
        family_f_build(FamilyFSpec(3, ((1, 2),)))
    with pytest.raises(ConstructionError, match="outside"):
        family_f_build(FamilyFSpec(2, ((1, 3),)))


@settings(max_examples=200, deadline=None)
@given(st.integers(4, 16), st.integers(0, 2**32 - 1))
def test_recognizer_tracks_equality(n, seed):
    # on trees of order <= 16 equality in the 5n/4 bound occurs exactly on family F
    t = prufer_tree(n, random.Random(seed))
    equal = 4 * tree_value(t, DRM) == 5 * n
    assert family_f_recognize(t) == equal


def test_recognizer_negatives():
    assert not family_f_recognize(make_shape("path", n=8))
    assert not family_f_recognize(spider())
    assert not family_f_recognize(make_shape("cycle", n=4))
    assert family_f_recognize(make_shape("path", n=4))


def test_prufer_edges():
    assert sorted(prufer_edges(4, [2, 2])) == [(1, 2), (2, 3), (2, 4)]


@pytest.mark.parametrize("n, m, lift", [(1, 0, 6), (2, 1, 10), (3, 2, 13)])
def test_reduction_sizes_and_lift(n, m, lift):
    g = make_shape("path", n=n)
    gs, rmap = reduce_gstar(g)
    assert gs.n == 6 * n and gs.m == m + 5 * n
    f = solve_exact(g, DR).certificate
    lifted = lift_drdf(g, f, rmap)
    assert lifted.weight == lift == f.weight + 3 * n + 1
    assert is_valid(gs, lifted, DRM)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=5))
def test_lift_on_random_graphs(g):
    gs, rmap = reduce_gstar(g)
    f = solve_exact(g, DR).certificate
    lifted = lift_drdf(g, f, rmap)
    assert is_valid(gs, lifted, DRM) and lifted.weight == f.weight + 3 * g.n + 1


def test_lift_rejects_invalid():
    g = make_shape("path", n=2)
    gs, rmap = reduce_gstar(g)
    with pytest.raises(ConstructionError):
        lift_drdf(g, Labeling((0, 0), 3), rmap)


def test_reduction_map_layout():
    _, rmap = reduce_gstar(make_shape("path", n=2))
    assert rmap.as_dict()["gadgets"][1] == {"x": 1, "a": 7, "y": 8, "b": 9, "c": 10, "d": 11}


def test_sharpness_graphs():
    g = sharpness_graph(3, 2, True)
    assert g.n == 10 and g.degree(9) == 0
    assert solve_exact(g, ParamKind.MAX_DOM).value == 4
    assert solve_exact(g, DRM).value == 11
    g = sharpness_graph(3, 3, False)
    assert g.n == 12
    assert solve_exact(g, DRM).value == 10
    with pytest.raises(ConstructionError):
        sharpness_graph(3, 2, False)


def test_complete_plus_pendant():
    g = complete_plus_pendant(4)
    assert g.n == 5 and g.degree(4) == 1
    assert solve_exact(g, DR).value == 3 and solve_exact(g, DRM).value == 4
