import pytest
from hypothesis import given, settings

from maxdrd.constructions import complete, cycle, path, star
from maxdrd.graph import build_graph
from maxdrd.labeling import ALL_KINDS, ParamKind, is_valid
from maxdrd.solver import (SearchBudgetExceeded, brute_force_value, enumerate_optimal,
                           search_order, solve_exact)
from conftest import graphs

DR, DRM = ParamKind.DRDF, ParamKind.MDRDF


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.value)
@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_matches_brute_force(kind, g):
    res = solve_exact(g, kind)
    assert res.value == brute_force_value(g, kind)
    assert res.certificate.weight == res.value
    assert is_valid(g, res.certificate, kind)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_parameter_chain(g):
    v = {k: solve_exact(g, k).value for k in ALL_KINDS}
    assert v[ParamKind.DOM] <= v[ParamKind.MAX_DOM]
    assert v[ParamKind.RDF] <= v[ParamKind.MRDF]
    assert v[DR] <= v[DRM]
    assert v[ParamKind.MRDF] < v[DRM]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_certificate_is_lex_min_optimum(g):
    res = solve_exact(g, DRM)
    opt = enumerate_optimal(g, DRM)
    assert not opt.overflow
    assert opt.labelings[0] == res.certificate
    assert all(lab.weight == res.value and is_valid(g, lab, DRM) for lab in opt.labelings)


def test_known_values():
    assert solve_exact(path(4), DRM).certificate.labels == (1, 2, 0, 2)
    assert solve_exact(path(3), DR).certificate.labels == (0, 3, 0)
    assert solve_exact(complete(5), DRM).value == 6
    assert solve_exact(star(6), DRM).value == 4
    assert solve_exact(cycle(7), DRM).value == 8
    assert solve_exact(build_graph(1, []), DRM).certificate.labels == (2,)
    with pytest.raises(ValueError):
        solve_exact(build_graph(0, []), DRM)


def test_isolated_vertices():
    g = build_graph(3, [])
    assert solve_exact(g, DR).value == 6
    assert solve_exact(g, DRM).value == 6
    assert solve_exact(g, ParamKind.MAX_DOM).value == 3


def test_enumerate_cap():
    opt = enumerate_optimal(build_graph(4, []), ParamKind.RDF, cap=1)
    assert opt.value == 4 and len(opt.labelings) == 1 and not opt.overflow
    opt = enumerate_optimal(cycle(6), DRM, cap=2)
    assert opt.overflow and len(opt.labelings) == 2


def test_budget_exceeded_reports_upper_bound():
    with pytest.raises(SearchBudgetExceeded) as info:
        solve_exact(cycle(12), DRM, budget=20)
    exc = info.value
    assert exc.best_value >= 13
    assert exc.best_labeling is None or is_valid(cycle(12), exc.best_labeling, DRM)


def test_search_order_is_permutation():
    g = build_graph(6, [(0, 1), (1, 2), (1, 3), (4, 5)])
    order = search_order(g)
    assert sorted(order) == list(range(6)) and order[0] == 1
