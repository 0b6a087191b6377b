import pytest
from hypothesis import given, strategies as st

from maxdrd.graph import build_graph
from maxdrd.labeling import (ALL_KINDS, Labeling, LabelingError, ParamKind, is_dominating,
                             is_maximal_dominating, is_valid, parse_labels, violations,
                             witness_vertices)
from conftest import graphs

P4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])


def v0_dominates(g, f):
    zeros = {v for v in range(g.n) if f[v] == 0}
    return all(v in zeros or zeros & set(g.adj[v]) for v in range(g.n))


def reference_valid(g, f, kind):
    """Direct transcription of the definitions, kept independent of the library."""
    for v in range(g.n):
        nb = [f[u] for u in g.adj[v]]
        if kind.base is ParamKind.DOM and f[v] == 0 and 1 not in nb:
            return False
        if kind.base is ParamKind.RDF and f[v] == 0 and 2 not in nb:
            return False
        if kind.base is ParamKind.DRDF:
            if f[v] == 0 and not (3 in nb or nb.count(2) >= 2):
                return False
            if f[v] == 1 and max(nb, default=0) < 2:
                return False
    return not (kind.maximal and v0_dominates(g, f))


@st.composite
def labelled(draw, kind):
    g = draw(graphs(max_n=7))
    f = draw(st.lists(st.integers(0, kind.max_label), min_size=g.n, max_size=g.n))
    return g, Labeling(tuple(f), kind.max_label)


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.value)
@given(data=st.data())
def test_validator_matches_definitions(kind, data):
    g, lab = data.draw(labelled(kind))
    assert is_valid(g, lab, kind) == reference_valid(g, lab.labels, kind)


@given(graphs(max_n=7), st.data())
def test_witness_iff_v0_not_dominating(g, data):
    f = data.draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n))
    assert bool(witness_vertices(g, f)) == (not v0_dominates(g, f))


def test_p4_examples():
    assert is_valid(P4, parse_labels("1,2,0,2"), ParamKind.MDRDF)
    assert is_valid(P4, parse_labels("0,3,0,3"), ParamKind.DRDF)
    found = violations(P4, parse_labels("0,3,0,3"), ParamKind.MDRDF)
    assert [v.clause for v in found] == ["V_0 dominates"]


def test_every_violation_listed():
    found = violations(P4, parse_labels("0,1,0,0"), ParamKind.DRDF)
    assert [(v.clause, v.vertex) for v in found] == [
        ("zero-needs-3-or-two-2", 0), ("one-needs-2-or-3", 1),
        ("zero-needs-3-or-two-2", 2), ("zero-needs-3-or-two-2", 3)]


def test_empty_set_dominates_only_empty_graph():
    assert is_dominating(build_graph(0, []), [])
    assert not is_dominating(build_graph(1, []), [])
    assert is_maximal_dominating(P4, [0, 1, 3]) and is_maximal_dominating(P4, [0, 1, 2, 3])
    assert not is_maximal_dominating(P4, [1, 2])


def test_labeling_validation():
    with pytest.raises(LabelingError):
        Labeling((0, 4), 3)
    with pytest.raises(LabelingError):
        parse_labels("0,a,1")
    with pytest.raises(LabelingError):
        violations(P4, parse_labels("1,1,1"), ParamKind.MDRDF)
    with pytest.raises(LabelingError):
        violations(P4, Labeling((1, 1, 1, 1), 1), ParamKind.MDRDF)


def test_labeling_basics():
    lab = parse_labels("3,0,2,1")
    assert lab.weight == 6 and str(lab) == "3,0,2,1"
    assert lab.classes() == (frozenset({1}), frozenset({3}), frozenset({2}), frozenset({0}))
    assert ParamKind.parse("MDRDF") is ParamKind.MDRDF
    assert ParamKind.MDRDF.base is ParamKind.DRDF and ParamKind.MDRDF.maximal
