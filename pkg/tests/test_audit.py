import pytest

from maxdrd.audit import (CHECK_IDS, CorpusSpec, audit, audit_corpus, audit_many, parse_checks)
from maxdrd.constructions import FamilyFSpec, family_f_build, make_shape
from maxdrd.corpus import iter_small_graphs
from maxdrd.graph import build_graph
from conftest import spider


def by_id(report):
    return {c.id: c for c in report.checks}


def test_p4_report():
    r = by_id(audit(make_shape("path", n=4)))
    assert r["B12"].status == "ok" and r["B12"].equality and r["B12"].predicted_equality
    assert r["B1"].equality and r["B1"].predicted_equality
    assert r["B10"].status == "n/a"


def test_k2_is_b3_equality():
    r = by_id(audit(build_graph(2, [(0, 1)])))
    assert r["B3"].equality and r["B3"].predicted_equality


def test_disconnected_runs_any_graph_checks_only():
    r = audit(build_graph(4, [(0, 1)]))
    evaluated = {c.id.split(".")[0] for c in r.checks if c.applicable}
    assert evaluated == {"B2", "B5", "B6", "B7"}


def test_edgeless_b2_equality():
    r = by_id(audit(build_graph(3, [])))
    assert r["B2"].equality and r["B2"].predicted_equality


def test_spider_fails_b12_only():
    r = audit(spider(), graph_id="spider")
    assert [c.id for c in r.failures] == ["B12"]
    c = by_id(r)["B12"]
    assert c.lhs == 9 and float(c.rhs) == 8.75


def test_select_checks():
    assert parse_checks("all") is None
    assert parse_checks("B1, b5") == ["B1", "B5"]
    with pytest.raises(ValueError):
        parse_checks("B99")
    r = audit(make_shape("cycle", n=5), checks=["B5"])
    assert [c.id for c in r.checks] == ["B5"]


def test_budget_overrun_is_skipped():
    r = audit(make_shape("cycle", n=9), checks=["B5"], budget=5)
    assert by_id(r)["B5"].status == "skipped"


def test_all_connected_up_to_six_pass():
    reports = audit_many(iter_small_graphs(6))
    assert not [(r.graph, c.id) for r in reports for c in r.failures]
    for r in reports:
        for c in r.checks:
            if c.predicted_equality is not None and c.status == "ok":
                assert c.equality == c.predicted_equality, (r.graph, c.id)


def test_family_f_predicted_equality():
    r = by_id(audit(family_f_build(FamilyFSpec.star_spine(3))))
    assert r["B12"].equality and r["B12"].predicted_equality
    assert r["B13"].equality and r["B13"].predicted_equality


def test_corpus_report_deterministic_across_workers():
    spec = CorpusSpec(max_n=4, random_n=(7,), count=6, seed=2)
    one = audit_corpus(spec, workers=1).dumps()
    two = audit_corpus(spec, workers=2).dumps()
    assert one == two


def test_check_ids():
    assert CHECK_IDS[0] == "B1" and "P2" in CHECK_IDS
