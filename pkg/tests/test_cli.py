import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from maxdrd.cli import run
from maxdrd.graph import parse_graph

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def schema(name):
    return json.loads((SCHEMAS / name).read_text())


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p4(tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    return f


def test_solve(capsys, p4):
    code, out, _ = call(capsys, "solve", "--param", "mdrdf", "--input", p4, "--certificate")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("solve.json"))
    assert code == 0 and doc["value"] == 5 and doc["labels"] == [1, 2, 0, 2]


def test_solve_incomplete(capsys, tmp_path):
    f = tmp_path / "c.txt"
    call(capsys, "gen", "--shape", "cycle", "--n", 12, "--output", f)
    code, out, _ = call(capsys, "solve", "--param", "mdrdf", "--input", f, "--budget", 10)
    doc = json.loads(out)
    jsonschema.validate(doc, schema("solve.json"))
    assert code == 1 and doc["complete"] is False and "value" not in doc


def test_tree_solve(capsys, p4):
    code, out, _ = call(capsys, "tree-solve", "--param", "drdf", "--input", p4, "--plain")
    assert code == 0 and out.strip() == "drdf 5"


def test_tree_solve_rejects_cycle(capsys, tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out, err = call(capsys, "tree-solve", "--param", "mdrdf", "--input", f)
    assert code == 2 and out == "" and "closes a cycle" in err and err.count("\n") == 1


def test_validate(capsys, p4):
    code, out, _ = call(capsys, "validate", "--input", p4, "--labels", "0,3,0,3", "--param", "mdrdf")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("validate.json"))
    assert code == 1 and doc["violations"][0]["clause"] == "V_0 dominates"
    code, out, _ = call(capsys, "validate", "--input", p4, "--labels", "1,2,0,2", "--param", "mdrdf")
    assert code == 0 and json.loads(out)["valid"]


def test_validate_bad_labels(capsys, p4):
    code, _, err = call(capsys, "validate", "--input", p4, "--labels", "1,5,0,2", "--param", "mdrdf")
    assert code == 2 and "error" in err


@pytest.mark.parametrize("argv, n, m", [
    (["--shape", "path", "--n", 6], 6, 5),
    (["--shape", "double_star", "--r", 2, "--s", 3], 7, 6),
    (["--family-f", "--k", 3, "--spine", "star"], 12, 11),
    (["--family-f", "--k", 3, "--spine-edges", "1-3,2-3"], 12, 11),
    (["--sharpness", "--cycle", 3, "--t", 2, "--isolated"], 10, 9),
])
def test_gen_round_trip(capsys, argv, n, m):
    code, out, _ = call(capsys, "gen", *argv)
    g = parse_graph(out)
    assert code == 0 and (g.n, g.m) == (n, m)


def test_gen_reduce_with_sidecar(capsys, p4, tmp_path):
    side = tmp_path / "map.json"
    code, out, _ = call(capsys, "gen", "--reduce", p4, "--sidecar", side)
    g = parse_graph(out)
    doc = json.loads(side.read_text())
    jsonschema.validate(doc, schema("reduction_map.json"))
    assert code == 0 and g.n == 24 and doc["gadgets"][0]["y"] == 5


def test_gen_usage_errors(capsys):
    assert call(capsys, "gen", "--family-f")[0] == 2
    assert call(capsys, "gen", "--shape", "cycle", "--n", 2)[0] == 2
    assert call(capsys, "gen")[0] == 2


def test_oracle(capsys):
    code, out, _ = call(capsys, "oracle", "--shape", "path", "--n", 30, "--param", "mdrdf", "--witness")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("oracle.json"))
    assert code == 0 and doc["value"] == 31 and sum(doc["labels"]) == 31
    assert call(capsys, "oracle", "--shape", "cycle", "--n", 5, "--param", "drdf")[0] == 2


def test_audit(capsys, p4):
    code, out, _ = call(capsys, "audit", "--input", p4, "--checks", "all", "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("audit.json"))
    assert code == 0 and doc["params"]["gamma_dRm"] == 5


def test_audit_failure_exit(capsys, tmp_path):
    f = tmp_path / "spider.txt"
    f.write_text("7 6\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n")
    code, out, _ = call(capsys, "audit", "--input", f, "--checks", "B12")
    assert code == 1 and json.loads(out)["checks"][0]["status"] == "fail"


def test_audit_corpus(capsys):
    code, out, _ = call(capsys, "audit-corpus", "--max-n", 4, "--random-n", 6, "--count", 5, "--seed", 1)
    doc = json.loads(out)
    jsonschema.validate(doc, schema("audit_corpus.json"))
    assert code == 0 and doc["graphs"] == 10 + 5


def test_audit_corpus_needs_seed(capsys):
    code, _, err = call(capsys, "audit-corpus", "--max-n", 3, "--random-n", 6)
    assert code == 2 and "--seed" in err


def test_usage_and_io_errors(capsys, tmp_path):
    assert call(capsys, "solve", "--param", "bogus", "--input", "x")[0] == 2
    assert call(capsys, "solve", "--param", "mdrdf", "--input", tmp_path / "missing")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    code, _, err = call(capsys, "solve", "--param", "mdrdf", "--input", bad)
    assert code == 2 and "self-loop" in err


def test_dimacs_input(capsys, tmp_path):
    f = tmp_path / "g.col"
    f.write_text("c k3\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    code, out, _ = call(capsys, "solve", "--param", "mdrdf", "--input", f)
    assert code == 0 and json.loads(out)["value"] == 4


def test_console_entry_point(p4):
    proc = subprocess.run([sys.executable, "-m", "maxdrd", "solve", "--param", "drdf", "--input", str(p4)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 5
